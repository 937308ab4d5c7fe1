#include "lclwb/subshift.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclwb/errors.hpp"

namespace lclwb {

ConfigEnumerator::ConfigEnumerator(const SiteSpace& space, const LCLInstance& instance,
                                   std::vector<std::optional<Color>> pinned)
    : instance_empty_(instance.empty()),
      n_(space.size()),
      alphabet_(instance.alphabet_size()),
      compiled_(CompiledLCL::build(space, instance)),
      pinned_(std::move(pinned)) {
    if (pinned_.empty()) pinned_.assign(n_, std::nullopt);
    if (pinned_.size() != n_)
        throw std::invalid_argument("ConfigEnumerator: pinned vector size mismatch");
    for (const auto& p : pinned_)
        if (p && (*p < 0 || *p >= alphabet_))
            throw std::invalid_argument("ConfigEnumerator: pinned color outside alphabet");

    watchers_.resize(n_);
    alive_.assign(n_, 0);
    std::uint32_t slot = 0;
    for (std::uint32_t site = 0; site < n_; ++site) {
        const auto fits = compiled_.fits(site);
        alive_[site] = static_cast<std::uint32_t>(fits.size());
        for (const auto& f : fits) {
            for (const auto& req : compiled_.requirements(f))
                watchers_[req.site].push_back({site, slot, req.color});
            slot_owner_.push_back(site);
            ++slot;
        }
    }
    refuted_.assign(slot, 0);
    colors_.assign(n_, 0);
    choice_.assign(n_, 0);
    depth_mark_.assign(n_, 0);
}

bool ConfigEnumerator::refute_assignments(std::uint32_t site, Color color) {
    for (const auto& w : watchers_[site]) {
        if (w.color == color || refuted_[w.fit_slot]) continue;
        refuted_[w.fit_slot] = 1;
        trail_.push_back(w.fit_slot);
        if (--alive_[w.owner] == 0) return false;
    }
    return true;
}

void ConfigEnumerator::undo_assignments(std::size_t trail_mark) {
    while (trail_.size() > trail_mark) {
        const auto slot = trail_.back();
        trail_.pop_back();
        refuted_[slot] = 0;
        ++alive_[slot_owner_[slot]];
    }
}

std::optional<std::vector<Color>> ConfigEnumerator::next() {
    if (exhausted_) return std::nullopt;
    std::size_t d;
    Color start;
    if (!started_) {
        started_ = true;
        if (instance_empty_ && n_ > 0) {
            // No pattern can ever match anywhere: nothing is valid.
            exhausted_ = true;
            return std::nullopt;
        }
        d = 0;
        start = 0;
    } else {
        if (n_ == 0) {
            exhausted_ = true;
            return std::nullopt;
        }
        d = n_ - 1;
        undo_assignments(depth_mark_[d]);
        start = choice_[d] + 1;
    }

    while (true) {
        if (d == n_) return colors_;
        bool advanced = false;
        for (Color c = start; c < alphabet_; ++c) {
            if (pinned_[d] && *pinned_[d] != c) continue;
            const auto mark = trail_.size();
            colors_[d] = c;
            if (refute_assignments(static_cast<std::uint32_t>(d), c)) {
                choice_[d] = c;
                depth_mark_[d] = mark;
                ++d;
                start = 0;
                advanced = true;
                break;
            }
            undo_assignments(mark);
        }
        if (!advanced) {
            if (d == 0) {
                exhausted_ = true;
                return std::nullopt;
            }
            --d;
            undo_assignments(depth_mark_[d]);
            start = choice_[d] + 1;
        }
    }
}

WindowedSubshift make_windowed_subshift(const GroupOracle& oracle, LCLInstance instance,
                                        WindowPtr window) {
    WindowSites sites(oracle, window);
    const CompiledLCL compiled = CompiledLCL::build(sites, instance);
    WindowedSubshift s;
    for (std::uint32_t i = 0; i < sites.size(); ++i)
        if (compiled.interior(i)) s.interior.push_back(i);
    s.instance = std::move(instance);
    s.window = std::move(window);
    return s;
}

EnumerationResult enumerate_window_configs(const GroupOracle& oracle, const LCLInstance& instance,
                                           WindowPtr window, std::uint64_t limit) {
    WindowSites sites(oracle, window);
    ConfigEnumerator en(sites, instance);
    EnumerationResult result;
    while (auto colors = en.next()) {
        if (result.total == limit) {
            result.complete = false;
            return result;
        }
        result.configs.push_back(make_configuration(window, std::move(*colors)));
        ++result.total;
    }
    return result;
}

WindowConfiguration shift_config(const GroupOracle& oracle, const GroupElement& g,
                                 const WindowConfiguration& x) {
    const ElementSet& w = *x.window;
    std::vector<GroupElement> pts;
    for (const auto& delta : w)
        if (w.contains(oracle.multiply(delta, g))) pts.push_back(delta);
    ElementSet dom = ElementSet::of(std::move(pts));
    std::vector<Color> colors;
    colors.reserve(dom.size());
    for (const auto& delta : dom) colors.push_back(x.colors[*w.index_of(oracle.multiply(delta, g))]);
    return WindowConfiguration{share(std::move(dom)), std::move(colors)};
}

Color canonical_coloring(const GroupOracle& oracle, const WindowConfiguration& x) {
    if (x.empty()) throw std::invalid_argument("canonical_coloring: empty configuration");
    const auto idx = x.window->index_of(oracle.identity());
    if (!idx) throw std::invalid_argument("canonical_coloring: identity not in the domain");
    return x.colors[*idx];
}

ExtensionReport extension_check(const GroupOracle& oracle, const LCLInstance& instance,
                                WindowPtr window, WindowPtr larger_window,
                                std::uint64_t sample_limit) {
    if (!window->is_subset_of(*larger_window))
        throw std::invalid_argument("extension_check: W must be a subset of W'");

    // Map each W point to its slot in W'.
    std::vector<std::size_t> slot(window->size());
    for (std::size_t i = 0; i < window->size(); ++i) slot[i] = *larger_window->index_of((*window)[i]);

    WindowSites base_sites(oracle, window);
    ConfigEnumerator bases(base_sites, instance);
    WindowSites big_sites(oracle, larger_window);

    ExtensionReport report;
    while (auto base = bases.next()) {
        if (report.base_count == sample_limit) {
            report.bases_complete = false;
            break;
        }
        ++report.base_count;
        std::vector<std::optional<Color>> pinned(larger_window->size(), std::nullopt);
        for (std::size_t i = 0; i < window->size(); ++i) pinned[slot[i]] = (*base)[i];
        ConfigEnumerator extensions(big_sites, instance, std::move(pinned));
        if (extensions.next())
            ++report.extendable;
        else
            ++report.non_extendable;
    }
    return report;
}

WindowConfiguration pullback_group_coloring(const FiniteAction& action,
                                            const std::vector<Color>& site_colors, int basepoint,
                                            WindowPtr ball) {
    if (site_colors.size() != action.site_count())
        throw std::invalid_argument("pullback_group_coloring: color count does not match sites");
    if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= action.site_count())
        throw std::invalid_argument("pullback_group_coloring: basepoint out of range");

    std::vector<int> hit(action.site_count(), -1);
    std::vector<Color> colors;
    colors.reserve(ball->size());
    for (std::size_t i = 0; i < ball->size(); ++i) {
        const int site = action.act((*ball)[i], basepoint);
        if (hit[site] >= 0)
            throw std::invalid_argument(
                "pullback_group_coloring: orbit map is not injective on the ball (" +
                action.group().describe((*ball)[static_cast<std::size_t>(hit[site])]) + " and " +
                action.group().describe((*ball)[i]) + " collide)");
        hit[site] = static_cast<int>(i);
        colors.push_back(site_colors[site]);
    }
    return WindowConfiguration{std::move(ball), std::move(colors)};
}

}  // namespace lclwb

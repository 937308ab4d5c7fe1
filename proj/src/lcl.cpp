#include "lclwb/lcl.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclwb/errors.hpp"

namespace lclwb {

Pattern::Pattern(std::vector<std::pair<GroupElement, Color>> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Pattern: domain must be nonempty");
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i].first == entries_[i + 1].first)
            throw std::invalid_argument("Pattern: duplicate domain point");
    for (const auto& [e, c] : entries_)
        if (c < 0) throw std::invalid_argument("Pattern: colors must be >= 0");
}

std::optional<Color> Pattern::color_of(const GroupElement& e) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const auto& entry, const GroupElement& x) { return entry.first < x; });
    if (it == entries_.end() || it->first != e) return std::nullopt;
    return it->second;
}

ElementSet Pattern::domain() const {
    std::vector<GroupElement> pts;
    pts.reserve(entries_.size());
    for (const auto& [e, c] : entries_) pts.push_back(e);
    return ElementSet::of(std::move(pts));
}

Color Pattern::max_color() const {
    Color m = 0;
    for (const auto& [e, c] : entries_) m = std::max(m, c);
    return m;
}

Pattern pattern_translate(const GroupOracle& oracle, const GroupElement& g, const Pattern& p) {
    const GroupElement ginv = oracle.inverse(g);
    std::vector<std::pair<GroupElement, Color>> entries;
    entries.reserve(p.size());
    for (const auto& [delta, c] : p.entries()) entries.emplace_back(oracle.multiply(delta, ginv), c);
    return Pattern(std::move(entries));
}

bool patterns_compatible(const Pattern& a, const Pattern& b) {
    // Merge walk over the two sorted entry lists.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a.point(i) < b.point(j)) {
            ++i;
        } else if (b.point(j) < a.point(i)) {
            ++j;
        } else {
            if (a.color(i) != b.color(j)) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

LCLInstance::LCLInstance(std::vector<Pattern> patterns, int alphabet_size)
    : patterns_(std::move(patterns)) {
    int max_used = -1;
    for (const auto& p : patterns_) max_used = std::max(max_used, p.max_color());
    alphabet_ = alphabet_size < 0 ? max_used + 1 : alphabet_size;
    if (alphabet_ <= max_used)
        throw std::invalid_argument("LCLInstance: alphabet does not cover pattern colors");
}

WindowConfiguration make_configuration(WindowPtr window, std::vector<Color> colors) {
    if (!window) throw std::invalid_argument("make_configuration: null window");
    if (window->size() != colors.size())
        throw std::invalid_argument("make_configuration: color count does not match window size");
    return WindowConfiguration{std::move(window), std::move(colors)};
}

MatchResult matches_at(const SiteSpace& space, std::span<const Color> colors,
                       std::uint32_t site, const Pattern& p) {
    bool mismatch = false;
    for (const auto& [gamma, want] : p.entries()) {
        const auto t = space.translate(gamma, site);
        if (!t) return MatchResult::out_of_window;
        if (colors[*t] != want) mismatch = true;
    }
    return mismatch ? MatchResult::mismatch : MatchResult::match;
}

MatchResult matches_at(const GroupOracle& oracle, const WindowConfiguration& c,
                       const GroupElement& x, const Pattern& p) {
    WindowSites sites(oracle, c.window);
    const auto idx = c.window->index_of(x);
    if (!idx) throw std::invalid_argument("matches_at: x is not a window point");
    return matches_at(sites, c.colors, static_cast<std::uint32_t>(*idx), p);
}

CompiledLCL CompiledLCL::build(const SiteSpace& space, const LCLInstance& instance) {
    CompiledLCL out;
    const std::size_t n = space.size();
    out.fit_begin_.reserve(n + 1);
    out.fit_begin_.push_back(0);
    for (std::uint32_t site = 0; site < n; ++site) {
        for (std::uint32_t pi = 0; pi < instance.size(); ++pi) {
            const Pattern& p = instance[pi];
            const auto req_begin = static_cast<std::uint32_t>(out.requirements_.size());
            bool fits = true;
            for (const auto& [gamma, color] : p.entries()) {
                const auto t = space.translate(gamma, site);
                if (!t) {
                    fits = false;
                    break;
                }
                out.requirements_.push_back({*t, color});
            }
            if (fits) {
                out.fits_.push_back({pi, req_begin, static_cast<std::uint32_t>(out.requirements_.size())});
            } else {
                out.requirements_.resize(req_begin);
            }
        }
        out.fit_begin_.push_back(static_cast<std::uint32_t>(out.fits_.size()));
    }
    return out;
}

std::span<const CompiledLCL::Fit> CompiledLCL::fits(std::uint32_t site) const {
    return {fits_.data() + fit_begin_[site], fits_.data() + fit_begin_[site + 1]};
}

std::span<const CompiledLCL::Requirement> CompiledLCL::requirements(const Fit& f) const {
    return {requirements_.data() + f.req_begin, requirements_.data() + f.req_end};
}

VerifyResult verify_pi_coloring(const SiteSpace& space, std::span<const Color> colors,
                                const LCLInstance& instance) {
    if (colors.size() != space.size())
        throw std::invalid_argument("verify_pi_coloring: color count does not match site count");
    const std::size_t n = space.size();
    VerifyResult r;
    r.assignment.assign(n, -1);
    r.status.assign(n, PointStatus::boundary);

    if (instance.empty()) {
        // No pattern can ever match, with any window: every point fails.
        if (n > 0) {
            r.ok = false;
            r.first_failure = 0;
            r.failed_count = n;
            std::fill(r.status.begin(), r.status.end(), PointStatus::failed);
        }
        return r;
    }

    const CompiledLCL compiled = CompiledLCL::build(space, instance);
    for (std::uint32_t site = 0; site < n; ++site) {
        const auto fits = compiled.fits(site);
        if (fits.empty()) {
            ++r.boundary_count;
            continue;
        }
        std::int32_t found = -1;
        for (const auto& f : fits) {
            bool match = true;
            for (const auto& req : compiled.requirements(f)) {
                if (colors[req.site] != req.color) {
                    match = false;
                    break;
                }
            }
            if (match) {
                found = static_cast<std::int32_t>(f.pattern);
                break;
            }
        }
        if (found >= 0) {
            r.assignment[site] = found;
            r.status[site] = PointStatus::matched;
            ++r.matched_count;
        } else {
            r.status[site] = PointStatus::failed;
            ++r.failed_count;
            if (!r.first_failure) r.first_failure = site;
            r.ok = false;
        }
    }
    return r;
}

VerifyResult verify_pi_coloring(const GroupOracle& oracle, const WindowConfiguration& c,
                                const LCLInstance& instance) {
    WindowSites sites(oracle, c.window);
    return verify_pi_coloring(sites, c.colors, instance);
}

std::vector<std::int32_t> first_match_map(const SiteSpace& space, std::span<const Color> colors,
                                          const LCLInstance& instance) {
    VerifyResult r = verify_pi_coloring(space, colors, instance);
    if (!r.ok)
        throw std::invalid_argument("first_match_map: coloring fails at site " +
                                    std::to_string(*r.first_failure) + " (" +
                                    space.site_label(*r.first_failure) + ")");
    return std::move(r.assignment);
}

LCLInstance pi_sn_generate(const GroupOracle& oracle, const GenSet& s, int n,
                           const ElementSet& window, std::uint64_t limit) {
    if (n < 1) throw std::invalid_argument("pi_sn_generate: n must be >= 1");
    const GroupElement id = oracle.identity();
    const auto id_idx = window.index_of(id);
    if (!id_idx) throw std::invalid_argument("pi_sn_generate: window must contain the identity");
    const std::size_t w = window.size();
    if (w > 62) throw limit_error("pi_sn_generate: window too large to enumerate");

    // Bitmask machinery over window points. A domain D is encoded as a mask
    // that always includes the identity bit.
    using Mask = std::uint64_t;
    const Mask full = w == 64 ? ~Mask(0) : (Mask(1) << w) - 1;

    // Every domain must contain S (condition (iii) applied to the identity),
    // so S ⊆ window is necessary for any pattern at all.
    Mask s_mask = 0;
    for (const auto& g : s) {
        const auto idx = window.index_of(g);
        if (!idx) return LCLInstance({}, n);
        s_mask |= Mask(1) << *idx;
    }

    // closure_mask[i]: mask of S·window[i] if it stays inside the window.
    std::vector<std::optional<Mask>> closure_mask(w);
    for (std::size_t i = 0; i < w; ++i) {
        Mask m = 0;
        bool inside = true;
        for (const auto& g : s) {
            const auto idx = window.index_of(oracle.multiply(g, window[i]));
            if (!idx) {
                inside = false;
                break;
            }
            m |= Mask(1) << *idx;
        }
        if (inside) closure_mask[i] = m;
    }

    std::vector<Pattern> patterns;
    std::uint64_t work = 0;

    // Iterate over all domains D with S ⊆ D ⊆ window by walking the subsets
    // of window ∖ S.
    const Mask free_bits = full & ~s_mask;
    Mask sub = 0;
    while (true) {
        const Mask dom = s_mask | sub;

        // Points of D whose color may equal the identity's color: those with
        // S·point ⊆ D. Everything else must take one of the other n-1 colors.
        std::vector<std::size_t> points;
        std::vector<bool> open;  // may share the identity's color
        for (std::size_t i = 0; i < w; ++i) {
            if (!(dom >> i & 1)) continue;
            points.push_back(i);
            open.push_back(closure_mask[i] && (*closure_mask[i] & ~dom) == 0);
        }

        // The identity takes any of the n colors; a point whose S-translate
        // stays inside D ("open") may reuse that color, every other point must
        // avoid it. Enumerating these choices directly is the pruned form of
        // "all value maps, filtered by condition (iii)".
        std::size_t id_pos = 0;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (points[j] == *id_idx) id_pos = j;

        for (Color c0 = 0; c0 < n; ++c0) {
            std::vector<std::vector<Color>> allowed(points.size());
            bool feasible = true;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == id_pos) {
                    allowed[j] = {c0};
                    continue;
                }
                for (Color c = 0; c < n; ++c)
                    if (open[j] || c != c0) allowed[j].push_back(c);
                if (allowed[j].empty()) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;

            std::vector<std::size_t> pos(points.size(), 0);
            while (true) {
                if (++work > limit) throw limit_error("pi_sn_generate: enumeration limit exceeded");
                std::vector<std::pair<GroupElement, Color>> entries;
                entries.reserve(points.size());
                for (std::size_t j = 0; j < points.size(); ++j)
                    entries.emplace_back(window[points[j]], allowed[j][pos[j]]);
                patterns.emplace_back(std::move(entries));

                std::size_t j = points.size();
                while (j > 0) {
                    --j;
                    if (pos[j] + 1 < allowed[j].size()) {
                        ++pos[j];
                        std::fill(pos.begin() + j + 1, pos.end(), 0);
                        break;
                    }
                    if (j == 0) {
                        j = points.size();  // exhausted marker
                        break;
                    }
                }
                if (j == points.size() || points.empty()) break;
            }
        }

        if (sub == free_bits) break;
        sub = (sub - free_bits) & free_bits;
    }

    std::sort(patterns.begin(), patterns.end());
    return LCLInstance(std::move(patterns), n);
}

LCLInstance freeness_lcl(const GroupOracle& oracle, const GroupElement& gamma) {
    oracle.check_element(gamma);
    if (oracle.is_identity(gamma))
        throw std::invalid_argument("freeness_lcl: gamma must not be the identity");
    std::vector<Pattern> patterns;
    for (Color a = 0; a < 3; ++a)
        for (Color b = 0; b < 3; ++b) {
            if (a == b) continue;
            patterns.push_back(Pattern({{oracle.identity(), a}, {gamma, b}}));
        }
    std::sort(patterns.begin(), patterns.end());
    return LCLInstance(std::move(patterns), 3);
}

}  // namespace lclwb

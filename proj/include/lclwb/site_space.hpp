#ifndef LCLWB_SITE_SPACE_HPP
#define LCLWB_SITE_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lclwb/group.hpp"

namespace lclwb {

// A finite set of sites together with the partial translations γ·site.
// Window sites translate by left multiplication inside the window; action
// sites translate through a finite action and are total.
class SiteSpace {
public:
    virtual ~SiteSpace() = default;
    virtual std::size_t size() const = 0;
    virtual std::optional<std::uint32_t> translate(const GroupElement& g, std::uint32_t site) const = 0;
    virtual std::string site_label(std::uint32_t site) const = 0;
};

class WindowSites final : public SiteSpace {
public:
    WindowSites(GroupOracle oracle, WindowPtr window)
        : oracle_(std::move(oracle)), window_(std::move(window)) {}

    std::size_t size() const override { return window_->size(); }

    std::optional<std::uint32_t> translate(const GroupElement& g, std::uint32_t site) const override {
        auto idx = window_->index_of(oracle_.multiply(g, (*window_)[site]));
        if (!idx) return std::nullopt;
        return static_cast<std::uint32_t>(*idx);
    }

    std::string site_label(std::uint32_t site) const override {
        return oracle_.describe((*window_)[site]);
    }

    const GroupOracle& oracle() const { return oracle_; }
    const WindowPtr& window() const { return window_; }

private:
    GroupOracle oracle_;
    WindowPtr window_;
};

// An action of the group on finitely many sites, given by one permutation
// per standard generator. Arbitrary elements act through their expression in
// the standard generators.
class FiniteAction {
public:
    // generator_images[i] is the permutation of sites induced by
    // standard_generators()[i]; each must be a bijection.
    FiniteAction(GroupOracle group, std::size_t site_count,
                 std::vector<std::vector<int>> generator_images);

    const GroupOracle& group() const { return group_; }
    std::size_t site_count() const { return sites_; }
    int act(const GroupElement& g, int site) const;

private:
    // Appends the generator word of g (1-based signed indices) to out.
    void generator_word(const GroupOracle& oracle, const GroupElement& g,
                        int index_offset, std::vector<int>& out) const;

    // Elements act through their generator decomposition, so the images must
    // respect the group's relations; returns the factor's generator count.
    int validate_relations(const GroupOracle& oracle, int index_offset) const;

    GroupOracle group_;
    std::size_t sites_ = 0;
    std::vector<std::vector<int>> forward_;
    std::vector<std::vector<int>> backward_;
    // Factorizations of finite-group elements into standard generators are a
    // single letter, so no table is needed per family.
};

class ActionSites final : public SiteSpace {
public:
    explicit ActionSites(FiniteAction action) : action_(std::move(action)) {}

    std::size_t size() const override { return action_.site_count(); }

    std::optional<std::uint32_t> translate(const GroupElement& g, std::uint32_t site) const override {
        return static_cast<std::uint32_t>(action_.act(g, static_cast<int>(site)));
    }

    std::string site_label(std::uint32_t site) const override {
        return "site" + std::to_string(site);
    }

    const FiniteAction& action() const { return action_; }

private:
    FiniteAction action_;
};

}  // namespace lclwb

#endif

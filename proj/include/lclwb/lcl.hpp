#ifndef LCLWB_LCL_HPP
#define LCLWB_LCL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lclwb/group.hpp"
#include "lclwb/site_space.hpp"

namespace lclwb {

using Color = int;

// A partial coloring of a finite nonempty subset of the group: the allowed
// local patterns of an LCL. Entries are kept sorted by element, so structural
// comparison doubles as the canonical pattern order.
class Pattern {
public:
    explicit Pattern(std::vector<std::pair<GroupElement, Color>> entries);

    std::size_t size() const { return entries_.size(); }
    const GroupElement& point(std::size_t i) const { return entries_[i].first; }
    Color color(std::size_t i) const { return entries_[i].second; }
    std::optional<Color> color_of(const GroupElement& e) const;
    const std::vector<std::pair<GroupElement, Color>>& entries() const { return entries_; }
    ElementSet domain() const;
    Color max_color() const;

    bool operator==(const Pattern&) const = default;
    auto operator<=>(const Pattern&) const = default;

private:
    std::vector<std::pair<GroupElement, Color>> entries_;
};

// γP with dom(γP) = dom(P)·γ⁻¹ and (γP)(δ) = P(δγ); the translation matching
// the shift convention used by the window subshift.
Pattern pattern_translate(const GroupOracle& oracle, const GroupElement& g, const Pattern& p);

// True iff the two patterns agree wherever their domains overlap, i.e. the
// union of the two partial functions is a function.
bool patterns_compatible(const Pattern& a, const Pattern& b);

// An ordered finite list of patterns together with its color alphabet
// {0, ..., alphabet_size-1}. The list order is significant: verification
// assigns the first matching pattern.
class LCLInstance {
public:
    LCLInstance() = default;
    // alphabet_size -1 derives the alphabet from the largest color used.
    explicit LCLInstance(std::vector<Pattern> patterns, int alphabet_size = -1);

    const std::vector<Pattern>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
    int alphabet_size() const { return alphabet_; }
    bool empty() const { return patterns_.empty(); }

    bool operator==(const LCLInstance&) const = default;

private:
    std::vector<Pattern> patterns_;
    int alphabet_ = 0;
};

// A total coloring of a finite window. The window is shared: configurations
// produced by enumeration all point at one ElementSet.
struct WindowConfiguration {
    WindowPtr window;
    std::vector<Color> colors;

    bool empty() const { return !window || window->empty(); }
    std::size_t size() const { return window ? window->size() : 0; }
};

WindowConfiguration make_configuration(WindowPtr window, std::vector<Color> colors);

enum class MatchResult { match, mismatch, out_of_window };

// Does pattern P match the coloring at the given site, i.e. is
// colors[γ·site] = P(γ) for every γ in dom(P)? Reports out_of_window when
// some required translate leaves the site space.
MatchResult matches_at(const SiteSpace& space, std::span<const Color> colors,
                       std::uint32_t site, const Pattern& p);

// Convenience overload on a window configuration and a group element.
MatchResult matches_at(const GroupOracle& oracle, const WindowConfiguration& c,
                       const GroupElement& x, const Pattern& p);

enum class PointStatus : unsigned char { matched, boundary, failed };

// Result of checking a coloring against an instance. A site is interior when
// at least one pattern's translated domain fits inside the space; interior
// sites must match some pattern, sites where nothing fits are skipped as
// boundary. The assignment records the first matching pattern per site.
struct VerifyResult {
    bool ok = true;
    std::vector<std::int32_t> assignment;  // pattern index, or -1
    std::vector<PointStatus> status;
    std::optional<std::uint32_t> first_failure;
    std::size_t matched_count = 0;
    std::size_t boundary_count = 0;
    std::size_t failed_count = 0;
};

VerifyResult verify_pi_coloring(const SiteSpace& space, std::span<const Color> colors,
                                const LCLInstance& instance);
VerifyResult verify_pi_coloring(const GroupOracle& oracle, const WindowConfiguration& c,
                                const LCLInstance& instance);

// The deterministic first-match pattern assignment; throws
// std::invalid_argument when verification fails.
std::vector<std::int32_t> first_match_map(const SiteSpace& space, std::span<const Color> colors,
                                          const LCLInstance& instance);

inline constexpr std::uint64_t default_pi_sn_limit = 10'000'000;

// The window-bounded fragment of the LCL Π_{S,n}: all n-colorings P with
// dom(P) ⊆ window such that the identity lies in dom(P) and Sγ ⊆ dom(P) for
// every γ colored like the identity. The full LCL is infinite; the fragment
// plus (S, n) regenerates it deterministically.
LCLInstance pi_sn_generate(const GroupOracle& oracle, const GenSet& s, int n,
                           const ElementSet& window, std::uint64_t limit = default_pi_sn_limit);

// The six injections {1, γ} -> {0, 1, 2}; colorable exactly on γ-fixed-point
// free spaces (at window scale).
LCLInstance freeness_lcl(const GroupOracle& oracle, const GroupElement& gamma);

// Per-site match tables for one instance over one site space: which patterns
// fit at each site and which (site, color) requirements each fit imposes.
// Built once, then shared by verification and enumeration.
class CompiledLCL {
public:
    struct Requirement {
        std::uint32_t site;
        Color color;
    };
    struct Fit {
        std::uint32_t pattern;
        std::uint32_t req_begin;
        std::uint32_t req_end;
    };

    static CompiledLCL build(const SiteSpace& space, const LCLInstance& instance);

    std::size_t site_count() const { return fit_begin_.size() - 1; }
    bool interior(std::uint32_t site) const { return fit_begin_[site + 1] > fit_begin_[site]; }
    std::span<const Fit> fits(std::uint32_t site) const;
    std::span<const Requirement> requirements(const Fit& f) const;
    std::size_t total_fits() const { return fits_.size(); }

private:
    std::vector<Requirement> requirements_;
    std::vector<Fit> fits_;
    std::vector<std::uint32_t> fit_begin_;  // per site, into fits_
};

}  // namespace lclwb

#endif

#ifndef LCLWB_SUBSHIFT_HPP
#define LCLWB_SUBSHIFT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lclwb/group.hpp"
#include "lclwb/lcl.hpp"
#include "lclwb/site_space.hpp"

namespace lclwb {

// Streams the valid configurations of a site space in canonical order
// (lexicographic over sites in site order, colors ascending), by
// backtracking with forward checking: a partial assignment is abandoned as
// soon as some interior site has every fitting pattern refuted. Sites may be
// pinned to fixed colors, which is how extension search reuses the machinery.
class ConfigEnumerator {
public:
    ConfigEnumerator(const SiteSpace& space, const LCLInstance& instance,
                     std::vector<std::optional<Color>> pinned = {});

    // Next valid configuration, or nullopt when exhausted.
    std::optional<std::vector<Color>> next();

private:
    bool refute_assignments(std::uint32_t site, Color color);  // false on dead interior site
    void undo_assignments(std::size_t trail_mark);

    bool instance_empty_;
    std::size_t n_;
    int alphabet_;
    CompiledLCL compiled_;
    std::vector<std::optional<Color>> pinned_;

    // watchers_[s]: fits whose requirement list touches site s, as (owner
    // site, fit slot, requirement color).
    struct Watch {
        std::uint32_t owner;
        std::uint32_t fit_slot;
        Color color;
    };
    std::vector<std::vector<Watch>> watchers_;
    std::vector<std::uint32_t> alive_;     // per site: fitting patterns not yet refuted
    std::vector<char> refuted_;            // per fit slot
    std::vector<std::uint32_t> slot_owner_;
    std::vector<std::uint32_t> trail_;     // refuted fit slots, for undo
    std::vector<std::size_t> depth_mark_;  // trail size when each depth was entered
    std::vector<Color> choice_;            // color assigned at each depth
    std::vector<Color> colors_;
    bool exhausted_ = false;
    bool started_ = false;
};

// The window subshift of an instance: the valid window configurations under
// the interior/boundary verification policy.
struct WindowedSubshift {
    LCLInstance instance;
    WindowPtr window;
    std::vector<std::uint32_t> interior;  // sites where some pattern fits
};

WindowedSubshift make_windowed_subshift(const GroupOracle& oracle, LCLInstance instance,
                                        WindowPtr window);

struct EnumerationResult {
    std::vector<WindowConfiguration> configs;  // canonical order, up to limit
    bool complete = true;                      // false when the limit was hit
    std::uint64_t total = 0;                   // exact when complete
};

EnumerationResult enumerate_window_configs(const GroupOracle& oracle, const LCLInstance& instance,
                                           WindowPtr window, std::uint64_t limit);

// (γ·x)_δ = x_{δγ} restricted to the window: the result lives on
// W·γ⁻¹ ∩ W and is empty when the translate misses the window entirely.
WindowConfiguration shift_config(const GroupOracle& oracle, const GroupElement& g,
                                 const WindowConfiguration& x);

// The canonical coloring c(x) = x at the identity.
Color canonical_coloring(const GroupOracle& oracle, const WindowConfiguration& x);

struct ExtensionReport {
    std::uint64_t base_count = 0;        // valid configurations of W examined
    std::uint64_t extendable = 0;        // those with at least one valid W' extension
    std::uint64_t non_extendable = 0;
    bool bases_complete = true;          // false when the sample limit cut enumeration short
};

// For each valid configuration of W (up to sample_limit), search for a valid
// extension to W' ⊇ W. Universally extendable samples across growing W' are
// evidence, not proof, that the full subshift is nonempty.
ExtensionReport extension_check(const GroupOracle& oracle, const LCLInstance& instance,
                                WindowPtr window, WindowPtr larger_window,
                                std::uint64_t sample_limit);

// Pulls a coloring of an orbit window back to the group: c_Γ(γ) = c(γ·x₀) on
// the given ball. Throws std::invalid_argument when the orbit map is not
// injective on the ball (the action is not free enough for the pullback).
WindowConfiguration pullback_group_coloring(const FiniteAction& action,
                                            const std::vector<Color>& site_colors, int basepoint,
                                            WindowPtr ball);

}  // namespace lclwb

#endif

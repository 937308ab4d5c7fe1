#ifndef LCLWB_SEPARATION_HPP
#define LCLWB_SEPARATION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "lclwb/group.hpp"
#include "lclwb/lcl.hpp"

namespace lclwb {

// Components of the monochromatic S-adjacency graph on a window: x ~ x' iff
// x' ∈ Sx and c(x) = c(x'). A component touches the boundary when some member
// has an S-translate outside the window; its measured size is then only a
// lower bound for its true size in the group.
struct ComponentGraph {
    std::vector<int> component_of;           // per site
    std::vector<std::vector<int>> members;   // per component, sorted
    std::vector<char> boundary_touching;     // per component
    std::size_t component_count() const { return members.size(); }
};

ComponentGraph component_graph(const GroupOracle& oracle, const WindowConfiguration& c,
                               const GenSet& s);

struct SeparationReport {
    bool separated = true;  // every interior component has size <= k
    int k = 0;
    std::size_t interior_max = 0;   // exact sizes
    std::size_t boundary_max = 0;   // lower bounds only
    std::size_t component_count = 0;
    std::size_t interior_component_count = 0;
    std::size_t boundary_component_count = 0;
    std::map<std::size_t, std::size_t> size_histogram;  // size -> count, all components
    std::size_t max_size() const { return interior_max > boundary_max ? interior_max : boundary_max; }
};

SeparationReport summarize_components(const ComponentGraph& cg, int k);

// Verdict true iff every non-boundary-touching component has size <= k.
// Boundary-touching components are reported separately: the window can only
// cut components, so their measured sizes never certify a bound.
SeparationReport is_s_separated(const GroupOracle& oracle, const WindowConfiguration& c,
                                const GenSet& s, int k);

// Forward direction of the Π_{S,n} ↔ S-separated equivalence: given a
// verified pattern assignment for a Π_{S,n} fragment, every matched point x
// satisfies [x]_G ⊆ dom(P_x)·x, so components are bounded by the largest
// pattern domain. A containment failure means a bug, not bad input, and
// throws invariant_error.
struct SeparatedBoundReport {
    std::size_t bound = 0;           // max |dom(P)| over the instance
    std::size_t checked_points = 0;  // matched points whose containment was verified
    std::size_t max_bounded_component = 0;
    std::size_t unassigned_interior_components = 0;  // no matched member; not certified
};

SeparatedBoundReport pi_to_separated_bound(const GroupOracle& oracle, const WindowConfiguration& c,
                                           const GenSet& s, const LCLInstance& instance,
                                           const VerifyResult& verification);

// Converse direction: from an S-separated coloring, build the pattern
// P_x(γ) = c(γx) with domain {γ : γx ∈ S·[x]_G} at every point x whose
// S^{k+1}-neighborhood lies inside the window. Each constructed pattern is
// checked against the Π_{S,n} conditions and the S^{k+1} domain bound;
// violations throw invariant_error.
struct SeparatedToPiResult {
    LCLInstance fragment;                  // deduplicated patterns, canonical order
    std::vector<std::int32_t> assignment;  // per site: pattern index, or -1 if out of scope
    std::vector<std::uint32_t> scope;      // sites with S^{k+1}·x ⊆ W
};

SeparatedToPiResult separated_to_pi(const GroupOracle& oracle, const WindowConfiguration& c,
                                    const GenSet& s, int k);

}  // namespace lclwb

#endif

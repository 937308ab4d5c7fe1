#ifndef LCLWB_SEARCH_HPP
#define LCLWB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lclwb/group.hpp"
#include "lclwb/lcl.hpp"
#include "lclwb/separation.hpp"

namespace lclwb {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct SearchProblem {
    GroupOracle oracle;
    GenSet s;
    int colors = 1;           // n
    int component_bound = 1;  // k
    WindowPtr window;
    std::uint64_t node_budget = default_node_budget;
    std::uint64_t seed = 0;   // used by the heuristic mode only
    bool heuristic = false;   // greedy + repair witness search; never claims exhaustion
};

enum class SearchOutcome { witness, exhausted, budget };

std::string to_string(SearchOutcome o);

struct SearchStats {
    std::uint64_t nodes = 0;   // color assignments attempted
    std::uint64_t prunes = 0;  // assignments rejected by the component bound
};

struct SearchCertificate {
    SearchOutcome outcome = SearchOutcome::budget;
    std::optional<WindowConfiguration> witness;
    SearchStats stats;
    SearchProblem problem;
};

// Complete backtracking over colorings of the window in canonical site
// order, with incremental union-find over monochromatic S-adjacent pairs.
// A branch is pruned as soon as any current component exceeds k: measured
// component sizes only grow along a branch and are lower bounds for the true
// sizes in the group, so `exhausted` soundly rules out every coloring of the
// window whose components all stay within k — in particular every window
// restriction of an S-separated coloring of the group with that bound.
// Symmetry breaking: the first site is colored 0 and new colors are
// introduced in order. Budget exhaustion is reported as such, never as
// `exhausted`.
SearchCertificate exact_search(const SearchProblem& problem);

// Product block coloring on a free abelian group: 2^dim colors, axis i
// contributing (floor(x_i / block) mod 2). Valid once the block length
// reaches the S-radius; verification is mandatory and its report is part of
// the result. A scheme describes a coloring of the whole group, so measured
// boundary component sizes are lower bounds for true sizes: the scheme-level
// verdict `valid` requires every measured component, boundary included, to
// stay within the certified k.
struct WitnessSchemeResult {
    WindowConfiguration config;
    SeparationReport report;  // window verdict with the scheme's certified k
    bool valid = false;       // separated and boundary_max <= k
};

WitnessSchemeResult brick_witness(const GroupOracle& oracle, const GenSet& s, int block,
                                  WindowPtr window);

// Word-length band coloring on a free group ball: color = floor(|w| / band)
// mod 2. The certified k is the measured interior component maximum.
WitnessSchemeResult tree_band_witness(const GroupOracle& oracle, const GenSet& s, int band,
                                      WindowPtr ball);

enum class RowStatus {
    witnessed,      // minimal n witnessed, smaller n exhausted
    exhausted_all,  // every n in the scan exhausted: min n exceeds the scan
    budget_limited  // the scan hit the node budget; row not usable as evidence
};

std::string to_string(RowStatus s);

struct EvidenceRow {
    std::string group_name;
    std::string s_descriptor;
    GenSet s;
    int k = 0;
    int min_n = 0;  // meaningful for witnessed rows; last scanned n otherwise
    RowStatus status = RowStatus::budget_limited;
    std::uint64_t nodes = 0;
    std::optional<WindowConfiguration> witness;
    std::size_t window_size = 0;
};

// Per-(S, k) minimum color counts plus the derived finite-scale estimate:
// max over S of (min over witnessed rows of min_n) - 1. Exhausted rows prove
// only that this window admits nothing with this k; the evidence label keeps
// that distinction explicit.
struct AsdimEvidence {
    std::vector<EvidenceRow> rows;  // sorted by (S, k)
    std::optional<int> estimate;
};

struct TableRequest {
    GroupOracle oracle;
    std::vector<std::pair<std::string, GenSet>> s_list;  // descriptor + set
    std::vector<int> k_list;
    int n_max = 3;
    // Window per (S index, k); allows the Z path-length-coupled-to-k policy.
    std::vector<std::vector<WindowPtr>> windows;
    std::uint64_t node_budget = default_node_budget;
    std::uint64_t seed = 0;
};

// Runs the scan for every (S, k); verifies each witness independently and
// checks the table's monotonicity invariants (throws invariant_error on
// violation: min_n must not increase with k nor decrease as S grows).
AsdimEvidence min_colors_table(const TableRequest& request);

}  // namespace lclwb

#endif

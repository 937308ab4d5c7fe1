#ifndef LCLWB_GAMMA_GRAPH_HPP
#define LCLWB_GAMMA_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lclwb/group.hpp"
#include "lclwb/lcl.hpp"
#include "lclwb/site_space.hpp"

namespace lclwb {

// An edge (γ, v, w) of a Γ-graph, with vertices as indices.
struct EdgeTriple {
    GroupElement label;
    int from = 0;
    int to = 0;

    bool operator==(const EdgeTriple&) const = default;
    auto operator<=>(const EdgeTriple&) const = default;
};

// A Γ-graph restricted to a finite support T: triples labeled inside T are
// stored explicitly, triples labeled outside T are edges exactly when the
// cofinite flag is set. With the flag this encodes the paper-style finite
// Γ-graph (cofinite edge set); without it, an action graph known only on T.
class GammaGraph {
public:
    GammaGraph(int vertex_count, ElementSet support, std::vector<EdgeTriple> triples, bool cofinite);

    int vertex_count() const { return vertex_count_; }
    const ElementSet& support() const { return support_; }
    const std::vector<EdgeTriple>& triples() const { return triples_; }
    bool cofinite() const { return cofinite_; }

    bool has_edge(const GroupElement& label, int from, int to) const;

private:
    int vertex_count_;
    ElementSet support_;
    std::vector<EdgeTriple> triples_;  // sorted
    bool cofinite_;
};

// A total map V(G) -> V(H), as an array indexed by source vertex.
using VertexMap = std::vector<int>;

// A partial action table on `sites` restricted to T: entry(site, t) is the
// image of the site under T[t], or unset where unknown.
class ActionTable {
public:
    ActionTable(std::size_t sites, ElementSet support);

    void set(std::size_t site, std::size_t t_index, int image);
    std::optional<int> get(std::size_t site, std::size_t t_index) const;
    std::size_t sites() const { return sites_; }
    const ElementSet& support() const { return support_; }

    // Builds the table of a finite action (total on T).
    static ActionTable from_action(const FiniteAction& action, ElementSet support);

private:
    std::size_t sites_;
    ElementSet support_;
    std::vector<std::optional<int>> entries_;
};

// The Γ-graph of an action known on T: edges exactly (γ, x, γ·x) for γ ∈ T.
// Validates that the table is a genuine partial action (identity acts
// trivially, composition is consistent where defined) and throws
// std::invalid_argument otherwise.
GammaGraph action_to_gamma_graph(const GroupOracle& oracle, const ActionTable& table);

struct GammaMapVerdict {
    bool ok = true;
    std::optional<EdgeTriple> violation;  // lexicographically first
};

// Is f a Γ-map from G to H? Checking ranges over labels in
// T(G) ∪ T(H) — the window-scale reading of the edge condition — with labels
// outside a support resolved by the cofinite flag.
GammaMapVerdict is_gamma_map(const VertexMap& f, const GammaGraph& g, const GammaGraph& h);

// The Γ-graph structure on an instance's patterns: (γ, P, Q) is an edge iff
// (γP) ∪ Q is a function. Cofinite by construction.
GammaGraph lcl_to_gamma_graph(const GroupOracle& oracle, const LCLInstance& instance,
                              const ElementSet& support);

inline constexpr std::uint64_t default_graph_lcl_limit = 1'000'000;

// The LCL of a finite Γ-graph: all functions P : S -> V(G) with
// (s, P(1), P(s)) an edge for every s in S. Requires G cofinite and
// S ⊇ T(G), so labels outside S are unconstrained. Pattern colors are vertex
// indices; the alphabet is V(G).
LCLInstance gamma_graph_to_lcl(const GroupOracle& oracle, const GammaGraph& g, const GenSet& s,
                               std::uint64_t limit = default_graph_lcl_limit);

}  // namespace lclwb

#endif

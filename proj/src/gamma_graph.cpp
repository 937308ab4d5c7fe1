#include "lclwb/gamma_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclwb/errors.hpp"

namespace lclwb {

GammaGraph::GammaGraph(int vertex_count, ElementSet support, std::vector<EdgeTriple> triples,
                       bool cofinite)
    : vertex_count_(vertex_count),
      support_(std::move(support)),
      triples_(std::move(triples)),
      cofinite_(cofinite) {
    if (vertex_count_ < 0) throw std::invalid_argument("GammaGraph: negative vertex count");
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    for (const auto& t : triples_) {
        if (!support_.contains(t.label))
            throw std::invalid_argument("GammaGraph: triple labeled outside the support");
        if (t.from < 0 || t.from >= vertex_count_ || t.to < 0 || t.to >= vertex_count_)
            throw std::invalid_argument("GammaGraph: triple endpoint out of range");
    }
}

bool GammaGraph::has_edge(const GroupElement& label, int from, int to) const {
    if (!support_.contains(label)) return cofinite_;
    return std::binary_search(triples_.begin(), triples_.end(), EdgeTriple{label, from, to});
}

ActionTable::ActionTable(std::size_t sites, ElementSet support)
    : sites_(sites), support_(std::move(support)), entries_(sites * support_.size()) {}

void ActionTable::set(std::size_t site, std::size_t t_index, int image) {
    entries_[site * support_.size() + t_index] = image;
}

std::optional<int> ActionTable::get(std::size_t site, std::size_t t_index) const {
    return entries_[site * support_.size() + t_index];
}

ActionTable ActionTable::from_action(const FiniteAction& action, ElementSet support) {
    ActionTable table(action.site_count(), std::move(support));
    for (std::size_t s = 0; s < table.sites(); ++s)
        for (std::size_t t = 0; t < table.support().size(); ++t)
            table.set(s, t, action.act(table.support()[t], static_cast<int>(s)));
    return table;
}

GammaGraph action_to_gamma_graph(const GroupOracle& oracle, const ActionTable& table) {
    const ElementSet& support = table.support();
    const std::size_t n = table.sites();

    // Identity must act trivially where present.
    if (auto id_idx = support.index_of(oracle.identity())) {
        for (std::size_t x = 0; x < n; ++x) {
            const auto img = table.get(x, *id_idx);
            if (img && *img != static_cast<int>(x))
                throw std::invalid_argument("action_to_gamma_graph: identity does not act trivially");
        }
    }

    // Composition consistency: for γ, δ, γδ all in T, (γδ)·x = γ·(δ·x)
    // wherever all three entries are defined.
    for (std::size_t gi = 0; gi < support.size(); ++gi) {
        for (std::size_t di = 0; di < support.size(); ++di) {
            const auto prod_idx = support.index_of(oracle.multiply(support[gi], support[di]));
            if (!prod_idx) continue;
            for (std::size_t x = 0; x < n; ++x) {
                const auto dx = table.get(x, di);
                if (!dx) continue;
                const auto gdx = table.get(static_cast<std::size_t>(*dx), gi);
                const auto px = table.get(x, *prod_idx);
                if (gdx && px && *gdx != *px)
                    throw std::invalid_argument("action_to_gamma_graph: inconsistent action table");
            }
        }
    }

    std::vector<EdgeTriple> triples;
    for (std::size_t t = 0; t < support.size(); ++t)
        for (std::size_t x = 0; x < n; ++x)
            if (const auto img = table.get(x, t))
                triples.push_back({support[t], static_cast<int>(x), *img});
    return GammaGraph(static_cast<int>(n), support, std::move(triples), false);
}

GammaMapVerdict is_gamma_map(const VertexMap& f, const GammaGraph& g, const GammaGraph& h) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("is_gamma_map: map is not total on V(G)");
    for (int v : f)
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("is_gamma_map: map image outside V(H)");

    // Labels worth checking: G's support always; H's support too when G is
    // cofinite (G then has every triple there). Outside both supports the
    // check is vacuous at window scale.
    std::vector<GroupElement> labels(g.support().begin(), g.support().end());
    if (g.cofinite())
        labels.insert(labels.end(), h.support().begin(), h.support().end());
    ElementSet label_set = ElementSet::of(std::move(labels));

    for (const auto& label : label_set) {
        const bool explicit_in_g = g.support().contains(label);
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w = 0; w < g.vertex_count(); ++w) {
                const bool edge_in_g =
                    explicit_in_g ? g.has_edge(label, v, w) : g.cofinite();
                if (!edge_in_g) continue;
                if (!h.has_edge(label, f[v], f[w]))
                    return {false, EdgeTriple{label, v, w}};
            }
        }
    }
    return {true, std::nullopt};
}

GammaGraph lcl_to_gamma_graph(const GroupOracle& oracle, const LCLInstance& instance,
                              const ElementSet& support) {
    const int m = static_cast<int>(instance.size());
    std::vector<EdgeTriple> triples;
    for (const auto& label : support) {
        std::vector<Pattern> translated;
        translated.reserve(instance.size());
        for (const auto& p : instance.patterns()) translated.push_back(pattern_translate(oracle, label, p));
        for (int v = 0; v < m; ++v)
            for (int w = 0; w < m; ++w)
                if (patterns_compatible(translated[v], instance[w]))
                    triples.push_back({label, v, w});
    }
    return GammaGraph(m, support, std::move(triples), true);
}

LCLInstance gamma_graph_to_lcl(const GroupOracle& oracle, const GammaGraph& g, const GenSet& s,
                               std::uint64_t limit) {
    if (!g.cofinite())
        throw std::invalid_argument("gamma_graph_to_lcl: graph must have a cofinite edge set");
    if (!g.support().is_subset_of(s.elements()))
        throw std::invalid_argument("gamma_graph_to_lcl: S must cover the support of G");
    const int nv = g.vertex_count();
    const std::size_t ns = s.size();
    const GroupElement id = oracle.identity();

    // All functions P : S -> V(G) with (t, P(1), P(t)) an edge for every t.
    std::vector<Pattern> patterns;
    if (nv == 0) return LCLInstance({}, 0);
    std::uint64_t work = 0;
    std::vector<int> values(ns, 0);
    const auto id_idx = s.elements().index_of(id);
    while (true) {
        if (++work > limit) throw limit_error("gamma_graph_to_lcl: enumeration limit exceeded");
        const int at_identity = values[*id_idx];
        bool ok = true;
        for (std::size_t t = 0; t < ns && ok; ++t)
            ok = g.has_edge(s[t], at_identity, values[t]);
        if (ok) {
            std::vector<std::pair<GroupElement, Color>> entries;
            entries.reserve(ns);
            for (std::size_t t = 0; t < ns; ++t) entries.emplace_back(s[t], values[t]);
            patterns.emplace_back(std::move(entries));
        }
        std::size_t j = ns;
        while (j > 0 && values[j - 1] == nv - 1) {
            values[j - 1] = 0;
            --j;
        }
        if (j == 0) break;
        ++values[j - 1];
    }
    std::sort(patterns.begin(), patterns.end());
    return LCLInstance(std::move(patterns), nv);
}

}  // namespace lclwb

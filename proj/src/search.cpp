#include "lclwb/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lclwb/errors.hpp"
#include "lclwb/union_find.hpp"

namespace lclwb {

std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::witness: return "witness";
        case SearchOutcome::exhausted: return "exhausted";
        case SearchOutcome::budget: return "budget";
    }
    return "?";
}

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::witnessed: return "witnessed";
        case RowStatus::exhausted_all: return "exhausted";
        case RowStatus::budget_limited: return "budget";
    }
    return "?";
}

namespace {

// Neighbors of each site under S ∖ {1}, restricted to the window and to
// already-assigned (smaller) site indices.
std::vector<std::vector<std::uint32_t>> earlier_neighbors(const GroupOracle& oracle,
                                                          const ElementSet& window, const GenSet& s) {
    const std::size_t n = window.size();
    std::vector<std::vector<std::uint32_t>> nb(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : s) {
            if (oracle.is_identity(g)) continue;
            const auto j = window.index_of(oracle.multiply(g, window[i]));
            if (j && *j < i) nb[i].push_back(static_cast<std::uint32_t>(*j));
        }
        std::sort(nb[i].begin(), nb[i].end());
        nb[i].erase(std::unique(nb[i].begin(), nb[i].end()), nb[i].end());
    }
    return nb;
}

struct Backtracker {
    const SearchProblem& problem;
    const std::vector<std::vector<std::uint32_t>>& neighbors;
    RollbackUnionFind uf;
    std::vector<Color> colors;
    SearchStats stats;

    Backtracker(const SearchProblem& p, const std::vector<std::vector<std::uint32_t>>& nb)
        : problem(p), neighbors(nb), uf(p.window->size()), colors(p.window->size(), -1) {}

    // Merges site with its earlier same-colored neighbors; fails when a
    // component grows past the bound.
    bool place(std::uint32_t site, Color c) {
        colors[site] = c;
        for (const auto j : neighbors[site]) {
            if (colors[j] != c) continue;
            if (uf.merge(site, j) > static_cast<std::uint32_t>(problem.component_bound)) return false;
        }
        return true;
    }

    // Returns witness outcome, exhausted, or budget.
    SearchOutcome run(std::vector<Color>& witness_out) {
        const std::size_t n = problem.window->size();
        if (n == 0) {
            witness_out.clear();
            return SearchOutcome::witness;
        }
        std::vector<Color> choice(n, -1);
        std::vector<std::size_t> mark(n, 0);
        std::vector<Color> max_before(n, -1);  // max color used before this depth
        std::size_t d = 0;
        Color start = 0;
        Color max_used = -1;
        while (true) {
            bool advanced = false;
            // New colors are introduced in order: depth d may use colors up to
            // one past the maximum used so far.
            const Color cap = std::min(static_cast<Color>(problem.colors - 1),
                                       static_cast<Color>(max_used + 1));
            for (Color c = start; c <= cap; ++c) {
                if (++stats.nodes > problem.node_budget) return SearchOutcome::budget;
                mark[d] = uf.mark();
                if (place(static_cast<std::uint32_t>(d), c)) {
                    choice[d] = c;
                    max_before[d] = max_used;
                    max_used = std::max(max_used, c);
                    advanced = true;
                    break;
                }
                ++stats.prunes;
                uf.rollback(mark[d]);
                colors[d] = -1;
            }
            if (advanced) {
                ++d;
                start = 0;
                if (d == n) {
                    witness_out = colors;
                    return SearchOutcome::witness;
                }
            } else {
                if (d == 0) return SearchOutcome::exhausted;
                --d;
                uf.rollback(mark[d]);
                colors[d] = -1;
                max_used = max_before[d];
                start = choice[d] + 1;
            }
        }
    }
};

// Greedy coloring plus bounded local repair; finds witnesses only.
std::optional<std::vector<Color>> heuristic_witness(const SearchProblem& problem,
                                                    const std::vector<std::vector<std::uint32_t>>& earlier,
                                                    SearchStats& stats) {
    const std::size_t n = problem.window->size();
    std::mt19937_64 rng(problem.seed);
    auto component_ok = [&](const std::vector<Color>& colors) {
        UnionFind uf(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto j : earlier[i])
                if (colors[i] == colors[j]) uf.merge(static_cast<std::uint32_t>(i), j);
        for (std::size_t i = 0; i < n; ++i)
            if (uf.component_size(static_cast<std::uint32_t>(i)) >
                static_cast<std::uint32_t>(problem.component_bound))
                return false;
        return true;
    };

    for (int restart = 0; restart < 32; ++restart) {
        std::vector<Color> colors(n, 0);
        // Greedy pass: pick the color minimizing the resulting component size.
        RollbackUnionFind uf(n);
        for (std::size_t i = 0; i < n; ++i) {
            Color best = 0;
            std::uint32_t best_size = ~0u;
            for (Color c = 0; c < problem.colors; ++c) {
                ++stats.nodes;
                const auto m = uf.mark();
                colors[i] = c;
                std::uint32_t size = 1;
                for (const auto j : earlier[i])
                    if (colors[j] == c) size = uf.merge(static_cast<std::uint32_t>(i), j);
                uf.rollback(m);
                if (size < best_size) {
                    best_size = size;
                    best = c;
                }
            }
            colors[i] = best;
            for (const auto j : earlier[i])
                if (colors[j] == best) uf.merge(static_cast<std::uint32_t>(i), j);
        }
        // Repair pass: recolor random members of oversized components.
        for (int pass = 0; pass < 64; ++pass) {
            if (component_ok(colors)) return colors;
            UnionFind cuf(n);
            for (std::size_t i = 0; i < n; ++i)
                for (const auto j : earlier[i])
                    if (colors[i] == colors[j]) cuf.merge(static_cast<std::uint32_t>(i), j);
            std::vector<std::uint32_t> oversized;
            for (std::size_t i = 0; i < n; ++i)
                if (cuf.component_size(static_cast<std::uint32_t>(i)) >
                    static_cast<std::uint32_t>(problem.component_bound))
                    oversized.push_back(static_cast<std::uint32_t>(i));
            if (oversized.empty()) return colors;
            const auto pick = oversized[rng() % oversized.size()];
            colors[pick] = static_cast<Color>(rng() % problem.colors);
            ++stats.nodes;
            if (stats.nodes > problem.node_budget) return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

SearchCertificate exact_search(const SearchProblem& problem) {
    if (problem.colors < 1) throw std::invalid_argument("exact_search: n must be >= 1");
    if (problem.component_bound < 1) throw std::invalid_argument("exact_search: k must be >= 1");
    if (!problem.window) throw std::invalid_argument("exact_search: missing window");

    const auto neighbors = earlier_neighbors(problem.oracle, *problem.window, problem.s);

    if (problem.heuristic) {
        SearchStats stats;
        auto found = heuristic_witness(problem, neighbors, stats);
        std::optional<WindowConfiguration> witness;
        if (found) witness = make_configuration(problem.window, std::move(*found));
        // Heuristics never prove exhaustion.
        return SearchCertificate{found ? SearchOutcome::witness : SearchOutcome::budget,
                                 std::move(witness), stats, problem};
    }

    Backtracker bt(problem, neighbors);
    std::vector<Color> witness_colors;
    const SearchOutcome outcome = bt.run(witness_colors);
    std::optional<WindowConfiguration> witness;
    if (outcome == SearchOutcome::witness)
        witness = make_configuration(problem.window, std::move(witness_colors));
    return SearchCertificate{outcome, std::move(witness), bt.stats, problem};
}

WitnessSchemeResult brick_witness(const GroupOracle& oracle, const GenSet& s, int block,
                                  WindowPtr window) {
    if (oracle.family() != GroupFamily::free_abelian)
        throw std::invalid_argument("brick_witness: requires a free abelian group");
    if (block < 1) throw std::invalid_argument("brick_witness: block length must be >= 1");
    const int d = oracle.abelian_dim();
    std::vector<Color> colors;
    colors.reserve(window->size());
    for (const auto& x : *window) {
        Color c = 0;
        for (int i = 0; i < d; ++i) {
            const std::int64_t v = x.data()[i];
            // Floor division keeps blocks aligned across zero.
            std::int64_t q = v / block;
            if (v % block != 0 && v < 0) --q;
            c |= static_cast<Color>(((q % 2) + 2) % 2) << i;
        }
        colors.push_back(c);
    }
    WindowConfiguration config = make_configuration(std::move(window), std::move(colors));
    std::int64_t k = 1;
    for (int i = 0; i < d; ++i) k *= block;
    SeparationReport report = is_s_separated(oracle, config, s, static_cast<int>(k));
    const bool valid = report.separated && report.boundary_max <= static_cast<std::size_t>(k);
    return {std::move(config), std::move(report), valid};
}

WitnessSchemeResult tree_band_witness(const GroupOracle& oracle, const GenSet& s, int band,
                                      WindowPtr ball) {
    if (oracle.family() != GroupFamily::free_group)
        throw std::invalid_argument("tree_band_witness: requires a free group");
    if (band < 1) throw std::invalid_argument("tree_band_witness: band width must be >= 1");
    std::vector<Color> colors;
    colors.reserve(ball->size());
    for (const auto& w : *ball) {
        const std::int64_t len = w.data().empty() ? 0 : w.data()[0];  // reduced word length
        colors.push_back(static_cast<Color>((len / band) % 2));
    }
    WindowConfiguration config = make_configuration(std::move(ball), std::move(colors));
    // Certify the measured interior maximum.
    const ComponentGraph cg = component_graph(oracle, config, s);
    std::size_t interior_max = 1;
    for (std::size_t comp = 0; comp < cg.component_count(); ++comp)
        if (!cg.boundary_touching[comp]) interior_max = std::max(interior_max, cg.members[comp].size());
    SeparationReport report = summarize_components(cg, static_cast<int>(interior_max));
    const bool valid = report.separated && report.boundary_max <= interior_max;
    return {std::move(config), std::move(report), valid};
}

AsdimEvidence min_colors_table(const TableRequest& request) {
    if (request.windows.size() != request.s_list.size())
        throw std::invalid_argument("min_colors_table: one window list per S required");
    AsdimEvidence evidence;

    for (std::size_t si = 0; si < request.s_list.size(); ++si) {
        if (request.windows[si].size() != request.k_list.size())
            throw std::invalid_argument("min_colors_table: one window per (S, k) required");
        for (std::size_t ki = 0; ki < request.k_list.size(); ++ki) {
            EvidenceRow row;
            row.group_name = request.oracle.name();
            row.s_descriptor = request.s_list[si].first;
            row.s = request.s_list[si].second;
            row.k = request.k_list[ki];
            row.window_size = request.windows[si][ki]->size();
            row.status = RowStatus::exhausted_all;
            for (int n = 1; n <= request.n_max; ++n) {
                SearchProblem p{.oracle = request.oracle,
                                .s = row.s,
                                .colors = n,
                                .component_bound = row.k,
                                .window = request.windows[si][ki],
                                .node_budget = request.node_budget,
                                .seed = request.seed,
                                .heuristic = false};
                SearchCertificate cert = exact_search(p);
                row.nodes += cert.stats.nodes;
                row.min_n = n;
                if (cert.outcome == SearchOutcome::budget) {
                    row.status = RowStatus::budget_limited;
                    break;
                }
                if (cert.outcome == SearchOutcome::witness) {
                    // Witness-backed rows never rely on search internals.
                    const SeparationReport check =
                        is_s_separated(request.oracle, *cert.witness, row.s, row.k);
                    if (!check.separated)
                        throw invariant_error("min_colors_table: witness failed re-verification");
                    row.status = RowStatus::witnessed;
                    row.witness = std::move(cert.witness);
                    break;
                }
            }
            evidence.rows.push_back(std::move(row));
        }
    }

    // Estimate: per S, the best witnessed row; overall the max over S.
    std::optional<int> estimate;
    for (std::size_t si = 0; si < request.s_list.size(); ++si) {
        std::optional<int> best;
        for (const auto& row : evidence.rows) {
            if (row.s_descriptor != request.s_list[si].first) continue;
            if (row.status != RowStatus::witnessed) continue;
            if (!best || row.min_n < *best) best = row.min_n;
        }
        if (best) {
            const int value = *best - 1;
            if (!estimate || value > *estimate) estimate = value;
        }
    }
    evidence.estimate = estimate;

    // Monotonicity: for fixed S, min_n is non-increasing in k (unknown rows
    // count as larger than any witnessed value); for fixed k and nested S,
    // min_n is non-decreasing as S grows.
    auto effective = [&](const EvidenceRow& r) {
        return r.status == RowStatus::witnessed ? r.min_n : request.n_max + 1;
    };
    for (const auto& a : evidence.rows) {
        for (const auto& b : evidence.rows) {
            if (a.s_descriptor == b.s_descriptor && a.k < b.k &&
                a.window_size == b.window_size) {
                if (effective(a) < effective(b))
                    throw invariant_error("min_colors_table: min n increased with k");
            }
            if (a.k == b.k && a.window_size == b.window_size &&
                a.s.elements().is_subset_of(b.s.elements()) && a.s.size() < b.s.size()) {
                if (effective(a) > effective(b) && b.status == RowStatus::witnessed)
                    throw invariant_error("min_colors_table: min n decreased as S grew");
            }
        }
    }
    return evidence;
}

}  // namespace lclwb

#include "lclwb/separation.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclwb/errors.hpp"
#include "lclwb/union_find.hpp"

namespace lclwb {

ComponentGraph component_graph(const GroupOracle& oracle, const WindowConfiguration& c,
                               const GenSet& s) {
    const ElementSet& w = *c.window;
    const std::size_t n = w.size();
    UnionFind uf(n);
    std::vector<char> exposed(n, 0);  // site has an S-translate outside the window

    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : s) {
            const auto j = w.index_of(oracle.multiply(g, w[i]));
            if (!j) {
                exposed[i] = 1;
                continue;
            }
            if (c.colors[*j] == c.colors[i]) uf.merge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
        }
    }

    ComponentGraph cg;
    cg.component_of.assign(n, -1);
    std::vector<int> root_to_comp(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = uf.find(static_cast<std::uint32_t>(i));
        if (root_to_comp[root] < 0) {
            root_to_comp[root] = static_cast<int>(cg.members.size());
            cg.members.emplace_back();
            cg.boundary_touching.push_back(0);
        }
        const int comp = root_to_comp[root];
        cg.component_of[i] = comp;
        cg.members[comp].push_back(static_cast<int>(i));
        if (exposed[i]) cg.boundary_touching[comp] = 1;
    }
    return cg;
}

SeparationReport summarize_components(const ComponentGraph& cg, int k) {
    if (k < 1) throw std::invalid_argument("is_s_separated: k must be >= 1");
    SeparationReport r;
    r.k = k;
    r.component_count = cg.component_count();
    for (std::size_t comp = 0; comp < cg.component_count(); ++comp) {
        const std::size_t size = cg.members[comp].size();
        ++r.size_histogram[size];
        if (cg.boundary_touching[comp]) {
            ++r.boundary_component_count;
            r.boundary_max = std::max(r.boundary_max, size);
        } else {
            ++r.interior_component_count;
            r.interior_max = std::max(r.interior_max, size);
            if (size > static_cast<std::size_t>(k)) r.separated = false;
        }
    }
    return r;
}

SeparationReport is_s_separated(const GroupOracle& oracle, const WindowConfiguration& c,
                                const GenSet& s, int k) {
    return summarize_components(component_graph(oracle, c, s), k);
}

SeparatedBoundReport pi_to_separated_bound(const GroupOracle& oracle, const WindowConfiguration& c,
                                           const GenSet& s, const LCLInstance& instance,
                                           const VerifyResult& verification) {
    const ElementSet& w = *c.window;
    if (verification.assignment.size() != w.size())
        throw std::invalid_argument("pi_to_separated_bound: verification does not match window");

    SeparatedBoundReport report;
    for (const auto& p : instance.patterns()) report.bound = std::max(report.bound, p.size());

    const ComponentGraph cg = component_graph(oracle, c, s);

    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto pi = verification.assignment[i];
        if (pi < 0) continue;
        const Pattern& p = instance[static_cast<std::size_t>(pi)];
        // [x]_G ⊆ dom(P)·x, checked member by member: the witness translate is
        // γ = m · x⁻¹ on the free window.
        const GroupElement xinv = oracle.inverse(w[i]);
        for (int m : cg.members[cg.component_of[i]]) {
            const GroupElement gamma = oracle.multiply(w[m], xinv);
            if (!p.color_of(gamma))
                throw invariant_error(
                    "pi_to_separated_bound: component member outside the matched pattern domain at site " +
                    oracle.describe(w[i]));
        }
        ++report.checked_points;
    }

    for (std::size_t comp = 0; comp < cg.component_count(); ++comp) {
        if (cg.boundary_touching[comp]) continue;
        bool has_assigned = false;
        for (int m : cg.members[comp])
            if (verification.assignment[m] >= 0) has_assigned = true;
        if (!has_assigned) {
            ++report.unassigned_interior_components;
            continue;
        }
        if (cg.members[comp].size() > report.bound)
            throw invariant_error("pi_to_separated_bound: interior component exceeds the domain bound");
        report.max_bounded_component = std::max(report.max_bounded_component, cg.members[comp].size());
    }
    return report;
}

SeparatedToPiResult separated_to_pi(const GroupOracle& oracle, const WindowConfiguration& c,
                                    const GenSet& s, int k) {
    if (k < 1) throw std::invalid_argument("separated_to_pi: k must be >= 1");
    const ElementSet& w = *c.window;
    const std::size_t n = w.size();

    const ElementSet reach = set_power(oracle, s, k + 1);
    const ComponentGraph cg = component_graph(oracle, c, s);

    // Scope: sites whose S^{k+1}-neighborhood stays inside the window; there
    // the measured component is the true one and the construction is exact.
    std::vector<std::uint32_t> scope;
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = true;
        for (const auto& g : reach) {
            if (!w.contains(oracle.multiply(g, w[i]))) {
                inside = false;
                break;
            }
        }
        if (inside) scope.push_back(static_cast<std::uint32_t>(i));
    }

    std::vector<Pattern> built;
    built.reserve(scope.size());
    for (const auto i : scope) {
        const auto& comp = cg.members[cg.component_of[i]];
        if (comp.size() > static_cast<std::size_t>(k))
            throw std::invalid_argument("separated_to_pi: coloring is not S-separated with bound k");

        // dom(P) = {γ : γx ∈ S·[x]_G}; on the free window γ = m' · x⁻¹ for
        // every S-translate m' of a member.
        const GroupElement xinv = oracle.inverse(w[i]);
        std::vector<std::pair<GroupElement, Color>> entries;
        std::vector<GroupElement> seen;
        for (int m : comp) {
            for (const auto& g : s) {
                const GroupElement point = oracle.multiply(g, w[m]);
                const auto idx = w.index_of(point);
                if (!idx)
                    throw invariant_error("separated_to_pi: S·[x]_G leaves the window inside scope");
                seen.push_back(point);
            }
        }
        ElementSet dom_points = ElementSet::of(std::move(seen));
        for (const auto& point : dom_points) {
            const GroupElement gamma = oracle.multiply(point, xinv);
            entries.emplace_back(gamma, c.colors[*w.index_of(point)]);
        }
        Pattern p(std::move(entries));

        // Π_{S,n} conditions and the S^{k+1} domain bound; failures here
        // falsify the construction and are bugs.
        if (!p.color_of(oracle.identity()))
            throw invariant_error("separated_to_pi: constructed pattern misses the identity");
        const ElementSet dom = p.domain();
        const Color c0 = *p.color_of(oracle.identity());
        for (const auto& [gamma, color] : p.entries()) {
            if (color != c0) continue;
            for (const auto& g : s)
                if (!dom.contains(oracle.multiply(g, gamma)))
                    throw invariant_error("separated_to_pi: constructed pattern violates closure");
        }
        for (const auto& [gamma, color] : p.entries())
            if (!reach.contains(gamma))
                throw invariant_error("separated_to_pi: constructed domain exceeds S^{k+1}");

        built.push_back(std::move(p));
    }

    // Deduplicate into canonical order and map each scope site to its pattern.
    std::vector<Pattern> unique_patterns(built);
    std::sort(unique_patterns.begin(), unique_patterns.end());
    unique_patterns.erase(std::unique(unique_patterns.begin(), unique_patterns.end()),
                          unique_patterns.end());

    std::vector<std::int32_t> assignment(n, -1);
    for (std::size_t j = 0; j < scope.size(); ++j) {
        const auto it = std::lower_bound(unique_patterns.begin(), unique_patterns.end(), built[j]);
        assignment[scope[j]] = static_cast<std::int32_t>(it - unique_patterns.begin());
    }

    int alphabet = 0;
    for (Color col : c.colors) alphabet = std::max(alphabet, col + 1);
    SeparatedToPiResult result;
    result.fragment = LCLInstance(std::move(unique_patterns), alphabet);
    result.assignment = std::move(assignment);
    result.scope = std::move(scope);
    return result;
}

}  // namespace lclwb

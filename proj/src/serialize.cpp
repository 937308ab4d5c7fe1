#include "lclwb/serialize.hpp"

#include "lclwb/errors.hpp"

namespace lclwb {

json element_to_json(const GroupOracle& oracle, const GroupElement& e) {
    switch (oracle.family()) {
        case GroupFamily::free_abelian: {
            json a = json::array();
            for (auto v : e.data()) a.push_back(v);
            return a;
        }
        case GroupFamily::free_group: {
            json a = json::array();
            for (std::size_t i = 1; i < e.data().size(); ++i) a.push_back(e.data()[i]);
            return a;
        }
        case GroupFamily::finite:
            return e.data()[0];
        case GroupFamily::direct_product: {
            auto [l, r] = oracle.split(e);
            return json::array({element_to_json(oracle.left_factor(), l),
                                element_to_json(oracle.right_factor(), r)});
        }
    }
    return nullptr;
}

GroupElement element_from_json(const GroupOracle& oracle, const json& j) {
    try {
        switch (oracle.family()) {
            case GroupFamily::free_abelian: {
                std::vector<std::int64_t> coords;
                for (const auto& v : j) coords.push_back(v.get<std::int64_t>());
                return oracle.from_coords(coords);
            }
            case GroupFamily::free_group: {
                std::vector<int> letters;
                for (const auto& v : j) letters.push_back(v.get<int>());
                return oracle.from_word(letters);
            }
            case GroupFamily::finite:
                return oracle.from_index(j.get<int>());
            case GroupFamily::direct_product: {
                if (!j.is_array() || j.size() != 2)
                    throw config_error("product element must be a [left, right] pair");
                return oracle.pair(element_from_json(oracle.left_factor(), j[0]),
                                   element_from_json(oracle.right_factor(), j[1]));
            }
        }
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad element encoding: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw config_error(std::string("bad element: ") + ex.what());
    }
    throw config_error("bad element encoding");
}

GroupOracle group_from_json(const json& spec) {
    try {
        const std::string family = spec.at("family").get<std::string>();
        if (family == "free_abelian") return GroupOracle::free_abelian(spec.at("dim").get<int>());
        if (family == "free_group") return GroupOracle::free_group(spec.at("rank").get<int>());
        if (family == "cyclic") return GroupOracle::cyclic(spec.at("order").get<int>());
        if (family == "finite")
            return GroupOracle::finite_group(spec.at("table").get<std::vector<std::vector<int>>>());
        if (family == "product")
            return GroupOracle::direct_product(group_from_json(spec.at("left")),
                                               group_from_json(spec.at("right")));
        throw config_error("unknown group family: " + family);
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad group spec: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw config_error(std::string("bad group spec: ") + ex.what());
    }
}

GenSet gen_set_from_json(const GroupOracle& oracle, const json& spec) {
    try {
        if (spec.contains("ball_radius")) {
            const int r = spec.at("ball_radius").get<int>();
            if (r < 0) throw config_error("ball_radius must be >= 0");
            const ElementSet b = ball_window(oracle, r);
            return make_gen_set(oracle, b.elements());
        }
        if (spec.contains("elements")) {
            std::vector<GroupElement> elems;
            for (const auto& e : spec.at("elements")) elems.push_back(element_from_json(oracle, e));
            return make_gen_set(oracle, elems);
        }
        throw config_error("S spec needs ball_radius or elements");
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad S spec: ") + ex.what());
    }
}

std::string gen_set_descriptor(const json& spec) {
    if (spec.contains("ball_radius"))
        return "ball r=" + std::to_string(spec.at("ball_radius").get<int>());
    if (spec.contains("elements"))
        return "explicit[" + std::to_string(spec.at("elements").size()) + "]";
    return "?";
}

WindowPtr window_from_json(const GroupOracle& oracle, const json& spec, std::size_t limit) {
    try {
        const std::string kind = spec.at("kind").get<std::string>();
        if (kind == "ball") return share(ball_window(oracle, spec.at("radius").get<int>(), limit));
        if (kind == "box")
            return share(box_window(oracle, spec.at("lo").get<std::vector<std::int64_t>>(),
                                    spec.at("hi").get<std::vector<std::int64_t>>(), limit));
        if (kind == "points") {
            std::vector<GroupElement> pts;
            for (const auto& e : spec.at("points")) pts.push_back(element_from_json(oracle, e));
            return share(ElementSet::of(std::move(pts)));
        }
        throw config_error("unknown window kind: " + kind);
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad window spec: ") + ex.what());
    }
}

json pattern_to_json(const GroupOracle& oracle, const Pattern& p) {
    json a = json::array();
    for (const auto& [e, c] : p.entries())
        a.push_back(json::array({element_to_json(oracle, e), c}));
    return a;
}

Pattern pattern_from_json(const GroupOracle& oracle, const json& j) {
    std::vector<std::pair<GroupElement, Color>> entries;
    try {
        for (const auto& entry : j) {
            if (!entry.is_array() || entry.size() != 2)
                throw config_error("pattern entry must be [element, color]");
            entries.emplace_back(element_from_json(oracle, entry[0]), entry[1].get<Color>());
        }
        return Pattern(std::move(entries));
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad pattern: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw config_error(std::string("bad pattern: ") + ex.what());
    }
}

json instance_to_json(const GroupOracle& oracle, const LCLInstance& instance) {
    json a = json::array();
    for (const auto& p : instance.patterns()) a.push_back(pattern_to_json(oracle, p));
    return json{{"alphabet", instance.alphabet_size()}, {"patterns", a}};
}

LCLInstance lcl_from_json(const GroupOracle& oracle, const json& spec, std::uint64_t limit) {
    try {
        const std::string kind = spec.at("kind").get<std::string>();
        if (kind == "pi_sn") {
            const GenSet s = gen_set_from_json(oracle, spec.at("s"));
            const WindowPtr w = window_from_json(oracle, spec.at("window"));
            return pi_sn_generate(oracle, s, spec.at("n").get<int>(), *w, limit);
        }
        if (kind == "freeness")
            return freeness_lcl(oracle, element_from_json(oracle, spec.at("gamma")));
        if (kind == "patterns") {
            std::vector<Pattern> patterns;
            for (const auto& p : spec.at("patterns")) patterns.push_back(pattern_from_json(oracle, p));
            const int alphabet = spec.contains("alphabet") ? spec.at("alphabet").get<int>() : -1;
            return LCLInstance(std::move(patterns), alphabet);
        }
        throw config_error("unknown lcl kind: " + kind);
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad lcl spec: ") + ex.what());
    }
}

json separation_report_to_json(const SeparationReport& r) {
    json hist = json::array();
    for (const auto& [size, count] : r.size_histogram)
        hist.push_back(json::array({size, count}));
    return json{{"separated", r.separated},
                {"k", r.k},
                {"interior_max", r.interior_max},
                {"boundary_max", r.boundary_max},
                {"components", r.component_count},
                {"interior_components", r.interior_component_count},
                {"boundary_components", r.boundary_component_count},
                {"size_histogram", hist}};
}

json separation_to_json(const SeparationReport& r, const ComponentGraph& cg,
                        std::size_t membership_limit) {
    json out = separation_report_to_json(r);
    std::size_t points = 0;
    for (const auto& m : cg.members) points += m.size();
    if (points <= membership_limit) {
        json comps = json::array();
        for (std::size_t i = 0; i < cg.component_count(); ++i)
            comps.push_back(json{{"members", cg.members[i]},
                                 {"boundary", static_cast<bool>(cg.boundary_touching[i])}});
        out["components"] = std::move(comps);
    }
    return out;
}

json gamma_graph_to_json(const GroupOracle& oracle, const GammaGraph& g) {
    json support = json::array();
    for (const auto& e : g.support()) support.push_back(element_to_json(oracle, e));
    json triples = json::array();
    for (const auto& t : g.triples())
        triples.push_back(json::array({element_to_json(oracle, t.label), t.from, t.to}));
    return json{{"vertices", g.vertex_count()},
                {"support", std::move(support)},
                {"triples", std::move(triples)},
                {"cofinite", g.cofinite()}};
}

GammaGraph gamma_graph_from_json(const GroupOracle& oracle, const json& j) {
    try {
        std::vector<GroupElement> support;
        for (const auto& e : j.at("support")) support.push_back(element_from_json(oracle, e));
        std::vector<EdgeTriple> triples;
        for (const auto& t : j.at("triples")) {
            if (!t.is_array() || t.size() != 3)
                throw config_error("triple must be [label, from, to]");
            triples.push_back(
                {element_from_json(oracle, t[0]), t[1].get<int>(), t[2].get<int>()});
        }
        return GammaGraph(j.at("vertices").get<int>(), ElementSet::of(std::move(support)),
                          std::move(triples), j.at("cofinite").get<bool>());
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad gamma graph: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw config_error(std::string("bad gamma graph: ") + ex.what());
    }
}

bool satisfies_pi_sn_conditions(const GroupOracle& oracle, const Pattern& p, const GenSet& s,
                                int n, std::string* why) {
    // (i) finite domain: structural. (ii) identity in the domain.
    const auto c0 = p.color_of(oracle.identity());
    if (!c0) {
        if (why) *why = "identity not in the domain";
        return false;
    }
    if (p.max_color() >= n) {
        if (why) *why = "not an n-coloring";
        return false;
    }
    // (iii) Sγ ⊆ dom(P) for every γ colored like the identity.
    for (const auto& [gamma, color] : p.entries()) {
        if (color != *c0) continue;
        for (const auto& g : s) {
            if (!p.color_of(oracle.multiply(g, gamma))) {
                if (why)
                    *why = "closure fails at " + oracle.describe(gamma) + " under " + oracle.describe(g);
                return false;
            }
        }
    }
    return true;
}

}  // namespace lclwb

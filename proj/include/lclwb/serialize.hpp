#ifndef LCLWB_SERIALIZE_HPP
#define LCLWB_SERIALIZE_HPP

#include <json.hpp>

#include "lclwb/gamma_graph.hpp"
#include "lclwb/group.hpp"
#include "lclwb/lcl.hpp"
#include "lclwb/search.hpp"

namespace lclwb {

using json = nlohmann::json;

// Elements serialize oracle-directed: coordinate arrays for free abelian
// groups, signed letter arrays for free groups, table indices for finite
// groups, [left, right] pairs for products.
json element_to_json(const GroupOracle& oracle, const GroupElement& e);
GroupElement element_from_json(const GroupOracle& oracle, const json& j);

// {"family":"free_abelian","dim":d} | {"family":"free_group","rank":r} |
// {"family":"finite","table":[[...]]} | {"family":"cyclic","order":m} |
// {"family":"product","left":{...},"right":{...}}
GroupOracle group_from_json(const json& spec);

// {"ball_radius": r} (standard generators) or {"elements": [...]} (symmetrized).
GenSet gen_set_from_json(const GroupOracle& oracle, const json& spec);
std::string gen_set_descriptor(const json& spec);

// {"kind":"ball","radius":r} | {"kind":"box","lo":[...],"hi":[...]} |
// {"kind":"points","points":[...]}
WindowPtr window_from_json(const GroupOracle& oracle, const json& spec,
                           std::size_t limit = default_set_power_limit);

json pattern_to_json(const GroupOracle& oracle, const Pattern& p);
Pattern pattern_from_json(const GroupOracle& oracle, const json& j);

json instance_to_json(const GroupOracle& oracle, const LCLInstance& instance);

// {"kind":"pi_sn","s":...,"n":...,"window":...} | {"kind":"freeness","gamma":...}
// | {"kind":"patterns","alphabet":K,"patterns":[...]}
LCLInstance lcl_from_json(const GroupOracle& oracle, const json& spec,
                          std::uint64_t limit = default_pi_sn_limit);

json separation_report_to_json(const SeparationReport& r);

// Full report for certificates: adds component memberships and boundary
// flags when the window has at most `membership_limit` points, histogram
// only above.
json separation_to_json(const SeparationReport& r, const ComponentGraph& cg,
                        std::size_t membership_limit = 1000);

// {vertices, support, triples, cofinite} with oracle-directed labels.
json gamma_graph_to_json(const GroupOracle& oracle, const GammaGraph& g);
GammaGraph gamma_graph_from_json(const GroupOracle& oracle, const json& j);

// Direct check of the defining conditions of Π_{S,n}; kept independent of
// the generator so certificates are re-verified by a different code path.
bool satisfies_pi_sn_conditions(const GroupOracle& oracle, const Pattern& p, const GenSet& s,
                                int n, std::string* why = nullptr);

}  // namespace lclwb

#endif

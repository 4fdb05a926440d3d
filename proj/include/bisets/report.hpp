#pragma once

/// \file
/// JSON reports. Key order is fixed (nlohmann::ordered_json) and nothing
/// time-dependent is written unless timings are requested, so equal inputs
/// give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisets/biset.hpp"
#include "bisets/group.hpp"
#include "bisets/product.hpp"
#include "bisets/rep.hpp"
#include "bisets/sweep.hpp"
#include "bisets/theorem.hpp"

namespace bisets {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCaseReportSchema = "bisets.case-report/1";
inline constexpr const char* kSweepSummarySchema = "bisets.sweep-summary/1";
inline constexpr const char* kInspectSchema = "bisets.inspect/1";

/// Subgroup of a product as sorted (a, b) pairs.
inline Json pairs_json(const ProductGroup& amb, const std::vector<Elem>& composite) {
  Json out = Json::array();
  for (auto c : composite) out.push_back({amb.first(c), amb.second(c)});
  return out;
}

inline Json case_json(const SweepCaseInfo& info, const ProductGroup& kh, const ProductGroup& hg) {
  return Json{{"k", info.k},
              {"h", info.h},
              {"g", info.g},
              {"y", pairs_json(kh, info.y)},
              {"x", pairs_json(hg, info.x)},
              {"n", info.n},
              {"m", info.m}};
}

template <class F>
SweepCaseInfo describe_case(const TheoremCase<F>& c, std::string k, std::string h, std::string g, std::string n,
                            std::string m, std::size_t index = 0) {
  return {index, std::move(k), std::move(h), std::move(g), c.y.elements(), c.x.elements(), std::move(n), std::move(m)};
}

struct ReportContext {
  std::uint64_t seed = 0;
  std::vector<Mode> modes;
  std::optional<double> seconds;  // written only when set
};

template <class F>
Json case_report(const SweepCaseInfo& info, const TheoremCase<F>& c, const CaseResult& r, const ReportContext& ctx) {
  const auto& kg = *c.kg;
  Json j;
  j["schema"] = kCaseReportSchema;
  j["index"] = info.index;
  j["case"] = case_json(info, *c.y.ambient(), *c.x.ambient());
  j["field"] = r.field;
  j["seed"] = ctx.seed;
  Json modes = Json::array();
  for (auto m : ctx.modes) modes.push_back(to_string(m));
  j["modes"] = modes;
  j["dims"] = {{"lhs", r.lhs_dim}, {"rhs", r.rhs_dim}};
  Json classes = Json::array();
  for (const auto& cls : conjugacy_classes(*kg.group())) classes.push_back(pairs_json(kg, {cls.front()}).front());
  j["characters"] = {{"class_reps", classes},
                     {"lhs", r.lhs_character},
                     {"rhs", r.rhs_character},
                     {"decisive", r.characters_decisive}};
  Json summands = Json::array();
  for (const auto& s : r.summands)
    summands.push_back({{"t", s.t}, {"subgroup", pairs_json(kg, s.z)}, {"middle", s.middle}, {"dim", s.dim}});
  j["summands"] = summands;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"mode", to_string(v.mode)}, {"pass", v.pass}, {"detail", v.detail}});
  j["verdicts"] = verdicts;
  j["hom_dim"] = r.hom_dim ? Json(*r.hom_dim) : Json(nullptr);
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  j["pass"] = r.pass;
  if (ctx.seconds) j["timings"] = {{"seconds", *ctx.seconds}};
  return j;
}

// ---- inspect dumps ----

inline Json group_json(const Group& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["generators"] = g.generators();
  Json table = Json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  j["table"] = table;
  Json inv = Json::array();
  for (Elem a = 0; a < g.order(); ++a) inv.push_back(g.inv(a));
  j["inverse"] = inv;
  j["classes"] = conjugacy_classes(g);
  return j;
}

inline Json group_inspect(const GroupPtr& g) {
  Json j;
  j["schema"] = kInspectSchema;
  j["kind"] = "group";
  j["group"] = group_json(*g);
  const auto subs = all_subgroups(g);
  Json sj = Json::array();
  for (const auto& s : subs) sj.push_back(s.elements());
  j["subgroups"] = sj;
  const Rationals q;
  Json chars = Json::object();
  chars["trivial"] = character(trivial_rep(g, q)).formatted();
  if (g->order() > 1)
    chars["perm"] = character(perm_rep(g, subgroup_generated(g, {g->generators().front()}), q)).formatted();
  chars["regular"] = character(regular_rep(g, q)).formatted();
  j["characters"] = chars;
  return j;
}

inline Json product_subgroup_json(const ProductSubgroup& x) {
  const auto& amb = *x.ambient();
  return Json{{"ambient", amb.group()->name()},
              {"elements", pairs_json(amb, x.elements())},
              {"order", x.size()},
              {"p1", x.p1().elements()},
              {"k1", x.k1().elements()},
              {"p2", x.p2().elements()},
              {"k2", x.k2().elements()}};
}

inline Json subgroup_inspect(const ProductSubgroup& x) {
  Json j;
  j["schema"] = kInspectSchema;
  j["kind"] = "subgroup";
  j["subgroup"] = product_subgroup_json(x);
  return j;
}

/// Orbits of (K x H)/Y x_H (H x G)/X against the double cosets p2(Y)\H/p1(X).
inline Json compose_inspect(const ProductSubgroup& y, const ProductSubgroup& x, const ProductGroupPtr& kg) {
  auto v = transitive_biset(y);
  auto u = transitive_biset(x);
  auto c = compose_bisets(v.biset, u.biset, kg);
  const auto reps = mackey_reps(y, x);
  Json j;
  j["schema"] = kInspectSchema;
  j["kind"] = "compose";
  j["y"] = product_subgroup_json(y);
  j["x"] = product_subgroup_json(x);
  j["points"] = c.biset->size();
  const auto orbits = c.biset->orbit_reps();
  j["orbits"] = orbits.size();
  j["double_coset_reps"] = reps;
  j["orbit_count_matches"] = orbits.size() == reps.size();
  Json stabs = Json::array();
  for (auto w : orbits) stabs.push_back({{"point", w}, {"stabilizer", pairs_json(*kg, stabilizer(c, w).elements())}});
  j["stabilizers"] = stabs;
  return j;
}

}  // namespace bisets

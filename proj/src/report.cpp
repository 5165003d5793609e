#include "arrkit/report.hpp"

namespace arrkit {

namespace {

Json opt_exps(const std::optional<std::vector<int>>& v) {
  if (!v) return nullptr;
  return *v;
}

Json hyperplane_list(const std::vector<Hyperplane>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back(h.str());
  return out;
}

}  // namespace

Json to_json(const ClassificationReport& r) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["exponents"] = r.exponents;
  j["level"] = r.level >= 0 ? Json(r.level) : Json(nullptr);
  j["generator_degrees"] = r.generator_degrees;
  j["syzygy_degrees"] = r.syzygy_degrees;
  j["strict"] = r.strict;
  j["verified_to"] = r.verified_to;
  j["syzygy_checked_to"] = r.syzygy_checked_to;
  j["hilbert_checked_to"] = r.hilbert_checked_to;
  if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
  return j;
}

Json to_json(const TripleReport& r) {
  Json j;
  j["index"] = r.index;
  j["sizes"] = {r.size_a, r.size_del, r.size_rest};
  j["exp_a"] = opt_exps(r.exp_a);
  j["exp_del"] = opt_exps(r.exp_del);
  j["exp_rest"] = opt_exps(r.exp_rest);
  j["cond_a"] = r.cond_a;
  j["cond_del"] = r.cond_del;
  j["cond_rest"] = r.cond_rest;
  j["all_three"] = r.all_three;
  return j;
}

Json to_json(const DivisionReport& r) {
  Json j;
  j["restriction_free"] = r.restriction_free;
  j["exp_rest"] = opt_exps(r.exp_rest);
  j["divides"] = r.divides;
  j["concluded_free"] = r.concluded_free;
  return j;
}

Json to_json(const MatBchReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  j["exp_del"] = r.exp_del;
  j["d"] = r.d;
  j["branch"] = r.branch;
  j["predicted"] = r.predicted;
  j["confirmed"] = r.confirmed;
  return j;
}

Json to_json(const RelativeReport& r) {
  Json j;
  j["d"] = r.d;
  j["a_free"] = r.a_free;
  j["branch1"] = r.branch1;
  j["branch2_literal"] = r.branch2_literal;
  j["branch2_modulo"] = r.branch2_modulo;
  j["equivalence_literal"] = r.equivalence_literal;
  j["equivalence_modulo"] = r.equivalence_modulo;
  j["large_level_applicable"] = r.large_level_applicable;
  j["large_level_rhs"] = r.large_level_rhs;
  j["large_level_confirmed"] = r.large_level_confirmed;
  return j;
}

Json to_json(const AdditionReport& r) {
  Json j;
  j["base_free"] = r.base_free;
  j["exp_base"] = r.exp_base;
  j["d"] = r.d;
  j["applicable"] = r.applicable;
  j["predicted_poexp"] = r.predicted_poexp;
  j["predicted_level"] = r.predicted_level;
  j["actual"] = to_json(r.actual);
  j["confirmed"] = r.confirmed;
  return j;
}

Json to_json(const FiltrationResult& r) {
  Json j;
  j["exists"] = r.exists;
  j["order"] = r.order;
  j["exponents"] = r.exponents;
  return j;
}

Json to_json(const FreeAdditionsReport& r) {
  Json j;
  j["pool"] = hyperplane_list(r.pool);
  j["skipped_duplicates"] = r.skipped_duplicates;
  j["hit_indices"] = r.hit_indices;
  j["hit_exponents"] = r.hit_exponents;
  j["uniqueness_applies"] = r.uniqueness_applies;
  j["props_checked"] = r.props_checked;
  return j;
}

Json to_json(const CombinatorialDeletionReport& r) {
  Json j;
  j["predicted_free"] = r.predicted_free;
  j["failures"] = r.failures;
  j["actual_free"] = r.actual_free;
  return j;
}

Json to_json(const ConjectureScan& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["index"] = row.index;
    x["d"] = row.d;
    x["in_exponents"] = row.in_exponents;
    x["above_all"] = row.above_all;
    x["holds"] = row.holds;
    x["small_roots_codims"] = row.thm_small_roots_codims;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["conjecture_holds"] = r.conjecture_holds;
  return j;
}

Json to_json(const YoshinagaReport& r) {
  Json j;
  j["ziegler_exp"] = r.ziegler_exp;
  j["b2_0"] = r.b20;
  j["gap"] = r.gap;
  j["free_predicted"] = r.free_predicted;
  return j;
}

Json to_json(const RestrictionBoundReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["a"] = r.a;
  j["b"] = r.b;
  j["n_l"] = r.n_l;
  j["branch"] = r.branch;
  j["equality"] = r.equality;
  j["both_free"] = r.both_free;
  return j;
}

}  // namespace arrkit

#pragma once

#include "arrkit/classify.hpp"

namespace arrkit {

// Terao addition-deletion triple (A, A minus H, restriction to H); any two
// of the exponent-matched conditions force the third
struct TripleReport {
  int index = -1;
  int size_a = 0;
  int size_del = 0;
  int size_rest = 0;
  std::optional<std::vector<int>> exp_a;
  std::optional<std::vector<int>> exp_del;
  std::optional<std::vector<int>> exp_rest;
  bool cond_a = false;
  bool cond_del = false;
  bool cond_rest = false;
  bool all_three = false;
};
TripleReport addition_deletion_check(const Arrangement& a, int i);

// freeness via a free restriction whose Poincare polynomial divides the
// ambient one
struct DivisionReport {
  bool restriction_free = false;
  std::optional<std::vector<int>> exp_rest;
  bool divides = false;
  bool concluded_free = false;
};
DivisionReport division_check(const Arrangement& a, int i);

// addition with a free deletion: d = |A'| - |A^H| pinned at the top of the
// exponents forces freeness; strictly between the top two is impossible
struct MatBchReport {
  bool applicable = false;
  std::vector<int> exp_del;
  int d = 0;
  std::string branch;
  std::vector<int> predicted;
  bool confirmed = false;
};
MatBchReport mat_bch_check(const Arrangement& a, int i);

// constructive deletion: from a free basis of A, build either a free basis
// or the full plus-one certificate of A minus H, checking every division
// and membership on the way
struct DeletionConstruction {
  Verdict verdict = Verdict::Free;
  std::optional<FreenessCertificate> free_cert;
  std::optional<POGCertificate> pog_cert;
};
DeletionConstruction deletion_construct_pog(const Arrangement& a, int i);

// relative freeness criteria on the triple; the slice condition of the
// second branch is evaluated both literally and modulo the level line
struct RelativeReport {
  int d = 0;
  bool a_free = false;
  bool branch1 = false;
  bool branch2_literal = false;
  bool branch2_modulo = false;
  bool equivalence_literal = false;
  bool equivalence_modulo = false;
  bool large_level_applicable = false;
  bool large_level_rhs = false;
  bool large_level_confirmed = false;
};
RelativeReport relative_criterion(const Arrangement& a, int i);

// addition over a free base: predicts free-or-strictly-plus-one with the
// top two exponents shifted, once d clears the third-largest exponent
// (no gate needed in rank 3)
struct AdditionReport {
  bool base_free = false;
  std::vector<int> exp_base;
  int d = 0;
  bool applicable = false;
  std::vector<int> predicted_poexp;
  int predicted_level = 0;
  ClassificationReport actual;
  bool confirmed = false;
};
AdditionReport addition_classify(const Arrangement& aprime, const Hyperplane& h);

struct FiltrationResult {
  bool exists = false;
  std::vector<int> order;
  std::vector<std::vector<int>> exponents;
};
FiltrationResult free_filtration(const Arrangement& a);

// hyperplanes whose addition keeps the arrangement free; candidates default
// to the spans of pairs of rank-2 flats
struct FreeAdditionsReport {
  std::vector<Hyperplane> pool;
  int skipped_duplicates = 0;
  std::vector<int> hit_indices;
  std::vector<std::vector<int>> hit_exponents;
  bool uniqueness_applies = false;
  bool props_checked = false;
};
FreeAdditionsReport free_additions(const Arrangement& a,
                                   const std::vector<Hyperplane>& extra = {},
                                   bool include_spans = true);

// lattice-only deletion test: the deletion of a free arrangement stays free
// iff -1/(|A_X| - |A_X^H|) is a root of pi(A_X; t) for every flat X of the
// restriction
struct CombinatorialDeletionReport {
  bool predicted_free = true;
  std::vector<std::string> failures;
  bool actual_free = false;
};
CombinatorialDeletionReport combinatorial_deletion_check(const Arrangement& a,
                                                         int i);

// for a free arrangement, scans every deletion for the root-or-beyond
// disjunction on d = |A| - |A^H|, plus the small-roots bound wherever the
// deletion is locally free at some codimension
struct ConjectureScan {
  struct Row {
    int index = -1;
    int d = 0;
    bool in_exponents = false;
    bool above_all = false;
    bool holds = false;
    std::vector<int> thm_small_roots_codims;
  };
  std::vector<Row> rows;
  bool conjecture_holds = true;
};
ConjectureScan conjecture_scan(const Arrangement& a);

}  // namespace arrkit

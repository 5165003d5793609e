#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/derivations.hpp"
#include "arrkit/lattice.hpp"

namespace arrkit {

enum class Verdict { Free, StrictPOG, POG, NeitherAtBound };

std::string verdict_name(Verdict v);

struct FreenessCertificate {
  std::vector<int> exponents;       // ascending, sum = |A| (or |m|)
  std::vector<Derivation> basis;
  Rational saito_constant;
};

struct POGCertificate {
  std::vector<int> poexp;  // ascending, contains the Euler degree 1
  int level = 0;
  std::vector<Derivation> generators;  // l+1, degree-ascending
  std::vector<int> generator_degrees;
  std::vector<Poly> relation;  // one coefficient per generator
  int level_index = -1;        // generator carrying a nonzero linear coeff
  bool strict = false;
  Poly level_coefficient;  // the linear form alpha; zero iff not strict
};

struct ClassificationReport {
  Verdict verdict = Verdict::NeitherAtBound;
  std::vector<int> exponents;  // exp(A) or poexp(A)
  int level = -1;
  std::vector<int> generator_degrees;
  std::vector<int> syzygy_degrees;
  bool strict = false;
  int verified_to = 0;
  int syzygy_checked_to = 0;
  int hilbert_checked_to = 0;
  std::string obstruction;  // NeitherAtBound diagnostics
  std::optional<FreenessCertificate> free_cert;
  std::optional<POGCertificate> pog_cert;
};

struct NonEssentialError : std::runtime_error {
  NonEssentialError() : std::runtime_error("arrangement is not essential") {}
};

// freeness with Saito-certified basis; error on non-essential simple input
std::optional<FreenessCertificate> is_free(const Arrangement& a,
                                           const Multiplicity* m = nullptr);

ClassificationReport classify(const Arrangement& a, int bound = -1,
                              int hilbert_bound = -1);

// tolerant wrappers: essentialize first, pad exponents with zeros
std::optional<std::vector<int>> is_free_any(const Arrangement& a);
ClassificationReport classify_any(const Arrangement& a, int bound = -1);

// process-wide memo keyed by canonical form set
const ClassificationReport& classify_cached(const Arrangement& a);

struct LocalFreenessReport {
  bool ok = true;
  std::string witness;  // first non-free localization when !ok
};

// checks freeness of A_X over proper flats with 2 <= codim <= upto_codim
// (default: all proper flats); along >= 0 limits to flats inside that
// hyperplane
LocalFreenessReport is_locally_free(const Arrangement& a, int upto_codim = -1,
                                    int along = -1);

struct YoshinagaReport {
  std::vector<int> ziegler_exp;  // (d1, d2) of the rank-2 Ziegler restriction
  long long b20 = 0;
  long long gap = 0;  // b20 - d1 d2 >= 0; zero iff free
  bool free_predicted = false;
};

YoshinagaReport yoshinaga_criterion(const Arrangement& a, int i);

// chi(A;t) = prod (t - d_i) for the certified exponents; must always hold
bool terao_factorization_check(const Arrangement& a,
                               const FreenessCertificate& cert);

struct RestrictionBoundReport {
  bool applicable = false;
  std::string reason;      // when not applicable
  long long a = 0, b = 0;  // chi(A;t) = (t-1)(t-a)(t-b), a <= b
  long long n_l = 0;       // distinct intersections H cap L, H != L
  std::string branch;      // which inequality holds
  bool equality = false;
  bool both_free = false;  // verified when equality holds
};

// l = 3; L may or may not belong to A
RestrictionBoundReport restriction_size_bound_check(const Arrangement& a,
                                                    const Hyperplane& l);

}  // namespace arrkit

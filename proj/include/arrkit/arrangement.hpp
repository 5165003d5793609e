#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrkit/linalg.hpp"
#include "arrkit/poly.hpp"
#include "arrkit/rational.hpp"

namespace arrkit {

// Linear form through the origin, normalized so the first nonzero
// coefficient is +1. Hyperplane identity across arrangements is by this
// normalized form.
struct Hyperplane {
  std::vector<Rational> a;

  static Hyperplane from(std::vector<Rational> coeffs);  // normalizes
  bool operator==(const Hyperplane& o) const { return a == o.a; }
  Poly form() const;  // as a linear Poly
  std::string str() const;
};

// m(H) per hyperplane index, all >= 1
using Multiplicity = std::vector<int>;

struct Arrangement {
  int nvars = 0;
  std::vector<Hyperplane> hyperplanes;

  int size() const { return static_cast<int>(hyperplanes.size()); }
  int index_of(const Hyperplane& h) const;  // -1 when absent
};

// throws std::invalid_argument on zero forms, proportional duplicates,
// or length mismatches
Arrangement make_arrangement(int nvars,
                             const std::vector<std::vector<Rational>>& forms);

bool is_essential(const Arrangement& a);

Poly defining_polynomial(const Arrangement& a,
                         const Multiplicity* m = nullptr);

Arrangement delete_hyperplane(const Arrangement& a, int i);
Arrangement add_hyperplane(const Arrangement& a, const Hyperplane& h);

// sub-arrangement with the given hyperplane indices, ambient space kept
Arrangement subarrangement(const Arrangement& a, const std::vector<int>& idx);

struct Restriction {
  Arrangement arr;  // in nvars-1 variables
  // nvars x (nvars-1) matrix whose columns are the chosen basis of H
  QMatrix embedding;
  // preimages[k] = indices of hyperplanes of A (H excluded) meeting H in
  // the k-th restricted hyperplane
  std::vector<std::vector<int>> preimages;
};

Restriction restrict_arrangement(const Arrangement& a, int i);

struct ZieglerRestriction {
  Arrangement restricted;
  Multiplicity mult;          // m^H, counting preimages
  std::vector<int> section;   // smallest preimage index per restricted plane
  QMatrix embedding;
  std::vector<std::vector<int>> preimages;
};

ZieglerRestriction ziegler_restrict(const Arrangement& a, int i);

int mult_total(const Multiplicity& m);

struct Essentialization {
  Arrangement arr;          // essential, in rank(A) variables
  std::vector<int> pivots;  // coordinates kept (pivot columns of the forms)
  int rank = 0;
};

Essentialization essentialize(const Arrangement& a);

// stable identity string: sorted normalized forms (plus multiplicities)
std::string canonical_key(const Arrangement& a,
                          const Multiplicity* m = nullptr);

struct ParsedArrangement {
  Arrangement arr;
  std::optional<Multiplicity> mult;
};

// text format: `vars: <n>` header, then one form per line as n
// whitespace-separated rationals (tokens a, -a, a/b), optional `| m`
// multiplicity column, `#` comments. Errors carry line numbers.
ParsedArrangement parse_arrangement(const std::string& text);
std::string write_arrangement(const Arrangement& a,
                              const Multiplicity* m = nullptr);

}  // namespace arrkit

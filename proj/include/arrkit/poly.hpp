#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrkit/rational.hpp"

namespace arrkit {

// A monomial in up to 8 variables, exponents packed 8 bits each with x0 in
// the most significant used byte. Numeric order on the packed word is then
// exactly lex order with x0 > x1 > ... .
using Mono = std::uint64_t;

inline int mono_shift(int nv, int i) { return 8 * (nv - 1 - i); }

inline Mono mono_one() { return 0; }

inline Mono mono_var(int nv, int i) { return Mono(1) << mono_shift(nv, i); }

inline int mono_exp(Mono m, int nv, int i) {
  return static_cast<int>((m >> mono_shift(nv, i)) & 0xff);
}

inline Mono mono_pack(const std::vector<int>& e) {
  Mono m = 0;
  int nv = static_cast<int>(e.size());
  for (int i = 0; i < nv; ++i) m |= Mono(e[i]) << mono_shift(nv, i);
  return m;
}

inline std::vector<int> mono_unpack(Mono m, int nv) {
  std::vector<int> e(nv);
  for (int i = 0; i < nv; ++i) e[i] = mono_exp(m, nv, i);
  return e;
}

inline Mono mono_mul(Mono a, Mono b) { return a + b; }

// b must divide a componentwise
inline bool mono_divides(Mono a, Mono b, int nv) {
  for (int i = 0; i < nv; ++i)
    if (mono_exp(b, nv, i) > mono_exp(a, nv, i)) return false;
  return true;
}

inline Mono mono_div(Mono a, Mono b) { return a - b; }

inline Mono mono_lcm(Mono a, Mono b, int nv) {
  Mono m = 0;
  for (int i = 0; i < nv; ++i) {
    int e = std::max(mono_exp(a, nv, i), mono_exp(b, nv, i));
    m |= Mono(e) << mono_shift(nv, i);
  }
  return m;
}

inline int mono_deg(Mono m, int nv) {
  int d = 0;
  for (int i = 0; i < nv; ++i) d += mono_exp(m, nv, i);
  return d;
}

// All monomials of degree d in nv variables, lex-descending. Cached.
const std::vector<Mono>& monomial_basis(int nv, int d);

// Monomials of degree d with zero exponent on variable skip, lex-descending.
const std::vector<Mono>& monomial_basis_excl(int nv, int d, int skip);

// Position of m in monomial_basis(nv, d); m must be present.
int mono_index(int nv, int d, Mono m);
int mono_index_excl(int nv, int d, int skip, Mono m);

long long dim_degree(int nv, int d);  // C(d+nv-1, nv-1), 0 for d < 0

std::string mono_str(Mono m, int nv, const std::vector<std::string>& vars);

// Multivariate polynomial over Q, sparse, terms kept lex-descending.
class Poly {
public:
  using Terms = std::map<Mono, Rational, std::greater<Mono>>;

  Poly() : nv_(0) {}
  explicit Poly(int nv) : nv_(nv) {}

  static Poly constant(int nv, const Rational& c);
  static Poly variable(int nv, int i);
  // c0*x0 + ... + c_{nv-1}*x_{nv-1}
  static Poly linear(int nv, const std::vector<Rational>& c);
  static Poly term(int nv, Mono m, const Rational& c);

  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  const Terms& terms() const { return t_; }

  const Rational& coeff(Mono m) const;
  void add_term(Mono m, const Rational& c);

  // leading term in lex order; polynomial must be nonzero
  Mono lead_mono() const { return t_.begin()->first; }
  const Rational& lead_coeff() const { return t_.begin()->second; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nv_ == b.nv_ && a.t_ == b.t_;
  }

  void add_scaled(const Poly& o, const Rational& c);  // this += c*o

  Poly derivative(int i) const;

  // substitute x_i -> images[i]; images live in a possibly different ring
  Poly substitute(const std::vector<Poly>& images) const;

  Rational eval(const std::vector<Rational>& x) const;

  // exact division; nullopt if the divisor does not divide this
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  std::string str(const std::vector<std::string>& vars) const;
  std::string str() const;  // x,y,z,w,... default names

  // dense coefficient vector over monomial_basis(nv, d); requires
  // homogeneous of degree d (or zero)
  std::vector<Rational> dense(int d) const;
  static Poly from_dense(int nv, int d, const std::vector<Rational>& v);

private:
  int nv_;
  Terms t_;
};

Poly pow(const Poly& p, int k);

std::vector<std::string> default_var_names(int nv);

// Univariate polynomial over Q, coefficients ascending by degree.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly t();  // the identity polynomial t

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly mul_linear(const Rational& root) const;  // this * (t - root)

  // quotient and remainder by a nonzero divisor
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  bool divides(const UniPoly& other) const;  // this | other
  std::optional<UniPoly> divide_exact(const UniPoly& d) const;

  // nonnegative integer roots with multiplicity, ascending, searched in
  // [0, hi]; callers pass hi = |A| which bounds all roots of interest
  std::vector<long long> integer_roots(long long hi) const;

  std::string str(const std::string& var = "t") const;

private:
  std::vector<Rational> c_;
  void trim();
};

Rational binomial(int n, int k);

}  // namespace arrkit

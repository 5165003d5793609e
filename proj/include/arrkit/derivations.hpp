#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/linalg.hpp"
#include "arrkit/poly.hpp"

namespace arrkit {

// theta = sum c_i d/dx_i with homogeneous polynomial coefficients of a
// common degree
struct Derivation {
  int nvars = 0;
  std::vector<Poly> c;

  static Derivation zero(int nvars, int degree);
  int degree() const;  // -1 when zero
  bool is_zero() const;
  Poly apply(const Poly& f) const;  // sum c_i df/dx_i
  bool operator==(const Derivation& o) const { return c == o.c; }
  std::string str() const;
};

Derivation euler_derivation(int nvars);

// theta(alpha_H) divisible by alpha_H^m(H) for every H
bool in_module(const Derivation& theta, const Arrangement& a,
               const Multiplicity* m = nullptr);

// dense coordinates over (component, monomial_basis(nv, d)), blocks by
// component
QVec derivation_dense(const Derivation& theta, int d);
Derivation derivation_from_dense(int nv, int d, const QVec& v);

// rows of the linear system cutting out D(A,m)_d inside (S_d)^l; when
// dh >= 0 the condition theta(alpha_dh) = 0 is appended
std::vector<QVec> slice_rows_exact(const Arrangement& a, const Multiplicity* m,
                                   int d, int dh = -1);
std::vector<std::vector<std::uint32_t>> slice_rows_zp(const Arrangement& a,
                                                      const Multiplicity* m,
                                                      int d, int dh,
                                                      std::uint32_t p);

struct GradedSlice {
  int degree = 0;
  std::vector<Derivation> basis;  // reduced echelon normal form, verified
};

GradedSlice derivation_slice(const Arrangement& a, const Multiplicity* m,
                             int d, int dh = -1);

int slice_dim_exact(const Arrangement& a, const Multiplicity* m, int d,
                    int dh = -1);

// upper bound on the exact dimension via a mod-p rank; exact on prime
// failure fallback exhaustion
int slice_dim_upper(const Arrangement& a, const Multiplicity* m, int d,
                    int dh = -1);

// rho: D(A) -> D(A^H), substitution through the embedding of H
Derivation euler_restriction(const Arrangement& a, int i,
                             const Derivation& theta);

// pi: D_H(A) -> D(A^H, m^H); requires theta(alpha_H) = 0
Derivation ziegler_map(const Arrangement& a, int i, const Derivation& theta);

// rho(Q' theta_E) with Q' built from the Ziegler section, a degree
// |A| - |A^H| member of D(A^H, m^H)
Derivation theta_EH(const Arrangement& a, int i);

struct GeneratorSet {
  std::vector<Derivation> generators;  // degree-ascending
  std::vector<int> degrees;
  int euler_index = -1;  // position of theta_E when m == 1
  int verified_to = 0;
  std::vector<int> slice_dims;  // exact dim D(A,m)_d for d = 0..verified_to
};

GeneratorSet minimal_generators(const Arrangement& a,
                                const Multiplicity* m = nullptr,
                                int bound = -1);

struct SyzygySet {
  // each relation is one Poly per generator, sum r_j g_j = 0
  std::vector<std::vector<Poly>> relations;
  std::vector<int> degrees;  // common degree of r_j g_j per relation
  int verified_to = 0;
};

SyzygySet first_syzygies(const Arrangement& a, const GeneratorSet& g,
                         int bound);

struct SaitoResult {
  bool ok = false;
  Rational constant;
  std::string reason;
};

// candidates must be members of D(A,m); throws std::invalid_argument else
SaitoResult saito_check(const Arrangement& a, const Multiplicity* m,
                        const std::vector<Derivation>& candidates);

}  // namespace arrkit

#include <cstdlib>

#include "arrkit/derivations.hpp"

namespace arrkit {

// The membership condition at one hyperplane H with multiplicity m is
// alpha^m | theta(alpha). With alpha normalized so its pivot variable x_p
// has coefficient 1, write alpha = x_p + beta. Substituting
// x_p = alpha - beta into theta(alpha) and expanding by the binomial
// theorem, the coefficient of alpha^s (a polynomial in the variables
// other than x_p) must vanish for s = 0..m-1. That coefficient is linear
// in the unknown coefficients of theta, which gives the rows below; a
// monomial x_p^k x^{e'} contributes C(k,s) (-beta)^{k-s} x^{e'}.

namespace {

struct BetaPowers {
  // dense coefficients of beta^j over monomial_basis_excl(nv, j, p)
  std::vector<std::vector<Rational>> pw;
};

BetaPowers beta_powers(const std::vector<Rational>& alpha, int nv, int p,
                       int maxdeg) {
  BetaPowers b;
  b.pw.resize(maxdeg + 1);
  b.pw[0] = {q_one()};
  for (int j = 1; j <= maxdeg; ++j) {
    const auto& prev_basis = monomial_basis_excl(nv, j - 1, p);
    const auto& cur_basis = monomial_basis_excl(nv, j, p);
    std::vector<Rational> cur(cur_basis.size());
    for (size_t t = 0; t < prev_basis.size(); ++t) {
      const Rational& c = b.pw[j - 1][t];
      if (c.is_zero()) continue;
      for (int v = 0; v < nv; ++v) {
        if (v == p || alpha[v].is_zero()) continue;
        Mono m = mono_mul(prev_basis[t], mono_var(nv, v));
        cur[mono_index_excl(nv, j, p, m)].add_mul(c, alpha[v]);
      }
    }
    b.pw[j] = std::move(cur);
  }
  return b;
}

int pivot_of(const std::vector<Rational>& alpha) {
  for (size_t i = 0; i < alpha.size(); ++i)
    if (!alpha[i].is_zero()) return static_cast<int>(i);
  abort();
}

}  // namespace

std::vector<QVec> slice_rows_exact(const Arrangement& a, const Multiplicity* m,
                                   int d, int dh) {
  int nv = a.nvars;
  const auto& basis = monomial_basis(nv, d);
  int dim = static_cast<int>(basis.size());
  int ncols = nv * dim;
  std::vector<QVec> rows;
  for (int h = 0; h < a.size(); ++h) {
    const auto& alpha = a.hyperplanes[h].a;
    int mh = m ? (*m)[h] : 1;
    int p = pivot_of(alpha);
    BetaPowers bp = beta_powers(alpha, nv, p, d);
    // one row block per s, indexed by monomial_basis_excl(nv, d-s, p)
    std::vector<int> row_base(mh);
    for (int s = 0; s < mh && s <= d; ++s) {
      row_base[s] = static_cast<int>(rows.size());
      rows.insert(rows.end(), monomial_basis_excl(nv, d - s, p).size(),
                  QVec(ncols));
    }
    for (int e = 0; e < dim; ++e) {
      Mono mono = basis[e];
      int k = mono_exp(mono, nv, p);
      Mono rest = mono - (Mono(k) << mono_shift(nv, p));
      for (int s = 0; s <= std::min(mh - 1, k); ++s) {
        Rational scale = binomial(k, s);
        if ((k - s) % 2) scale.negate();
        const auto& pw = bp.pw[k - s];
        const auto& pwb = monomial_basis_excl(nv, k - s, p);
        for (size_t t = 0; t < pwb.size(); ++t) {
          if (pw[t].is_zero()) continue;
          int r = row_base[s] +
                  mono_index_excl(nv, d - s, p, mono_mul(rest, pwb[t]));
          Rational val = scale * pw[t];
          for (int i = 0; i < nv; ++i) {
            if (alpha[i].is_zero()) continue;
            rows[r][i * dim + e].add_mul(val, alpha[i]);
          }
        }
      }
    }
  }
  if (dh >= 0) {
    const auto& alpha = a.hyperplanes[dh].a;
    for (int e = 0; e < dim; ++e) {
      QVec row(ncols);
      for (int i = 0; i < nv; ++i)
        if (!alpha[i].is_zero()) row[i * dim + e] = alpha[i];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::vector<std::uint32_t>> slice_rows_zp(const Arrangement& a,
                                                      const Multiplicity* m,
                                                      int d, int dh,
                                                      std::uint32_t p) {
  int nv = a.nvars;
  const auto& basis = monomial_basis(nv, d);
  int dim = static_cast<int>(basis.size());
  int ncols = nv * dim;
  std::vector<std::vector<std::uint32_t>> rows;
  for (int h = 0; h < a.size(); ++h) {
    const auto& alpha = a.hyperplanes[h].a;
    std::vector<std::uint32_t> am(nv);
    for (int i = 0; i < nv; ++i) am[i] = to_zp(alpha[i], p);
    int mh = m ? (*m)[h] : 1;
    int piv = pivot_of(alpha);
    // beta powers mod p
    std::vector<std::vector<std::uint32_t>> pw(d + 1);
    pw[0] = {1};
    for (int j = 1; j <= d; ++j) {
      const auto& prev_basis = monomial_basis_excl(nv, j - 1, piv);
      const auto& cur_basis = monomial_basis_excl(nv, j, piv);
      pw[j].assign(cur_basis.size(), 0);
      for (size_t t = 0; t < prev_basis.size(); ++t) {
        std::uint64_t c = pw[j - 1][t];
        if (!c) continue;
        for (int v = 0; v < nv; ++v) {
          if (v == piv || !am[v]) continue;
          int idx = mono_index_excl(nv, j, piv,
                                    mono_mul(prev_basis[t], mono_var(nv, v)));
          pw[j][idx] =
              static_cast<std::uint32_t>((pw[j][idx] + c * am[v]) % p);
        }
      }
    }
    std::vector<int> row_base(mh);
    for (int s = 0; s < mh && s <= d; ++s) {
      row_base[s] = static_cast<int>(rows.size());
      rows.insert(rows.end(), monomial_basis_excl(nv, d - s, piv).size(),
                  std::vector<std::uint32_t>(ncols, 0));
    }
    for (int e = 0; e < dim; ++e) {
      Mono mono = basis[e];
      int k = mono_exp(mono, nv, piv);
      Mono rest = mono - (Mono(k) << mono_shift(nv, piv));
      for (int s = 0; s <= std::min(mh - 1, k); ++s) {
        std::uint64_t scale = to_zp(binomial(k, s), p);
        if ((k - s) % 2 && scale) scale = p - scale;
        const auto& pwb = monomial_basis_excl(nv, k - s, piv);
        for (size_t t = 0; t < pwb.size(); ++t) {
          std::uint64_t pv = pw[k - s][t];
          if (!pv) continue;
          int r = row_base[s] +
                  mono_index_excl(nv, d - s, piv, mono_mul(rest, pwb[t]));
          std::uint64_t val = scale * pv % p;
          for (int i = 0; i < nv; ++i) {
            if (!am[i]) continue;
            auto& cell = rows[r][i * dim + e];
            cell = static_cast<std::uint32_t>((cell + val * am[i]) % p);
          }
        }
      }
    }
  }
  if (dh >= 0) {
    const auto& alpha = a.hyperplanes[dh].a;
    for (int e = 0; e < dim; ++e) {
      std::vector<std::uint32_t> row(ncols, 0);
      for (int i = 0; i < nv; ++i)
        if (!alpha[i].is_zero()) row[i * dim + e] = to_zp(alpha[i], p);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace arrkit

#include "arrkit/derivations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace arrkit {

namespace {

QMatrix rows_to_matrix(std::vector<QVec> rows, int ncols) {
  QMatrix m;
  m.nc = ncols;
  m.nr = static_cast<int>(rows.size());
  m.rows = std::move(rows);
  return m;
}

bool all_zero(const QVec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

void normalize_lead(QVec& v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    if (!c.is_one()) {
      Rational inv = c.inverse();
      for (auto& x : v)
        if (!x.is_zero()) x *= inv;
    }
    return;
  }
}

// x_v * (dense vector of degree d) as a dense vector of degree d+1
QVec shift_up(const QVec& row, int nv, int d, int v) {
  const auto& bfrom = monomial_basis(nv, d);
  int dim_from = static_cast<int>(bfrom.size());
  int dim_to = static_cast<int>(monomial_basis(nv, d + 1).size());
  QVec out(static_cast<size_t>(nv) * dim_to);
  for (int i = 0; i < nv; ++i)
    for (int t = 0; t < dim_from; ++t) {
      const Rational& c = row[i * dim_from + t];
      if (c.is_zero()) continue;
      Mono m = mono_mul(bfrom[t], mono_var(nv, v));
      out[i * dim_to + mono_index(nv, d + 1, m)] = c;
    }
  return out;
}

Poly theta_of_form(const Derivation& t, const std::vector<Rational>& alpha) {
  Poly val(t.nvars);
  for (int i = 0; i < t.nvars; ++i)
    if (!alpha[i].is_zero()) val.add_scaled(t.c[i], alpha[i]);
  return val;
}

int pivot_of(const std::vector<Rational>& alpha) {
  for (size_t i = 0; i < alpha.size(); ++i)
    if (!alpha[i].is_zero()) return static_cast<int>(i);
  abort();
}

// linear images of the ambient coordinates on H, in the H coordinates
std::vector<Poly> embedding_images(const QMatrix& embedding) {
  int nv = embedding.nr;
  std::vector<Poly> images;
  for (int r = 0; r < nv; ++r) {
    QVec c(nv - 1);
    for (int col = 0; col < nv - 1; ++col) c[col] = embedding.at(r, col);
    images.push_back(Poly::linear(nv - 1, c));
  }
  return images;
}

Derivation push_to_restriction(const Arrangement& a, int i,
                               const Derivation& theta,
                               const QMatrix& embedding) {
  int nv = a.nvars;
  std::vector<Poly> images = embedding_images(embedding);
  int p = pivot_of(a.hyperplanes[i].a);
  Derivation out;
  out.nvars = nv - 1;
  for (int j = 0; j < nv; ++j) {
    if (j == p) continue;
    out.c.push_back(theta.c[j].substitute(images));
  }
  return out;
}

}  // namespace

Derivation Derivation::zero(int nvars, int) {
  Derivation d;
  d.nvars = nvars;
  d.c.assign(nvars, Poly(nvars));
  return d;
}

int Derivation::degree() const {
  for (const auto& p : c)
    if (!p.is_zero()) return p.degree();
  return -1;
}

bool Derivation::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

Poly Derivation::apply(const Poly& f) const {
  Poly r(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (c[i].is_zero()) continue;
    r += c[i] * f.derivative(i);
  }
  return r;
}

std::string Derivation::str() const {
  auto names = default_var_names(nvars);
  std::string s = "(";
  for (int i = 0; i < nvars; ++i) {
    if (i) s += ", ";
    s += c[i].str(names);
  }
  return s + ")";
}

Derivation euler_derivation(int nvars) {
  Derivation d;
  d.nvars = nvars;
  for (int i = 0; i < nvars; ++i) d.c.push_back(Poly::variable(nvars, i));
  return d;
}

bool in_module(const Derivation& theta, const Arrangement& a,
               const Multiplicity* m) {
  for (int h = 0; h < a.size(); ++h) {
    Poly val = theta_of_form(theta, a.hyperplanes[h].a);
    if (val.is_zero()) continue;
    Poly div = pow(a.hyperplanes[h].form(), m ? (*m)[h] : 1);
    if (!val.divide_exact(div)) return false;
  }
  return true;
}

QVec derivation_dense(const Derivation& theta, int d) {
  int nv = theta.nvars;
  int dim = static_cast<int>(monomial_basis(nv, d).size());
  QVec out(static_cast<size_t>(nv) * dim);
  for (int i = 0; i < nv; ++i) {
    if (theta.c[i].is_zero()) continue;
    std::vector<Rational> block = theta.c[i].dense(d);
    for (int t = 0; t < dim; ++t) out[i * dim + t] = std::move(block[t]);
  }
  return out;
}

Derivation derivation_from_dense(int nv, int d, const QVec& v) {
  int dim = static_cast<int>(monomial_basis(nv, d).size());
  Derivation theta;
  theta.nvars = nv;
  for (int i = 0; i < nv; ++i) {
    std::vector<Rational> block(v.begin() + i * dim,
                                v.begin() + (i + 1) * dim);
    theta.c.push_back(Poly::from_dense(nv, d, block));
  }
  return theta;
}

GradedSlice derivation_slice(const Arrangement& a, const Multiplicity* m,
                             int d, int dh) {
  int nv = a.nvars;
  int ncols = nv * static_cast<int>(monomial_basis(nv, d).size());
  auto kern =
      kernel_basis(rows_to_matrix(slice_rows_exact(a, m, d, dh), ncols));
  GradedSlice s;
  s.degree = d;
  for (auto& v : kern) {
    Derivation t = derivation_from_dense(nv, d, v);
    if (!in_module(t, a, m)) abort();
    if (dh >= 0 && !theta_of_form(t, a.hyperplanes[dh].a).is_zero()) abort();
    s.basis.push_back(std::move(t));
  }
  return s;
}

int slice_dim_exact(const Arrangement& a, const Multiplicity* m, int d,
                    int dh) {
  int nv = a.nvars;
  int ncols = nv * static_cast<int>(monomial_basis(nv, d).size());
  return ncols - rank(rows_to_matrix(slice_rows_exact(a, m, d, dh), ncols));
}

int slice_dim_upper(const Arrangement& a, const Multiplicity* m, int d,
                    int dh) {
  int nv = a.nvars;
  int ncols = nv * static_cast<int>(monomial_basis(nv, d).size());
  for (std::uint32_t p : kPrimes) {
    try {
      return ncols - zp_rank(slice_rows_zp(a, m, d, dh, p), ncols, p);
    } catch (const BadPrime&) {
      continue;
    }
  }
  return slice_dim_exact(a, m, d, dh);
}

Derivation euler_restriction(const Arrangement& a, int i,
                             const Derivation& theta) {
  if (!in_module(theta, a))
    throw std::invalid_argument("derivation not in D(A)");
  Restriction r = restrict_arrangement(a, i);
  Derivation out = push_to_restriction(a, i, theta, r.embedding);
  if (!in_module(out, r.arr)) abort();
  return out;
}

Derivation ziegler_map(const Arrangement& a, int i, const Derivation& theta) {
  if (!in_module(theta, a))
    throw std::invalid_argument("derivation not in D(A)");
  if (!theta_of_form(theta, a.hyperplanes[i].a).is_zero())
    throw std::invalid_argument("derivation not in D_H(A)");
  ZieglerRestriction zr = ziegler_restrict(a, i);
  Derivation out = push_to_restriction(a, i, theta, zr.embedding);
  if (!in_module(out, zr.restricted, &zr.mult)) abort();
  return out;
}

Derivation theta_EH(const Arrangement& a, int i) {
  ZieglerRestriction zr = ziegler_restrict(a, i);
  int nv = a.nvars;
  std::vector<Poly> images = embedding_images(zr.embedding);
  Poly qbar = Poly::constant(nv - 1, q_one());
  for (size_t k = 0; k < zr.section.size(); ++k) {
    Poly pulled = a.hyperplanes[zr.section[k]].form().substitute(images);
    qbar = qbar * pow(pulled, zr.mult[k] - 1);
  }
  Derivation out;
  out.nvars = nv - 1;
  for (int j = 0; j < nv - 1; ++j)
    out.c.push_back(qbar * Poly::variable(nv - 1, j));
  int d = a.size() - zr.restricted.size();
  if (out.degree() != d) abort();
  if (!in_module(out, zr.restricted, &zr.mult)) abort();
  return out;
}

GeneratorSet minimal_generators(const Arrangement& a, const Multiplicity* m,
                                int bound) {
  int nv = a.nvars;
  int total = m ? mult_total(*m) : a.size();
  int B = bound >= 1 ? bound : std::max(total, 1);
  GeneratorSet out;
  out.verified_to = B;
  out.slice_dims.assign(B + 1, 0);
  EchelonQ prev(nv);  // degree 0: dim S_0 = 1, width = nv
  {
    auto kern = kernel_basis(rows_to_matrix(slice_rows_exact(a, m, 0, -1), nv));
    out.slice_dims[0] = static_cast<int>(kern.size());
    for (auto& v : kern) {
      QVec res = prev.residue(v);
      if (all_zero(res)) continue;
      normalize_lead(res);
      out.generators.push_back(derivation_from_dense(nv, 0, res));
      out.degrees.push_back(0);
      prev.insert(std::move(res));
    }
  }
  for (int d = 1; d <= B; ++d) {
    int dim = static_cast<int>(monomial_basis(nv, d).size());
    int width = nv * dim;
    EchelonQ cur(width);
    for (const auto& row : prev.rows())
      for (int v = 0; v < nv; ++v) cur.insert(shift_up(row, nv, d - 1, v));
    int rmult = cur.dim();
    int upper = slice_dim_upper(a, m, d, -1);
    if (upper == rmult) {
      // squeeze: span of multiples <= D_d <= mod-p bound, all equal
      out.slice_dims[d] = rmult;
      prev = std::move(cur);
      continue;
    }
    auto kern =
        kernel_basis(rows_to_matrix(slice_rows_exact(a, m, d, -1), width));
    out.slice_dims[d] = static_cast<int>(kern.size());
    if (d == 1 && m == nullptr && a.size() > 0) {
      // seed theta_E as the first degree-1 generator
      QVec res = cur.residue(derivation_dense(euler_derivation(nv), 1));
      if (!all_zero(res)) {
        out.euler_index = static_cast<int>(out.generators.size());
        out.generators.push_back(euler_derivation(nv));
        out.degrees.push_back(1);
        cur.insert(std::move(res));
      }
    }
    for (auto& v : kern) {
      QVec res = cur.residue(v);
      if (all_zero(res)) continue;
      normalize_lead(res);
      out.generators.push_back(derivation_from_dense(nv, d, res));
      out.degrees.push_back(d);
      cur.insert(std::move(res));
    }
    if (cur.dim() != out.slice_dims[d]) abort();
    prev = std::move(cur);
  }
  return out;
}

SyzygySet first_syzygies(const Arrangement& a, const GeneratorSet& g,
                         int bound) {
  int nv = a.nvars;
  int K = static_cast<int>(g.generators.size());
  SyzygySet out;
  out.verified_to = bound;
  if (K == 0) return out;
  int dmin = *std::min_element(g.degrees.begin(), g.degrees.end());
  EchelonQ prev(0);
  int prev_e = -1;
  for (int e = dmin; e <= bound; ++e) {
    std::vector<int> offs(K + 1, 0);
    for (int j = 0; j < K; ++j)
      offs[j + 1] =
          offs[j] + static_cast<int>(dim_degree(nv, e - g.degrees[j]));
    int ncols = offs[K];
    int dim_e = static_cast<int>(monomial_basis(nv, e).size());
    QMatrix mat(nv * dim_e, ncols);
    for (int j = 0; j < K; ++j) {
      if (e - g.degrees[j] < 0) continue;
      const auto& nub = monomial_basis(nv, e - g.degrees[j]);
      for (size_t t = 0; t < nub.size(); ++t) {
        int col = offs[j] + static_cast<int>(t);
        for (int i = 0; i < nv; ++i)
          for (const auto& [mono, coef] : g.generators[j].c[i].terms()) {
            int row = i * dim_e + mono_index(nv, e, mono_mul(mono, nub[t]));
            mat.at(row, col) += coef;
          }
      }
    }
    // image of lower-degree syzygies
    EchelonQ cur(ncols);
    if (prev_e == e - 1) {
      std::vector<int> poffs(K + 1, 0);
      for (int j = 0; j < K; ++j)
        poffs[j + 1] =
            poffs[j] + static_cast<int>(dim_degree(nv, e - 1 - g.degrees[j]));
      for (const auto& row : prev.rows())
        for (int v = 0; v < nv; ++v) {
          QVec up(ncols);
          for (int j = 0; j < K; ++j) {
            int dj = e - 1 - g.degrees[j];
            if (dj < 0) continue;
            const auto& bfrom = monomial_basis(nv, dj);
            for (size_t t = 0; t < bfrom.size(); ++t) {
              const Rational& c = row[poffs[j] + t];
              if (c.is_zero()) continue;
              Mono mm = mono_mul(bfrom[t], mono_var(nv, v));
              up[offs[j] + mono_index(nv, dj + 1, mm)] = c;
            }
          }
          cur.insert(std::move(up));
        }
    }
    int rmult = cur.dim();
    int upper = -1;
    for (std::uint32_t p : kPrimes) {
      try {
        std::vector<std::vector<std::uint32_t>> zrows;
        zrows.reserve(mat.nr);
        for (const auto& r : mat.rows) {
          std::vector<std::uint32_t> zr(ncols);
          for (int c = 0; c < ncols; ++c) zr[c] = to_zp(r[c], p);
          zrows.push_back(std::move(zr));
        }
        upper = ncols - zp_rank(std::move(zrows), ncols, p);
        break;
      } catch (const BadPrime&) {
        continue;
      }
    }
    if (upper != rmult) {
      auto kern = kernel_basis(mat);
      for (auto& v : kern) {
        QVec res = cur.residue(v);
        if (all_zero(res)) continue;
        normalize_lead(res);
        std::vector<Poly> rel;
        for (int j = 0; j < K; ++j) {
          Poly pj(nv);
          int dj = e - g.degrees[j];
          if (dj >= 0) {
            const auto& nub = monomial_basis(nv, dj);
            for (size_t t = 0; t < nub.size(); ++t)
              pj.add_term(nub[t], res[offs[j] + t]);
          }
          rel.push_back(std::move(pj));
        }
        // verify the relation exactly
        Derivation sum = Derivation::zero(nv, 0);
        for (int j = 0; j < K; ++j)
          for (int i = 0; i < nv; ++i)
            sum.c[i] += rel[j] * g.generators[j].c[i];
        if (!sum.is_zero()) abort();
        out.relations.push_back(std::move(rel));
        out.degrees.push_back(e);
        cur.insert(std::move(res));
      }
    }
    prev = std::move(cur);
    prev_e = e;
  }
  return out;
}

SaitoResult saito_check(const Arrangement& a, const Multiplicity* m,
                        const std::vector<Derivation>& candidates) {
  int nv = a.nvars;
  SaitoResult r;
  if (static_cast<int>(candidates.size()) != nv)
    throw std::invalid_argument("need exactly nvars candidates");
  for (size_t i = 0; i < candidates.size(); ++i)
    if (!in_module(candidates[i], a, m))
      throw std::invalid_argument("candidate " + std::to_string(i) +
                                  " not in D(A,m)");
  int total = m ? mult_total(*m) : a.size();
  int degsum = 0;
  for (const auto& t : candidates) {
    if (t.is_zero()) {
      r.reason = "zero candidate";
      return r;
    }
    degsum += t.degree();
  }
  if (degsum != total) {
    r.reason = "degree sum " + std::to_string(degsum) + " != " +
               std::to_string(total);
    return r;
  }
  std::vector<std::vector<Poly>> mat;
  for (const auto& t : candidates) mat.push_back(t.c);
  Poly det = poly_matrix_det(mat);
  if (det.is_zero()) {
    r.reason = "determinant vanishes";
    return r;
  }
  auto quot = det.divide_exact(defining_polynomial(a, m));
  if (!quot) abort();  // det of members is always a multiple of Q
  if (quot->degree() != 0) abort();
  r.ok = true;
  r.constant = quot->lead_coeff();
  return r;
}

}  // namespace arrkit

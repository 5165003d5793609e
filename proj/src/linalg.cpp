#include "arrkit/linalg.hpp"

#include <cstdlib>

namespace arrkit {

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int cursor = 0;
  for (int col = 0; col < m.nc && cursor < m.nr; ++col) {
    int pr = -1;
    for (int r = cursor; r < m.nr; ++r)
      if (!m.rows[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m.rows[cursor], m.rows[pr]);
    QVec& prow = m.rows[cursor];
    if (!prow[col].is_one()) {
      Rational inv = prow[col].inverse();
      for (int j = col; j < m.nc; ++j)
        if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (int r = 0; r < m.nr; ++r) {
      if (r == cursor) continue;
      const Rational& f = m.rows[r][col];
      if (f.is_zero()) continue;
      Rational fac = f;
      for (int j = col; j < m.nc; ++j)
        if (!prow[j].is_zero()) m.rows[r][j].sub_mul(fac, prow[j]);
    }
    pivots.push_back(col);
    ++cursor;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<QVec> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.nc, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> out;
  for (int f = 0; f < m.nc; ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.nc);
    v[f] = q_one();
    for (size_t i = 0; i < pivots.size(); ++i) {
      const Rational& c = r.rows[i][f];
      if (!c.is_zero()) v[pivots[i]] = -c;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b, int* nullity_out) {
  QMatrix aug(m.nr, m.nc + 1);
  for (int i = 0; i < m.nr; ++i) {
    for (int j = 0; j < m.nc; ++j) aug.rows[i][j] = m.rows[i][j];
    aug.rows[i][m.nc] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.nc) return std::nullopt;
  if (nullity_out) *nullity_out = m.nc - static_cast<int>(pivots.size());
  QVec x(m.nc);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.rows[i][m.nc];
  return x;
}

QVec EchelonQ::residue(QVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[leads_[i]];
    if (c.is_zero()) continue;
    Rational fac = c;
    const QVec& row = rows_[i];
    for (int j = leads_[i]; j < width_; ++j)
      if (!row[j].is_zero()) v[j].sub_mul(fac, row[j]);
  }
  return v;
}

bool EchelonQ::insert(QVec v) {
  v = residue(std::move(v));
  int lead = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  if (!v[lead].is_one()) {
    Rational inv = v[lead].inverse();
    for (int j = lead; j < width_; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
  }
  // keep full reduction: clear this column from the existing rows
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = rows_[i][lead];
    if (c.is_zero()) continue;
    Rational fac = c;
    for (int j = lead; j < width_; ++j)
      if (!v[j].is_zero()) rows_[i][j].sub_mul(fac, v[j]);
  }
  auto pos = rows_.begin();
  auto lpos = leads_.begin();
  while (lpos != leads_.end() && *lpos < lead) {
    ++lpos;
    ++pos;
  }
  rows_.insert(pos, std::move(v));
  leads_.insert(lpos, lead);
  return true;
}

bool EchelonQ::contains(const QVec& v) const {
  QVec r = residue(v);
  for (const Rational& c : r)
    if (!c.is_zero()) return false;
  return true;
}

std::uint32_t zp_inv(std::uint32_t a, std::uint32_t p) {
  // p is prime and a != 0 mod p
  std::uint64_t r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t to_zp(const Rational& q, std::uint32_t p) {
  if (!q.is_small()) {
    mpq_class v = q.to_mpq();
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
    if (d == 0) throw BadPrime();
    std::uint64_t n =
        num < 0 ? p - static_cast<std::uint32_t>(mpz_class(-num).get_ui())
                : static_cast<std::uint32_t>(num.get_ui());
    return static_cast<std::uint32_t>(n % p * zp_inv(d, p) % p);
  }
  long long n = q.num_small();
  long long d = q.den_small();
  std::uint32_t dm = static_cast<std::uint32_t>(d % p);
  if (dm == 0) throw BadPrime();
  long long nm = n % p;
  std::uint64_t nn = nm < 0 ? nm + p : nm;
  return static_cast<std::uint32_t>(nn * zp_inv(dm, p) % p);
}

bool EchelonZp::insert(std::vector<std::uint32_t> v) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t c = v[leads_[i]];
    if (c == 0) continue;
    std::uint64_t f = p_ - c;  // v += f*row clears the lead column
    const auto& row = rows_[i];
    for (int j = leads_[i]; j < width_; ++j)
      if (row[j]) v[j] = static_cast<std::uint32_t>((v[j] + f * row[j]) % p_);
  }
  int lead = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j]) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  if (v[lead] != 1) {
    std::uint64_t inv = zp_inv(v[lead], p_);
    for (int j = lead; j < width_; ++j)
      if (v[j]) v[j] = static_cast<std::uint32_t>(v[j] * inv % p_);
  }
  auto pos = rows_.begin();
  auto lpos = leads_.begin();
  while (lpos != leads_.end() && *lpos < lead) {
    ++lpos;
    ++pos;
  }
  rows_.insert(pos, std::move(v));
  leads_.insert(lpos, lead);
  return true;
}

int zp_rank(std::vector<std::vector<std::uint32_t>> rows, int width,
            std::uint32_t p) {
  EchelonZp e(width, p);
  for (auto& r : rows) e.insert(std::move(r));
  return e.dim();
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m, int row,
             std::uint32_t colmask,
             std::map<std::uint32_t, Poly>& memo) {
  int n = static_cast<int>(m.size());
  if (row == n) return Poly::constant(m[0][0].nvars(), q_one());
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Poly acc(m[0][0].nvars());
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    if (!(colmask & (1u << c))) continue;
    if (!m[row][c].is_zero()) {
      Poly sub = det_rec(m, row + 1, colmask & ~(1u << c), memo);
      Poly term = m[row][c] * sub;
      if (sign < 0) term *= Rational(-1);
      acc += term;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) abort();
  std::map<std::uint32_t, Poly> memo;
  return det_rec(m, 0, (1u << n) - 1, memo);
}

}  // namespace arrkit

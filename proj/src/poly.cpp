#include "arrkit/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace arrkit {

namespace {

void gen_monos(int nv, int i, int rem, Mono acc, std::vector<Mono>& out) {
  if (i == nv - 1) {
    out.push_back(acc | (Mono(rem) << mono_shift(nv, nv - 1)));
    return;
  }
  for (int e = rem; e >= 0; --e)
    gen_monos(nv, i + 1, rem - e, acc | (Mono(e) << mono_shift(nv, i)), out);
}

}  // namespace

const std::vector<Mono>& monomial_basis(int nv, int d) {
  static std::map<std::pair<int, int>, std::vector<Mono>> cache;
  auto key = std::make_pair(nv, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mono> v;
  if (d >= 0 && d < 256 && nv >= 1) gen_monos(nv, 0, d, 0, v);
  return cache.emplace(key, std::move(v)).first->second;
}

const std::vector<Mono>& monomial_basis_excl(int nv, int d, int skip) {
  static std::map<std::tuple<int, int, int>, std::vector<Mono>> cache;
  auto key = std::make_tuple(nv, d, skip);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mono> v;
  for (Mono m : monomial_basis(nv, d))
    if (mono_exp(m, nv, skip) == 0) v.push_back(m);
  return cache.emplace(key, std::move(v)).first->second;
}

int mono_index(int nv, int d, Mono m) {
  const auto& b = monomial_basis(nv, d);
  auto it = std::lower_bound(b.begin(), b.end(), m, std::greater<Mono>());
  if (it == b.end() || *it != m) abort();
  return static_cast<int>(it - b.begin());
}

int mono_index_excl(int nv, int d, int skip, Mono m) {
  const auto& b = monomial_basis_excl(nv, d, skip);
  auto it = std::lower_bound(b.begin(), b.end(), m, std::greater<Mono>());
  if (it == b.end() || *it != m) abort();
  return static_cast<int>(it - b.begin());
}

long long dim_degree(int nv, int d) {
  if (d < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= nv - 1; ++i) r = r * (d + i) / i;
  return r;
}

std::string mono_str(Mono m, int nv, const std::vector<std::string>& vars) {
  std::string s;
  for (int i = 0; i < nv; ++i) {
    int e = mono_exp(m, nv, i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

Poly Poly::constant(int nv, const Rational& c) {
  Poly p(nv);
  p.add_term(mono_one(), c);
  return p;
}

Poly Poly::variable(int nv, int i) {
  Poly p(nv);
  p.add_term(mono_var(nv, i), q_one());
  return p;
}

Poly Poly::linear(int nv, const std::vector<Rational>& c) {
  Poly p(nv);
  for (int i = 0; i < nv; ++i) p.add_term(mono_var(nv, i), c[i]);
  return p;
}

Poly Poly::term(int nv, Mono m, const Rational& c) {
  Poly p(nv);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, mono_deg(m, nv_));
  return d;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = mono_deg(t_.begin()->first, nv_);
  for (const auto& [m, c] : t_)
    if (mono_deg(m, nv_) != d) return false;
  return true;
}

const Rational& Poly::coeff(Mono m) const {
  auto it = t_.find(m);
  return it == t_.end() ? q_zero() : it->second;
}

void Poly::add_term(Mono m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

void Poly::add_scaled(const Poly& o, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : o.t_) add_term(m, v * c);
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nv_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(nv_);
  for (const auto& [m, c] : t_) {
    int e = mono_exp(m, nv_, i);
    if (e == 0) continue;
    r.add_term(mono_div(m, mono_var(nv_, i)), c * Rational(e));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  int out_nv = images.empty() ? nv_ : images[0].nvars();
  Poly r(out_nv);
  std::vector<std::vector<Poly>> pw(nv_);
  for (int i = 0; i < nv_; ++i) pw[i].push_back(Poly::constant(out_nv, q_one()));
  for (const auto& [m, c] : t_) {
    Poly term = Poly::constant(out_nv, c);
    for (int i = 0; i < nv_; ++i) {
      int e = mono_exp(m, nv_, i);
      while (static_cast<int>(pw[i].size()) <= e)
        pw[i].push_back(pw[i].back() * images[i]);
      term = term * pw[i][e];
    }
    r += term;
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  Rational r;
  for (const auto& [m, c] : t_) {
    Rational t = c;
    for (int i = 0; i < nv_; ++i) {
      int e = mono_exp(m, nv_, i);
      for (int k = 0; k < e; ++k) t *= x[i];
    }
    r += t;
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) abort();
  Poly rem = *this;
  Poly quot(nv_);
  Mono dm = divisor.lead_mono();
  const Rational& dc = divisor.lead_coeff();
  while (!rem.is_zero()) {
    Mono rm = rem.lead_mono();
    if (!mono_divides(rm, dm, nv_)) return std::nullopt;
    Rational q = rem.lead_coeff() / dc;
    Mono qm = mono_div(rm, dm);
    quot.add_term(qm, q);
    // rem -= (q * x^qm) * divisor
    for (const auto& [m, c] : divisor.t_) rem.add_term(mono_mul(qm, m), -(q * c));
  }
  return quot;
}

std::vector<std::string> default_var_names(int nv) {
  static const char* base[] = {"x", "y", "z", "w"};
  std::vector<std::string> v;
  for (int i = 0; i < nv; ++i)
    v.push_back(i < 4 && nv <= 4 ? base[i] : "x" + std::to_string(i + 1));
  return v;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    Rational a = c;
    bool neg = a.sign() < 0;
    if (neg) a.negate();
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string ms = mono_str(m, nv_, vars);
    if (ms == "1")
      s += a.str();
    else if (a.is_one())
      s += ms;
    else
      s += a.str() + "*" + ms;
  }
  return s;
}

std::string Poly::str() const { return str(default_var_names(nv_)); }

std::vector<Rational> Poly::dense(int d) const {
  const auto& b = monomial_basis(nv_, d);
  std::vector<Rational> v(b.size());
  for (const auto& [m, c] : t_) {
    if (mono_deg(m, nv_) != d) abort();
    v[mono_index(nv_, d, m)] = c;
  }
  return v;
}

Poly Poly::from_dense(int nv, int d, const std::vector<Rational>& v) {
  const auto& b = monomial_basis(nv, d);
  Poly p(nv);
  for (size_t i = 0; i < b.size(); ++i)
    if (!v[i].is_zero()) p.add_term(b[i], v[i]);
  return p;
}

Poly pow(const Poly& p, int k) {
  Poly r = Poly::constant(p.nvars(), q_one());
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

UniPoly UniPoly::t() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return q_zero();
  return c_[i];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r;
  for (int i = degree(); i >= 0; --i) {
    r *= x;
    r += c_[i];
  }
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_mul(a.c_[i], b.c_[j]);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::mul_linear(const Rational& root) const {
  return *this * UniPoly({-root, q_one()});
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) abort();
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  const Rational& lead = d.c_.back();
  std::vector<Rational> quot;
  int qd = static_cast<int>(rem.size()) - 1 - dd;
  if (qd < 0) return {UniPoly(), *this};
  quot.assign(qd + 1, Rational());
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational q = rem[i] / lead;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j].sub_mul(q, d.c_[j]);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::vector<long long> UniPoly::integer_roots(long long hi) const {
  std::vector<long long> roots;
  if (is_zero()) return roots;
  UniPoly p = *this;
  for (long long r = 0; r <= hi && p.degree() > 0; ++r) {
    Rational x(r);
    while (p.degree() > 0 && p.eval(x).is_zero()) {
      roots.push_back(r);
      p = *p.divide_exact(UniPoly({-x, q_one()}));
    }
  }
  return roots;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    bool neg = a.sign() < 0;
    if (neg) a.negate();
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string ms;
    if (i == 0)
      ms = "";
    else if (i == 1)
      ms = var;
    else
      ms = var + "^" + std::to_string(i);
    if (ms.empty())
      s += a.str();
    else if (a.is_one())
      s += ms;
    else
      s += a.str() + "*" + ms;
  }
  return s;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  static std::map<std::pair<int, int>, Rational> cache;
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  cache[key] = r;
  return r;
}

}  // namespace arrkit

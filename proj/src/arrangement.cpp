#include "arrkit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace arrkit {

Hyperplane Hyperplane::from(std::vector<Rational> coeffs) {
  int lead = -1;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead < 0) throw std::invalid_argument("zero form");
  Rational inv = coeffs[lead].inverse();
  for (auto& c : coeffs)
    if (!c.is_zero()) c *= inv;
  return Hyperplane{std::move(coeffs)};
}

Poly Hyperplane::form() const {
  return Poly::linear(static_cast<int>(a.size()), a);
}

std::string Hyperplane::str() const {
  return form().str();
}

int Arrangement::index_of(const Hyperplane& h) const {
  for (int i = 0; i < size(); ++i)
    if (hyperplanes[i] == h) return i;
  return -1;
}

Arrangement make_arrangement(int nvars,
                             const std::vector<std::vector<Rational>>& forms) {
  Arrangement a;
  a.nvars = nvars;
  for (const auto& f : forms) {
    if (static_cast<int>(f.size()) != nvars)
      throw std::invalid_argument("form length != nvars");
    Hyperplane h = Hyperplane::from(f);
    if (a.index_of(h) >= 0)
      throw std::invalid_argument("proportional duplicate form: " + h.str());
    a.hyperplanes.push_back(std::move(h));
  }
  return a;
}

bool is_essential(const Arrangement& a) {
  QMatrix m;
  for (const auto& h : a.hyperplanes) m.add_row(h.a);
  m.nc = a.nvars;
  return rank(m) == a.nvars;
}

Poly defining_polynomial(const Arrangement& a, const Multiplicity* m) {
  Poly q = Poly::constant(a.nvars, q_one());
  for (int i = 0; i < a.size(); ++i) {
    int e = m ? (*m)[i] : 1;
    Poly f = a.hyperplanes[i].form();
    for (int k = 0; k < e; ++k) q = q * f;
  }
  return q;
}

Arrangement delete_hyperplane(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw std::out_of_range("hyperplane index");
  Arrangement r = a;
  r.hyperplanes.erase(r.hyperplanes.begin() + i);
  return r;
}

Arrangement add_hyperplane(const Arrangement& a, const Hyperplane& h) {
  if (static_cast<int>(h.a.size()) != a.nvars)
    throw std::invalid_argument("form length != nvars");
  if (a.index_of(h) >= 0)
    throw std::invalid_argument("duplicate addition: " + h.str());
  Arrangement r = a;
  r.hyperplanes.push_back(h);
  return r;
}

Arrangement subarrangement(const Arrangement& a, const std::vector<int>& idx) {
  Arrangement r;
  r.nvars = a.nvars;
  for (int i : idx) r.hyperplanes.push_back(a.hyperplanes[i]);
  return r;
}

Restriction restrict_arrangement(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw std::out_of_range("hyperplane index");
  int nv = a.nvars;
  QMatrix alpha(1, nv);
  alpha.rows[0] = a.hyperplanes[i].a;
  std::vector<QVec> basis = kernel_basis(alpha);  // nv-1 vectors
  Restriction res;
  res.embedding = QMatrix(nv, nv - 1);
  for (int c = 0; c < nv - 1; ++c)
    for (int r = 0; r < nv; ++r) res.embedding.at(r, c) = basis[c][r];
  res.arr.nvars = nv - 1;
  for (int j = 0; j < a.size(); ++j) {
    if (j == i) continue;
    QVec pulled(nv - 1);
    for (int c = 0; c < nv - 1; ++c)
      for (int r = 0; r < nv; ++r)
        pulled[c].add_mul(a.hyperplanes[j].a[r], res.embedding.at(r, c));
    Hyperplane h = Hyperplane::from(std::move(pulled));  // nonzero: L != H
    int k = res.arr.index_of(h);
    if (k < 0) {
      res.arr.hyperplanes.push_back(std::move(h));
      res.preimages.push_back({j});
    } else {
      res.preimages[k].push_back(j);
    }
  }
  return res;
}

ZieglerRestriction ziegler_restrict(const Arrangement& a, int i) {
  Restriction r = restrict_arrangement(a, i);
  ZieglerRestriction z;
  z.restricted = std::move(r.arr);
  z.embedding = std::move(r.embedding);
  z.preimages = std::move(r.preimages);
  for (const auto& pre : z.preimages) {
    z.mult.push_back(static_cast<int>(pre.size()));
    z.section.push_back(*std::min_element(pre.begin(), pre.end()));
  }
  return z;
}

int mult_total(const Multiplicity& m) {
  int s = 0;
  for (int v : m) s += v;
  return s;
}

Essentialization essentialize(const Arrangement& a) {
  QMatrix m;
  for (const auto& h : a.hyperplanes) m.add_row(h.a);
  m.nc = a.nvars;
  std::vector<int> pivots = rref(m);
  Essentialization e;
  e.rank = static_cast<int>(pivots.size());
  e.pivots = pivots;
  e.arr.nvars = e.rank;
  for (const auto& h : a.hyperplanes) {
    // h lies in the row space of the reduced rows; its coordinates in that
    // basis are just the entries at the pivot columns
    QVec c(e.rank);
    for (int k = 0; k < e.rank; ++k) c[k] = h.a[pivots[k]];
    e.arr.hyperplanes.push_back(Hyperplane::from(std::move(c)));
  }
  return e;
}

std::string canonical_key(const Arrangement& a, const Multiplicity* m) {
  std::vector<std::string> parts;
  for (int i = 0; i < a.size(); ++i) {
    std::string s;
    for (const auto& c : a.hyperplanes[i].a) s += c.str() + ",";
    if (m) s += "|" + std::to_string((*m)[i]);
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string key = std::to_string(a.nvars) + ":";
  for (const auto& p : parts) key += p + ";";
  return key;
}

ParsedArrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int nvars = -1;
  std::vector<std::vector<Rational>> forms;
  std::vector<int> mults;
  bool any_mult = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (nvars < 0) {
      if (toks.size() != 2 || toks[0] != "vars:") fail("expected `vars: <n>` header");
      try {
        nvars = std::stoi(toks[1]);
      } catch (...) {
        fail("bad variable count");
      }
      if (nvars < 1 || nvars > 8) fail("variable count out of range 1..8");
      continue;
    }
    int mult = 1;
    bool has_mult = false;
    auto bar = std::find(toks.begin(), toks.end(), "|");
    if (bar != toks.end()) {
      if (bar + 1 == toks.end() || bar + 2 != toks.end())
        fail("expected a single multiplicity after `|`");
      try {
        mult = std::stoi(*(bar + 1));
      } catch (...) {
        fail("bad multiplicity");
      }
      if (mult < 1) fail("multiplicity must be >= 1");
      has_mult = true;
      toks.erase(bar, toks.end());
    }
    if (static_cast<int>(toks.size()) != nvars)
      fail("expected " + std::to_string(nvars) + " coefficients, got " +
           std::to_string(toks.size()));
    std::vector<Rational> f;
    for (const auto& t : toks) {
      try {
        f.push_back(Rational::from_string(t));
      } catch (const std::exception& ex) {
        fail(std::string("bad rational `") + t + "`: " + ex.what());
      }
    }
    forms.push_back(std::move(f));
    mults.push_back(mult);
    any_mult = any_mult || has_mult;
  }
  if (nvars < 0) throw std::runtime_error("missing `vars: <n>` header");
  ParsedArrangement pa;
  pa.arr = make_arrangement(nvars, forms);
  if (any_mult) pa.mult = mults;
  return pa;
}

std::string write_arrangement(const Arrangement& a, const Multiplicity* m) {
  std::string out = "vars: " + std::to_string(a.nvars) + "\n";
  for (int i = 0; i < a.size(); ++i) {
    std::string line;
    for (int j = 0; j < a.nvars; ++j) {
      if (j) line += " ";
      line += a.hyperplanes[i].a[j].str();
    }
    if (m) line += " | " + std::to_string((*m)[i]);
    out += line + "\n";
  }
  return out;
}

}  // namespace arrkit

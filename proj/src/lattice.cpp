#include "arrkit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace arrkit {

namespace {

Flat make_flat(const Arrangement& a, const EchelonQ& normals) {
  Flat f;
  f.normals = normals.rows();
  f.codim = normals.dim();
  for (int j = 0; j < a.size(); ++j) {
    if (normals.contains(a.hyperplanes[j].a)) {
      f.mask |= std::uint64_t(1) << j;
      f.members.push_back(j);
    }
  }
  return f;
}

}  // namespace

Lattice intersection_lattice(const Arrangement& a) {
  if (a.size() > 62) abort();
  Lattice l;
  {
    Flat v;
    v.codim = 0;
    l.flats.push_back(std::move(v));
  }
  std::map<std::uint64_t, Flat> level;  // keyed by member mask
  for (int i = 0; i < a.size(); ++i) {
    EchelonQ e(a.nvars);
    e.insert(a.hyperplanes[i].a);
    Flat f = make_flat(a, e);
    level.try_emplace(f.mask, std::move(f));
  }
  int codim = 1;
  while (!level.empty()) {
    std::map<std::uint64_t, Flat> next;
    for (const auto& [mask, f] : level) {
      for (int i = 0; i < a.size(); ++i) {
        if (mask & (std::uint64_t(1) << i)) continue;
        EchelonQ e(a.nvars);
        for (const auto& row : f.normals) e.insert(row);
        if (!e.insert(a.hyperplanes[i].a)) continue;  // already contained
        Flat g = make_flat(a, e);
        next.try_emplace(g.mask, std::move(g));
      }
      l.flats.push_back(f);
    }
    l.rank = codim;
    ++codim;
    level = std::move(next);
  }
  // Mobius, top-down: mu(V) = 1, mu(X) = -sum over flats strictly above X
  size_t n = l.flats.size();
  l.mobius.assign(n, 0);
  l.mobius[0] = 1;
  for (size_t i = 1; i < n; ++i) {
    long long s = 0;
    for (size_t j = 0; j < i; ++j)
      if ((l.flats[j].mask & ~l.flats[i].mask) == 0) s += l.mobius[j];
    l.mobius[i] = -s;
  }
  return l;
}

std::vector<const Flat*> flats_of_codim(const Lattice& l, int k) {
  std::vector<const Flat*> out;
  for (const auto& f : l.flats)
    if (f.codim == k) out.push_back(&f);
  return out;
}

const Flat* find_flat(const Lattice& l, std::uint64_t mask) {
  for (const auto& f : l.flats)
    if (f.mask == mask) return &f;
  return nullptr;
}

std::vector<const Flat*> rank2_flats(const Lattice& l) {
  return flats_of_codim(l, 2);
}

Arrangement localize(const Arrangement& a, const Flat& x) {
  return subarrangement(a, x.members);
}

UniPoly char_poly(const Lattice& l, int nvars) {
  std::vector<Rational> c(nvars + 1);
  for (size_t i = 0; i < l.flats.size(); ++i)
    c[nvars - l.flats[i].codim] += Rational(l.mobius[i]);
  return UniPoly(std::move(c));
}

UniPoly char_poly(const Arrangement& a) {
  return char_poly(intersection_lattice(a), a.nvars);
}

UniPoly poincare_poly(const UniPoly& chi, int nvars) {
  std::vector<Rational> c(nvars + 1);
  for (int i = 0; i <= nvars; ++i) {
    Rational b = chi.coeff(nvars - i);
    if (i % 2) b.negate();
    c[i] = b;
  }
  return UniPoly(std::move(c));
}

UniPoly chi0(const UniPoly& chi) {
  auto q = chi.divide_exact(UniPoly({Rational(-1), Rational(1)}));
  if (!q) throw std::domain_error("chi not divisible by t-1 (empty arrangement)");
  return *q;
}

long long betti(const UniPoly& chi, int nvars, int i) {
  Rational b = chi.coeff(nvars - i);
  if (i % 2) b.negate();
  if (!b.is_integer()) abort();
  return b.to_ll();
}

long long betti0(const UniPoly& chi, int nvars, int i) {
  UniPoly c0 = chi0(chi);
  Rational b = c0.coeff(nvars - 1 - i);
  if (i % 2) b.negate();
  if (!b.is_integer()) abort();
  return b.to_ll();
}

bool deletion_restriction_check(const Arrangement& a, int i) {
  UniPoly lhs = char_poly(a);
  UniPoly rhs = char_poly(delete_hyperplane(a, i));
  rhs -= char_poly(restrict_arrangement(a, i).arr);
  return lhs == rhs;
}

}  // namespace arrkit

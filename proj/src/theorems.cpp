#include "arrkit/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace arrkit {

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool multiset_eq(const std::vector<int>& a, const std::vector<int>& b) {
  return sorted(a) == sorted(b);
}

int restriction_size(const Arrangement& a, int i) {
  return restrict_arrangement(a, i).arr.size();
}

UniPoly poincare_of(const Arrangement& a) {
  return poincare_poly(char_poly(a), a.nvars);
}

}  // namespace

TripleReport addition_deletion_check(const Arrangement& a, int i) {
  TripleReport r;
  r.index = i;
  Arrangement del = delete_hyperplane(a, i);
  Restriction rest = restrict_arrangement(a, i);
  r.size_a = a.size();
  r.size_del = del.size();
  r.size_rest = rest.arr.size();
  r.exp_a = is_free_any(a);
  r.exp_del = is_free_any(del);
  r.exp_rest = is_free_any(rest.arr);
  r.cond_rest = r.exp_rest.has_value();
  if (r.cond_rest) {
    std::vector<int> base = *r.exp_rest;
    std::vector<int> want_a = base;
    want_a.push_back(r.size_a - r.size_rest);
    std::vector<int> want_del = base;
    want_del.push_back(r.size_del - r.size_rest);
    r.cond_a = r.exp_a && multiset_eq(*r.exp_a, want_a);
    r.cond_del = r.exp_del && multiset_eq(*r.exp_del, want_del);
  }
  // two of the three force the third; A and A' both free force all three
  if (r.exp_a && r.exp_del) {
    if (!(r.cond_a && r.cond_del && r.cond_rest)) abort();
  }
  if (r.cond_a && r.cond_rest && !r.cond_del) abort();
  if (r.cond_del && r.cond_rest && !r.cond_a) abort();
  r.all_three = r.cond_a && r.cond_del && r.cond_rest;
  return r;
}

DivisionReport division_check(const Arrangement& a, int i) {
  DivisionReport r;
  Restriction rest = restrict_arrangement(a, i);
  r.exp_rest = is_free_any(rest.arr);
  r.restriction_free = r.exp_rest.has_value();
  r.divides = poincare_of(rest.arr).divides(poincare_of(a));
  if (r.restriction_free && r.divides) {
    r.concluded_free = true;
    if (!is_free_any(a)) abort();
  }
  return r;
}

MatBchReport mat_bch_check(const Arrangement& a, int i) {
  MatBchReport r;
  Arrangement del = delete_hyperplane(a, i);
  auto f = is_free_any(del);
  if (!f) {
    r.branch = "deletion not free";
    return r;
  }
  r.applicable = true;
  r.exp_del = *f;
  int ell = a.nvars;
  r.d = del.size() - restriction_size(a, i);
  int dl = r.exp_del[ell - 1];
  int dl1 = r.exp_del[ell - 2];
  if (r.d == dl) {
    r.branch = "top";
    r.predicted = r.exp_del;
    r.predicted[ell - 1] += 1;
  } else if (r.d == dl1 && r.d < dl) {
    r.branch = "second";
    r.predicted = r.exp_del;
    r.predicted[ell - 2] += 1;
  } else if (r.d > dl1 && r.d < dl) {
    abort();  // excluded: d strictly between the top two exponents
  } else {
    r.branch = r.d < dl1 ? "below range" : "above range";
    return r;
  }
  std::sort(r.predicted.begin(), r.predicted.end());
  auto fa = is_free_any(a);
  if (!fa || !multiset_eq(*fa, r.predicted)) abort();
  r.confirmed = true;
  return r;
}

DeletionConstruction deletion_construct_pog(const Arrangement& a, int i) {
  DeletionConstruction out;
  auto cert = is_free(a);
  if (!cert)
    throw std::invalid_argument("deletion_construct_pog: arrangement not free");
  int nv = a.nvars;
  Arrangement del = delete_hyperplane(a, i);

  if (auto fdel = is_free_any(del)) {
    out.verdict = Verdict::Free;
    GeneratorSet g = minimal_generators(del, nullptr, (*fdel).back());
    SaitoResult sc = saito_check(del, nullptr, g.generators);
    if (!sc.ok || !multiset_eq(g.degrees, *fdel)) abort();
    out.free_cert = FreenessCertificate{g.degrees, g.generators, sc.constant};
    return out;
  }

  // adjust the basis into the Euler part plus D_H
  const Poly ah = a.hyperplanes[i].form();
  std::vector<Derivation> theta = cert->basis;
  if (!(theta[0] == euler_derivation(nv))) abort();
  for (size_t j = 1; j < theta.size(); ++j) {
    auto q = theta[j].apply(ah).divide_exact(ah);
    if (!q) abort();
    for (int v = 0; v < nv; ++v)
      theta[j].c[v] -= *q * theta[0].c[v];
    if (!theta[j].apply(ah).is_zero()) abort();
  }

  ZieglerRestriction zr = ziegler_restrict(a, i);
  int w = nv - 1;
  Derivation teh = theta_EH(a, i);
  int d = a.size() - zr.restricted.size();

  // express theta_E^H over the Ziegler images of the adjusted basis
  std::vector<Derivation> pim;
  for (size_t j = 1; j < theta.size(); ++j)
    pim.push_back(ziegler_map(a, i, theta[j]));
  int dim_d = static_cast<int>(monomial_basis(w, d).size());
  std::vector<int> col_gen, col_deg;
  std::vector<Mono> col_mono;
  for (size_t j = 0; j < pim.size(); ++j) {
    int dj = cert->exponents[j + 1];
    if (dj > d) continue;
    for (Mono nu : monomial_basis(w, d - dj)) {
      col_gen.push_back(static_cast<int>(j));
      col_deg.push_back(dj);
      col_mono.push_back(nu);
    }
  }
  QMatrix sys(w * dim_d, static_cast<int>(col_gen.size()));
  for (size_t c = 0; c < col_gen.size(); ++c) {
    const Derivation& gj = pim[col_gen[c]];
    Poly nu = Poly::term(w, col_mono[c], q_one());
    Derivation scaled = Derivation::zero(w, 0);
    scaled.c.assign(w, Poly(w));
    for (int v = 0; v < w; ++v) scaled.c[v] = nu * gj.c[v];
    QVec dense = derivation_dense(scaled, d);
    for (int rr = 0; rr < w * dim_d; ++rr) sys.at(rr, c) = dense[rr];
  }
  QVec rhs = derivation_dense(teh, d);
  int nullity = -1;
  auto sol = solve(sys, rhs, &nullity);
  if (!sol || nullity != 0) abort();  // Ziegler images form a free basis

  std::vector<Poly> cbar(pim.size(), Poly(w));
  for (size_t c = 0; c < col_gen.size(); ++c)
    if (!(*sol)[c].is_zero())
      cbar[col_gen[c]].add_term(col_mono[c], (*sol)[c]);
  for (size_t j = 0; j < pim.size(); ++j)
    if (cert->exponents[j + 1] == d && !cbar[j].is_zero())
      abort();  // a constant here would make the deletion free

  // lift the coefficients off the hyperplane and divide out alpha_H
  int pivot = 0;
  while (pivot < nv && a.hyperplanes[i].a[pivot].is_zero()) ++pivot;
  std::vector<Poly> lift_images;
  for (int v = 0; v < nv; ++v)
    if (v != pivot) lift_images.push_back(Poly::variable(nv, v));
  Poly qprime = Poly::constant(nv, q_one());
  for (size_t k = 0; k < zr.section.size(); ++k)
    qprime = qprime * pow(a.hyperplanes[zr.section[k]].form(), zr.mult[k] - 1);

  Derivation psi = Derivation::zero(nv, 0);
  psi.c.assign(nv, Poly(nv));
  std::vector<Poly> f(pim.size(), Poly(nv));
  for (size_t j = 0; j < pim.size(); ++j) {
    if (cbar[j].is_zero()) continue;
    f[j] = cbar[j].substitute(lift_images);
    for (int v = 0; v < nv; ++v) psi.c[v] += f[j] * theta[j + 1].c[v];
  }
  for (int v = 0; v < nv; ++v) psi.c[v] -= qprime * theta[0].c[v];

  Derivation phi = Derivation::zero(nv, 0);
  phi.c.assign(nv, Poly(nv));
  for (int v = 0; v < nv; ++v) {
    auto q = psi.c[v].divide_exact(ah);
    if (!q) abort();  // psi vanishes on H by construction
    phi.c[v] = *q;
  }
  if (phi.degree() != d - 1) abort();
  if (!in_module(phi, del)) abort();
  if (in_module(phi, a)) abort();  // phi(alpha_H) = -Q' is prime to alpha_H

  // assemble the certificate: relation Q' theta_E - sum f_j theta_j
  // + alpha_H phi = 0
  std::vector<Derivation> gens;
  std::vector<int> degs;
  std::vector<Poly> rel;
  gens.push_back(theta[0]);
  degs.push_back(1);
  rel.push_back(qprime);
  for (size_t j = 0; j < pim.size(); ++j) {
    gens.push_back(theta[j + 1]);
    degs.push_back(cert->exponents[j + 1]);
    Poly neg(nv);
    neg -= f[j];
    rel.push_back(neg);
  }
  gens.push_back(phi);
  degs.push_back(d - 1);
  rel.push_back(ah);
  std::vector<size_t> ord(gens.size());
  for (size_t t = 0; t < ord.size(); ++t) ord[t] = t;
  std::stable_sort(ord.begin(), ord.end(),
                   [&](size_t x, size_t y) { return degs[x] < degs[y]; });

  POGCertificate pc;
  pc.level = d - 1;
  pc.strict = true;
  for (size_t t = 0; t < ord.size(); ++t) {
    pc.generators.push_back(gens[ord[t]]);
    pc.generator_degrees.push_back(degs[ord[t]]);
    pc.relation.push_back(rel[ord[t]]);
    if (ord[t] + 1 == gens.size()) pc.level_index = static_cast<int>(t);
  }
  pc.poexp = cert->exponents;
  pc.level_coefficient = ah;
  // the relation must evaluate to zero identically
  for (int v = 0; v < nv; ++v) {
    Poly s(nv);
    for (size_t t = 0; t < pc.generators.size(); ++t)
      s += pc.relation[t] * pc.generators[t].c[v];
    if (!s.is_zero()) abort();
  }

  const ClassificationReport& ref = classify_cached(del);
  if (ref.verdict != Verdict::StrictPOG || ref.exponents != pc.poexp ||
      ref.level != pc.level)
    abort();

  out.verdict = Verdict::StrictPOG;
  out.pog_cert = std::move(pc);
  return out;
}

RelativeReport relative_criterion(const Arrangement& a, int i) {
  RelativeReport r;
  Arrangement del = delete_hyperplane(a, i);
  Restriction rest = restrict_arrangement(a, i);
  r.d = del.size() - rest.arr.size();
  r.a_free = is_free_any(a).has_value();

  auto frest = is_free_any(rest.arr);
  r.branch1 =
      frest.has_value() && char_poly(rest.arr).divides(char_poly(a));

  const ClassificationReport& rd = classify_cached(del);
  bool spog_at_d = rd.verdict == Verdict::StrictPOG && rd.level == r.d &&
                   rd.pog_cert.has_value();
  if (spog_at_d) {
    GradedSlice v = derivation_slice(del, nullptr, r.d);
    int dim_full = a.nvars * static_cast<int>(
                                 monomial_basis(a.nvars, r.d).size());
    EchelonQ in_a(dim_full);
    for (const Derivation& th : derivation_slice(a, nullptr, r.d).basis)
      in_a.insert(derivation_dense(th, r.d));
    bool contained = true;
    for (const Derivation& th : v.basis)
      if (!in_a.contains(derivation_dense(th, r.d))) {
        contained = false;
        break;
      }
    // literal set difference: the slice minus the level line sits inside
    // D(A)_d, which by the two-subspace argument forces the whole slice in,
    // or the slice to be the line itself
    r.branch2_literal = contained || v.basis.size() <= 1;

    // reading the condition modulo the level line instead: the slice may
    // exceed D(A)_d by at most the line through a level element, and any
    // degree-d direction outside D(A)_d can be regauged into the level
    // slot of a strict presentation, so this is a codimension test
    r.branch2_modulo = static_cast<int>(v.basis.size()) <= in_a.dim() + 1;
  }
  r.equivalence_literal = r.a_free == (r.branch1 || r.branch2_literal);
  r.equivalence_modulo = r.a_free == (r.branch1 || r.branch2_modulo);
  if (r.a_free && !r.branch1 && (r.branch2_literal || r.branch2_modulo)) {
    auto fa = is_free_any(a);
    if (!multiset_eq(*fa, rd.exponents)) abort();
  }

  UniPoly chi = char_poly(a);
  auto roots = chi.integer_roots(a.size());
  if (static_cast<int>(roots.size()) == a.nvars &&
      r.d > roots.back()) {
    r.large_level_applicable = true;
    std::vector<int> want;
    for (long long x : roots) want.push_back(static_cast<int>(x));
    r.large_level_rhs = rd.verdict == Verdict::StrictPOG &&
                        multiset_eq(rd.exponents, want);
    if (r.large_level_rhs && rd.level != r.d) abort();
    if (r.a_free != r.large_level_rhs) abort();
    r.large_level_confirmed = true;
  }
  return r;
}

AdditionReport addition_classify(const Arrangement& aprime,
                                 const Hyperplane& h) {
  AdditionReport r;
  Arrangement a = add_hyperplane(aprime, h);
  int i = a.size() - 1;
  int ell = a.nvars;
  r.d = aprime.size() - restriction_size(a, i);
  auto f = is_free_any(aprime);
  r.base_free = f.has_value();
  r.actual = classify_any(a);
  if (!r.base_free) return r;
  r.exp_base = *f;
  r.applicable = ell == 3 || r.d >= r.exp_base[ell - 3];
  r.predicted_poexp = r.exp_base;
  r.predicted_poexp[ell - 2] += 1;
  r.predicted_poexp[ell - 1] += 1;
  r.predicted_level = r.exp_base[ell - 2] + r.exp_base[ell - 1] - r.d;
  if (!r.applicable) return r;
  bool ok = r.actual.verdict == Verdict::Free ||
            (r.actual.verdict == Verdict::StrictPOG &&
             multiset_eq(r.actual.exponents, r.predicted_poexp) &&
             r.actual.level == r.predicted_level);
  if (!ok) abort();
  r.confirmed = true;
  return r;
}

namespace {

bool filtration_dfs(const Arrangement& a, std::uint64_t mask, int picked,
                    std::vector<int>& order,
                    std::vector<std::vector<int>>& exps,
                    std::set<std::uint64_t>& dead) {
  int n = a.size();
  if (picked == n) return true;
  if (dead.count(mask)) return false;
  for (int h = 0; h < n; ++h) {
    if (mask & (std::uint64_t(1) << h)) continue;
    std::uint64_t m2 = mask | (std::uint64_t(1) << h);
    std::vector<int> members;
    for (int t = 0; t < n; ++t)
      if (m2 & (std::uint64_t(1) << t)) members.push_back(t);
    auto f = is_free_any(subarrangement(a, members));
    if (!f) continue;
    order.push_back(h);
    exps.push_back(*f);
    if (filtration_dfs(a, m2, picked + 1, order, exps, dead)) return true;
    order.pop_back();
    exps.pop_back();
  }
  dead.insert(mask);
  return false;
}

}  // namespace

FiltrationResult free_filtration(const Arrangement& a) {
  if (a.size() > 20)
    throw std::invalid_argument("free_filtration: arrangement too large");
  FiltrationResult r;
  if (!is_free_any(a)) return r;  // the top term already fails
  std::set<std::uint64_t> dead;
  r.exists = filtration_dfs(a, 0, 0, r.order, r.exponents, dead);
  return r;
}

FreeAdditionsReport free_additions(const Arrangement& a,
                                   const std::vector<Hyperplane>& extra,
                                   bool include_spans) {
  FreeAdditionsReport r;
  std::vector<Hyperplane> candidates;
  Lattice l = intersection_lattice(a);
  auto r2 = rank2_flats(l);
  if (!include_spans) r2.clear();
  for (size_t x = 0; x < r2.size(); ++x) {
    for (size_t y = x + 1; y < r2.size(); ++y) {
      QMatrix span(0, a.nvars);
      for (const auto* fl : {r2[x], r2[y]}) {
        QMatrix nm(static_cast<int>(fl->normals.size()), a.nvars);
        for (size_t t = 0; t < fl->normals.size(); ++t)
          for (int v = 0; v < a.nvars; ++v)
            nm.at(static_cast<int>(t), v) = fl->normals[t][v];
        for (const QVec& dir : kernel_basis(nm)) span.add_row(dir);
      }
      QMatrix sp = span;
      if (rank(sp) != a.nvars - 1) continue;
      auto normals = kernel_basis(span);
      if (normals.size() != 1) continue;
      candidates.push_back(Hyperplane::from(normals[0]));
    }
  }
  candidates.insert(candidates.end(), extra.begin(), extra.end());

  std::set<std::string> seen;
  for (const Hyperplane& h : candidates) {
    std::string key = h.str();
    if (a.index_of(h) >= 0 || seen.count(key)) {
      ++r.skipped_duplicates;
      continue;
    }
    seen.insert(key);
    r.pool.push_back(h);
  }

  const ClassificationReport& base = classify_cached(a);
  bool high_level = base.verdict == Verdict::StrictPOG;
  if (high_level)
    for (int e : base.exponents) high_level = high_level && base.level > e;
  r.uniqueness_applies = high_level;

  for (size_t t = 0; t < r.pool.size(); ++t) {
    Arrangement b = add_hyperplane(a, r.pool[t]);
    auto f = is_free_any(b);
    if (!f) continue;
    r.hit_indices.push_back(static_cast<int>(t));
    r.hit_exponents.push_back(*f);
    if (r.uniqueness_applies) {
      std::vector<int> want = base.exponents;
      std::vector<int> got = *f;
      got.erase(std::remove(got.begin(), got.end(), 0), got.end());
      if (!multiset_eq(got, want)) abort();
      int bl = restriction_size(b, b.size() - 1);
      if (a.size() - bl != base.level) abort();
      r.props_checked = true;
    }
  }
  if (r.uniqueness_applies && r.hit_indices.size() > 1) abort();
  return r;
}

CombinatorialDeletionReport combinatorial_deletion_check(const Arrangement& a,
                                                         int i) {
  if (!is_free_any(a))
    throw std::invalid_argument(
        "combinatorial_deletion_check: arrangement not free");
  CombinatorialDeletionReport r;
  Restriction rest = restrict_arrangement(a, i);
  Lattice lh = intersection_lattice(rest.arr);
  for (const Flat& x : lh.flats) {
    std::vector<int> members = {i};
    for (int k : x.members)
      for (int pre : rest.preimages[k]) members.push_back(pre);
    std::sort(members.begin(), members.end());
    Arrangement ax = subarrangement(a, members);
    int pos = static_cast<int>(
        std::find(members.begin(), members.end(), i) - members.begin());
    int nx = ax.size();
    int nxh = restriction_size(ax, pos);
    Rational sx = Rational(-1, nx - nxh);
    if (!poincare_of(ax).eval(sx).is_zero()) {
      std::string desc = "codim " + std::to_string(x.codim) + " flat {";
      for (size_t t = 0; t < members.size(); ++t)
        desc += (t ? "," : "") + a.hyperplanes[members[t]].str();
      desc += "}";
      r.failures.push_back(desc);
    }
  }
  r.predicted_free = r.failures.empty();
  r.actual_free = is_free_any(delete_hyperplane(a, i)).has_value();
  if (r.predicted_free != r.actual_free) abort();
  return r;
}

ConjectureScan conjecture_scan(const Arrangement& a) {
  auto cert = is_free(a);
  if (!cert)
    throw std::invalid_argument("conjecture_scan: arrangement not free");
  const std::vector<int>& exps = cert->exponents;
  ConjectureScan out;
  Lattice l = intersection_lattice(a);
  for (int i = 0; i < a.size(); ++i) {
    ConjectureScan::Row row;
    row.index = i;
    row.d = a.size() - restriction_size(a, i);
    row.in_exponents =
        std::find(exps.begin(), exps.end(), row.d) != exps.end();
    row.above_all = row.d > exps.back();
    row.holds = row.in_exponents || row.above_all;
    out.conjecture_holds = out.conjecture_holds && row.holds;
    for (int k = 2; k < a.nvars; ++k) {
      bool hyp = true;
      for (const Flat& x : l.flats) {
        if (x.codim != k) continue;
        if (!(x.mask & (std::uint64_t(1) << i))) continue;
        if (!is_free_any(localize(a, x))) {
          hyp = false;
          break;
        }
      }
      if (!hyp) continue;
      row.thm_small_roots_codims.push_back(k);
      int small = 0;
      for (int e : exps)
        if (e < row.d) ++small;
      if (!row.in_exponents && small < k + 1) abort();
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace arrkit

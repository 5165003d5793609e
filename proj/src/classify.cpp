#include "arrkit/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>

namespace arrkit {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Free:
      return "Free";
    case Verdict::StrictPOG:
      return "StrictPOG";
    case Verdict::POG:
      return "POG";
    default:
      return "NeitherAtBound";
  }
}

namespace {

std::vector<int> chi_roots(const UniPoly& chi, int n) {
  std::vector<int> out;
  for (long long r : chi.integer_roots(std::max(n, 1)))
    out.push_back(static_cast<int>(r));
  return out;
}

// mod-p rank of the span of all monomial multiples of the generators in
// degree k, stopping early once target is reached
int genspan_rank_zp(int nv, const std::vector<Derivation>& gens,
                    const std::vector<int>& degs, int k, long long target,
                    std::uint32_t p) {
  int dim_k = static_cast<int>(monomial_basis(nv, k).size());
  EchelonZp ech(nv * dim_k, p);
  for (size_t j = 0; j < gens.size(); ++j) {
    int sd = k - degs[j];
    if (sd < 0) continue;
    std::vector<std::tuple<int, Mono, std::uint32_t>> terms;
    for (int i = 0; i < nv; ++i)
      for (const auto& [mono, c] : gens[j].c[i].terms())
        terms.emplace_back(i, mono, to_zp(c, p));
    for (Mono nu : monomial_basis(nv, sd)) {
      std::vector<std::uint32_t> v(static_cast<size_t>(nv) * dim_k, 0);
      for (const auto& [i, mono, c] : terms) {
        int idx = i * dim_k + mono_index(nv, k, mono_mul(mono, nu));
        v[idx] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(v[idx]) + c) % p);
      }
      ech.insert(std::move(v));
      if (ech.dim() >= target) return ech.dim();
    }
  }
  return ech.dim();
}

long long pog_expected_dim(int nv, const std::vector<int>& gdeg, int syzdeg,
                           int k) {
  long long s = 0;
  for (int d : gdeg) s += dim_degree(nv, k - d);
  return s - dim_degree(nv, k - syzdeg);
}

// dim D(A)_k == expected for k in [from, to]; the upper bound comes from a
// mod-p constraint rank, the lower bound from the span of the generators
// mod p; any disagreement falls back to an exact rank, so the result is
// exact. Returns a diagnostic on the first mismatch.
std::string pog_hilbert_check(const Arrangement& a, const GeneratorSet& g,
                              int syzdeg, int from, int to) {
  int nv = a.nvars;
  for (int k = from; k <= to; ++k) {
    long long expected = pog_expected_dim(nv, g.degrees, syzdeg, k);
    int upper = slice_dim_upper(a, nullptr, k, -1);
    if (upper < expected)
      return "Hilbert mismatch at degree " + std::to_string(k) + ": dim <= " +
             std::to_string(upper) + ", resolution predicts " +
             std::to_string(expected);
    bool certified = false;
    if (upper == expected) {
      for (std::uint32_t p : kPrimes) {
        try {
          int lower = genspan_rank_zp(nv, g.generators, g.degrees, k,
                                      expected, p);
          if (lower > expected) abort();
          certified = lower == expected;
          break;
        } catch (const BadPrime&) {
          continue;
        }
      }
    }
    if (!certified) {
      int exact = slice_dim_exact(a, nullptr, k, -1);
      if (exact != expected)
        return "Hilbert mismatch at degree " + std::to_string(k) + ": dim " +
               std::to_string(exact) + ", resolution predicts " +
               std::to_string(expected);
    }
  }
  return "";
}

}  // namespace

std::optional<FreenessCertificate> is_free(const Arrangement& a,
                                          const Multiplicity* m) {
  if (!m && !is_essential(a)) throw NonEssentialError();
  int nv = a.nvars;
  int total = m ? mult_total(*m) : a.size();
  std::vector<int> expect;
  int gb;
  if (!m) {
    UniPoly chi = char_poly(a);
    expect = chi_roots(chi, a.size());
    if (static_cast<int>(expect.size()) != nv) return std::nullopt;  // Terao
    gb = std::max(1, expect.back());
  } else {
    gb = std::max(1, total);
  }
  GeneratorSet g = minimal_generators(a, m, gb);
  if (static_cast<int>(g.generators.size()) != nv) return std::nullopt;
  if (!m && g.degrees != expect) return std::nullopt;
  int degsum = 0;
  for (int d : g.degrees) degsum += d;
  if (degsum != total) return std::nullopt;
  SaitoResult sc = saito_check(a, m, g.generators);
  if (!sc.ok) return std::nullopt;
  return FreenessCertificate{g.degrees, g.generators, sc.constant};
}

ClassificationReport classify(const Arrangement& a, int bound,
                              int hilbert_bound) {
  if (!is_essential(a)) throw NonEssentialError();
  int nv = a.nvars;
  int n = a.size();
  int B = bound >= 1 ? bound : std::max(n, 1);
  int HB = hilbert_bound >= 1 ? hilbert_bound : 2 * std::max(n, 1);
  ClassificationReport rep;
  rep.verified_to = B;

  if (auto cert = is_free(a)) {
    rep.verdict = Verdict::Free;
    rep.exponents = cert->exponents;
    rep.generator_degrees = cert->exponents;
    rep.hilbert_checked_to = cert->exponents.back();
    rep.free_cert = std::move(cert);
    return rep;
  }

  GeneratorSet g = minimal_generators(a, nullptr, B);
  rep.generator_degrees = g.degrees;
  int k = static_cast<int>(g.generators.size());

  if (k < nv) {
    rep.obstruction = "only " + std::to_string(k) +
                      " minimal generators up to degree " + std::to_string(B) +
                      " (bound too low to see rank " + std::to_string(nv) + ")";
    return rep;
  }

  UniPoly chi = char_poly(a);
  SyzygySet syz = first_syzygies(a, g, B + 1);
  rep.syzygy_checked_to = B + 1;
  rep.syzygy_degrees = syz.degrees;

  if (k == nv) {
    rep.obstruction =
        "exactly " + std::to_string(nv) +
        " minimal generators up to the bound but not free (Saito/Terao "
        "fails); no plus-one shape at this bound";
    long long b2 = betti(chi, nv, 2);
    long long pairs = 0;
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        pairs += static_cast<long long>(g.degrees[i]) * g.degrees[j];
    long long dstar = b2 - pairs;
    if (dstar > B)
      rep.obstruction += "; a plus-one level would sit at degree " +
                         std::to_string(dstar) + " > bound";
    return rep;
  }

  if (k >= nv + 2) {
    rep.obstruction = std::to_string(k) + " minimal generators (>= " +
                      std::to_string(nv + 2) + "); " +
                      std::to_string(syz.degrees.size()) +
                      " minimal first syzygies up to degree " +
                      std::to_string(B + 1);
    return rep;
  }

  // k == nv + 1: plus-one shape candidate
  if (syz.degrees.empty()) {
    rep.obstruction = std::to_string(nv + 1) +
                      " minimal generators but no relation up to degree " +
                      std::to_string(B + 1);
    return rep;
  }
  if (syz.degrees.size() >= 2) {
    rep.obstruction = std::to_string(nv + 1) + " minimal generators with " +
                      std::to_string(syz.degrees.size()) +
                      " minimal first syzygies (pd >= 2 witness)";
    return rep;
  }

  int e = syz.degrees[0];
  int d = e - 1;
  std::vector<int> poexp = g.degrees;
  auto it = std::find(poexp.begin(), poexp.end(), d);
  if (it == poexp.end()) {
    rep.obstruction = "unique syzygy at degree " + std::to_string(e) +
                      " but no generator of degree " + std::to_string(d);
    return rep;
  }
  poexp.erase(it);

  if (poexp.empty() || poexp.front() != 1) {
    rep.obstruction = "plus-one shape without the Euler degree in poexp";
    return rep;
  }
  long long b1 = betti(chi, nv, 1);
  long long b2 = betti(chi, nv, 2);
  long long s1 = 0, s2 = 0;
  for (size_t i = 1; i < poexp.size(); ++i) s1 += poexp[i];
  for (size_t i = 1; i < poexp.size(); ++i)
    for (size_t j = i + 1; j < poexp.size(); ++j)
      s2 += static_cast<long long>(poexp[i]) * poexp[j];
  if (s1 != b1 || s2 + d != b2) {
    rep.obstruction =
        "plus-one Betti cross-check failed: sum(poexp[2..]) = " +
        std::to_string(s1) + " vs b1 = " + std::to_string(b1) +
        ", pair-sum + level = " + std::to_string(s2 + d) + " vs b2 = " +
        std::to_string(b2);
    return rep;
  }

  // Hilbert consistency: search range via the exact slice dims, beyond it
  // via the squeeze
  for (int kk = 0; kk <= B; ++kk) {
    long long expected = pog_expected_dim(nv, g.degrees, e, kk);
    if (g.slice_dims[kk] != expected) {
      rep.obstruction = "Hilbert mismatch at degree " + std::to_string(kk) +
                        ": dim " + std::to_string(g.slice_dims[kk]) +
                        ", resolution predicts " + std::to_string(expected);
      return rep;
    }
  }
  if (HB > B) {
    std::string fail = pog_hilbert_check(a, g, e, B + 1, HB);
    if (!fail.empty()) {
      rep.obstruction = fail;
      return rep;
    }
  }
  rep.hilbert_checked_to = HB;

  const auto& rel = syz.relations[0];
  int level_index = -1;
  Poly level_coeff(nv);
  for (int j = 0; j < k; ++j)
    if (g.degrees[j] == d && !rel[j].is_zero()) {
      level_index = j;
      level_coeff = rel[j];
      break;
    }
  bool strict = level_index >= 0;

  rep.verdict = strict ? Verdict::StrictPOG : Verdict::POG;
  rep.exponents = poexp;
  rep.level = d;
  rep.strict = strict;
  POGCertificate cert;
  cert.poexp = poexp;
  cert.level = d;
  cert.generators = g.generators;
  cert.generator_degrees = g.degrees;
  cert.relation = rel;
  cert.level_index = level_index;
  cert.strict = strict;
  cert.level_coefficient = level_coeff;
  rep.pog_cert = std::move(cert);
  return rep;
}

std::optional<std::vector<int>> is_free_any(const Arrangement& a) {
  static std::map<std::string, std::optional<std::vector<int>>> cache;
  std::string key = canonical_key(a);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  Essentialization e = essentialize(a);
  int pad = a.nvars - e.rank;
  std::optional<std::vector<int>> out;
  if (e.rank == 0) {
    out = std::vector<int>{};
  } else if (e.rank == 1) {
    out = std::vector<int>{1};
  } else if (e.rank == 2) {
    out = std::vector<int>{1, e.arr.size() - 1};
  } else if (auto c = is_free(e.arr)) {
    out = c->exponents;
  }
  if (out)
    for (int i = 0; i < pad; ++i) out->insert(out->begin(), 0);
  cache[key] = out;
  return out;
}

ClassificationReport classify_any(const Arrangement& a, int bound) {
  Essentialization e = essentialize(a);
  if (e.rank == a.nvars) return classify(a, bound);
  int pad = a.nvars - e.rank;
  if (e.rank == 0) {
    ClassificationReport r;
    r.verdict = Verdict::Free;
    r.exponents.assign(a.nvars, 0);
    return r;
  }
  ClassificationReport r = classify(e.arr, bound);
  for (int i = 0; i < pad; ++i) r.exponents.insert(r.exponents.begin(), 0);
  return r;
}

const ClassificationReport& classify_cached(const Arrangement& a) {
  static std::map<std::string, std::unique_ptr<ClassificationReport>> cache;
  std::string key = canonical_key(a);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto rep = std::make_unique<ClassificationReport>(classify_any(a));
    it = cache.emplace(key, std::move(rep)).first;
  }
  return *it->second;
}

LocalFreenessReport is_locally_free(const Arrangement& a, int upto_codim,
                                    int along) {
  Lattice l = intersection_lattice(a);
  int top = upto_codim >= 0 ? std::min(upto_codim, l.rank) : l.rank;
  LocalFreenessReport rep;
  for (const auto& f : l.flats) {
    if (f.codim < 2 || f.codim > top) continue;
    if (static_cast<int>(f.members.size()) == a.size()) continue;  // center
    if (along >= 0 && !(f.mask & (std::uint64_t(1) << along))) continue;
    if (is_free_any(localize(a, f))) continue;
    rep.ok = false;
    rep.witness = "codim " + std::to_string(f.codim) + " flat of {";
    for (size_t t = 0; t < f.members.size(); ++t)
      rep.witness +=
          (t ? "," : "") + a.hyperplanes[f.members[t]].str();
    rep.witness += "}";
    return rep;
  }
  return rep;
}

YoshinagaReport yoshinaga_criterion(const Arrangement& a, int i) {
  if (a.nvars != 3) throw std::invalid_argument("yoshinaga: need l = 3");
  ZieglerRestriction zr = ziegler_restrict(a, i);
  GeneratorSet g =
      minimal_generators(zr.restricted, &zr.mult, mult_total(zr.mult));
  if (g.generators.size() != 2) abort();  // rank-2 multi is always free
  SaitoResult sc = saito_check(zr.restricted, &zr.mult, g.generators);
  if (!sc.ok) abort();
  YoshinagaReport rep;
  rep.ziegler_exp = g.degrees;
  rep.b20 = betti0(char_poly(a), 3, 2);
  rep.gap = rep.b20 -
            static_cast<long long>(g.degrees[0]) * g.degrees[1];
  if (rep.gap < 0) abort();
  rep.free_predicted = rep.gap == 0;
  return rep;
}

bool terao_factorization_check(const Arrangement& a,
                               const FreenessCertificate& cert) {
  UniPoly prod = UniPoly::constant(q_one());
  for (int d : cert.exponents) prod = prod.mul_linear(Rational(d));
  return prod == char_poly(a);
}

RestrictionBoundReport restriction_size_bound_check(const Arrangement& a,
                                                    const Hyperplane& l) {
  RestrictionBoundReport r;
  if (a.nvars != 3) {
    r.reason = "requires l = 3";
    return r;
  }
  UniPoly chi = char_poly(a);
  UniPoly q;
  try {
    q = chi0(chi);
  } catch (const std::exception&) {
    r.reason = "empty arrangement";
    return r;
  }
  auto roots = q.integer_roots(a.size());
  if (roots.size() != 2) {
    r.reason = "chi/(t-1) has no rational factorization";
    return r;
  }
  r.applicable = true;
  r.a = roots[0];
  r.b = roots[1];
  int li = a.index_of(l);
  Arrangement b = li >= 0 ? a : add_hyperplane(a, l);
  int bi = li >= 0 ? li : b.size() - 1;
  r.n_l = restrict_arrangement(b, bi).arr.size();
  if (r.n_l <= r.a + 1)
    r.branch = "n_L <= a+1";
  else if (r.n_l >= r.b + 1)
    r.branch = "n_L >= b+1";
  else
    abort();  // excluded by the proposition
  r.equality = r.n_l == r.a + 1 || r.n_l == r.b + 1;
  if (r.equality) {
    auto f1 = is_free_any(a);
    Arrangement other = li >= 0 ? delete_hyperplane(a, li) : b;
    auto f2 = is_free_any(other);
    r.both_free = f1.has_value() && f2.has_value();
  }
  return r;
}

}  // namespace arrkit

#include "arrkit/catalog.hpp"

#include <cstdlib>
#include <stdexcept>

#include "arrkit/lattice.hpp"
#include "arrkit/linalg.hpp"

namespace arrkit {

namespace {

Arrangement build(int nv, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> forms;
  for (const auto& r : rows) {
    std::vector<Rational> v;
    for (long long x : r) v.push_back(Rational(x));
    forms.push_back(std::move(v));
  }
  return make_arrangement(nv, forms);
}

}  // namespace

Arrangement catalog_boolean(int ell) {
  if (ell < 1 || ell > 8)
    throw std::invalid_argument("boolean: need 1 <= ell <= 8");
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < ell; ++i) {
    std::vector<long long> r(ell, 0);
    r[i] = 1;
    rows.push_back(r);
  }
  return build(ell, rows);
}

Arrangement catalog_tangent() {
  return build(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

Arrangement catalog_factor() {
  return build(3, {{1, 0, 0},
                   {0, 1, 0},
                   {0, 0, 1},
                   {0, 1, -1},
                   {1, -1, 0},
                   {1, 1, 0},
                   {1, -2, 0},
                   {1, 2, 0}});
}

Arrangement catalog_b3() {
  return build(3, {{1, 0, 0},
                   {0, 1, 0},
                   {0, 0, 1},
                   {1, -1, 0},
                   {1, 1, 0},
                   {1, 0, -1},
                   {1, 0, 1},
                   {0, 1, -1},
                   {0, 1, 1},
                   {-1, 1, -1},
                   {-1, 1, 1},
                   {1, 1, -1},
                   {1, 1, 1}});
}

Arrangement catalog_b3_plus_generic() {
  Arrangement b3 = catalog_b3();
  Hyperplane h = Hyperplane::from({Rational(1), Rational(7), Rational(53)});
  // the added plane must avoid every rank-2 flat of b3
  Lattice l = intersection_lattice(b3);
  for (const Flat* f : rank2_flats(l)) {
    QMatrix nm(static_cast<int>(f->normals.size()), 3);
    for (size_t t = 0; t < f->normals.size(); ++t)
      for (int v = 0; v < 3; ++v)
        nm.at(static_cast<int>(t), v) = f->normals[t][v];
    auto dirs = kernel_basis(nm);
    if (dirs.size() != 1) abort();
    Rational dot;
    for (int v = 0; v < 3; ++v) dot += h.a[v] * dirs[0][v];
    if (dot.is_zero()) abort();
  }
  return add_hyperplane(b3, h);
}

Arrangement catalog_addnot() {
  return build(4, {{1, 0, 0, 0},
                   {0, 1, 0, 0},
                   {0, 0, 1, 0},
                   {0, 0, 0, 1},
                   {1, -1, 0, 0},
                   {0, 1, -1, 0},
                   {0, 0, 1, -1},
                   {1, 0, 0, 1}});
}

Arrangement catalog_shi_b(int ell) {
  if (ell < 2 || ell > 3)
    throw std::invalid_argument("shi-b: need 2 <= ell <= 3");
  int nv = ell + 1;  // last coordinate is the coning variable
  std::vector<std::vector<long long>> rows;
  std::vector<long long> z(nv, 0);
  z[ell] = 1;
  rows.push_back(z);
  for (int i = 0; i < ell; ++i) {
    std::vector<long long> r(nv, 0);
    r[i] = 1;
    rows.push_back(r);
    r[ell] = -1;
    rows.push_back(r);
  }
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j)
      for (int sign : {-1, 1}) {
        std::vector<long long> r(nv, 0);
        r[i] = 1;
        r[j] = sign;
        rows.push_back(r);
        r[ell] = -1;
        rows.push_back(r);
      }
  return build(nv, rows);
}

std::vector<std::string> catalog_names() {
  return {"boolean", "tangent", "factor", "b3", "b3plus", "addnot", "shi-b"};
}

Arrangement catalog(const std::string& name, int ell) {
  if (name == "boolean") return catalog_boolean(ell > 0 ? ell : 3);
  if (name == "tangent") return catalog_tangent();
  if (name == "factor") return catalog_factor();
  if (name == "b3") return catalog_b3();
  if (name == "b3plus") return catalog_b3_plus_generic();
  if (name == "addnot") return catalog_addnot();
  if (name == "shi-b") return catalog_shi_b(ell > 0 ? ell : 2);
  throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace arrkit

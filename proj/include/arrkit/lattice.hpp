#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"
#include "arrkit/linalg.hpp"
#include "arrkit/poly.hpp"

namespace arrkit {

// A flat X of the intersection lattice, identified by the reduced echelon
// basis of its normal space (the span of the forms vanishing on X).
struct Flat {
  std::vector<QVec> normals;   // reduced echelon rows spanning X^perp
  int codim = 0;               // = number of normal rows
  std::uint64_t mask = 0;      // bit i set iff hyperplane i contains X
  std::vector<int> members;    // same, as sorted indices
};

struct Lattice {
  std::vector<Flat> flats;  // codim-ascending; flats[0] is the whole space
  std::vector<long long> mobius;
  int rank = 0;  // codim of the center

  const Flat& center() const { return flats.back(); }
};

Lattice intersection_lattice(const Arrangement& a);

// flats of codimension k
std::vector<const Flat*> flats_of_codim(const Lattice& l, int k);

// the flat with exactly this member set; null when absent
const Flat* find_flat(const Lattice& l, std::uint64_t mask);

Arrangement localize(const Arrangement& a, const Flat& x);

UniPoly char_poly(const Arrangement& a);
UniPoly char_poly(const Lattice& l, int nvars);

// pi(A;t) = (-t)^l chi(A; -1/t)
UniPoly poincare_poly(const UniPoly& chi, int nvars);

// chi with the guaranteed (t-1) factor removed; errors on empty A
UniPoly chi0(const UniPoly& chi);

long long betti(const UniPoly& chi, int nvars, int i);
long long betti0(const UniPoly& chi, int nvars, int i);

// chi(A;t) = chi(A';t) - chi(A^H;t), checked exactly
bool deletion_restriction_check(const Arrangement& a, int i);

// all rank-2 flats, i.e. codimension-2 intersections
std::vector<const Flat*> rank2_flats(const Lattice& l);

}  // namespace arrkit

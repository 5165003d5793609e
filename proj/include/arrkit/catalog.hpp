#pragma once

#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"

namespace arrkit {

Arrangement catalog_boolean(int ell);
Arrangement catalog_tangent();          // coordinate planes plus x+y+z
Arrangement catalog_factor();           // xyz(y-z)(x^2-y^2)(x^2-4y^2)
Arrangement catalog_b3();               // B3 reflection arrangement
Arrangement catalog_b3_plus_generic();  // b3 with a pinned generic plane
Arrangement catalog_addnot();           // supersolvable plus one bad plane
Arrangement catalog_shi_b(int ell);     // coned Shi of type B, ell <= 3

std::vector<std::string> catalog_names();
Arrangement catalog(const std::string& name, int ell = 0);

}  // namespace arrkit

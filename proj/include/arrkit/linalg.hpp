#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrkit/poly.hpp"
#include "arrkit/rational.hpp"

namespace arrkit {

using QVec = std::vector<Rational>;

struct QMatrix {
  int nr = 0;
  int nc = 0;
  std::vector<QVec> rows;

  QMatrix() = default;
  QMatrix(int r, int c) : nr(r), nc(c), rows(r, QVec(c)) {}

  Rational& at(int i, int j) { return rows[i][j]; }
  const Rational& at(int i, int j) const { return rows[i][j]; }
  void add_row(QVec v) {
    rows.push_back(std::move(v));
    nr = static_cast<int>(rows.size());
    if (nr == 1) nc = static_cast<int>(rows[0].size());
  }
};

// In-place reduced row echelon form. Pivot rule: columns scanned left to
// right, first row at or below the cursor with a nonzero entry is swapped
// up. Returns the pivot columns in order.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// Kernel basis in reduced echelon normal form: one vector per free column,
// ordered by free column ascending, with a unit in that column.
std::vector<QVec> kernel_basis(const QMatrix& m);

// Particular solution of m x = b with all free variables set to zero;
// nullopt when inconsistent. nullity_out, when given, receives the number
// of free columns.
std::optional<QVec> solve(const QMatrix& m, const QVec& b,
                          int* nullity_out = nullptr);

// Incrementally maintained reduced echelon basis of a subspace of Q^n.
class EchelonQ {
public:
  explicit EchelonQ(int width) : width_(width) {}

  // reduce v against the current rows; returns the residual
  QVec residue(QVec v) const;

  // insert v if independent; true when the dimension grew
  bool insert(QVec v);

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  // rows sorted by leading column, each with unit lead, fully reduced
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& leads() const { return leads_; }
  bool contains(const QVec& v) const;

private:
  int width_;
  std::vector<QVec> rows_;
  std::vector<int> leads_;
};

// ----- mod-p layer ------------------------------------------------------
//
// Used only for one-sided rank bounds: a mod-p rank never exceeds the
// rational rank. Results derived from it are certified by squeezing
// against an exact bound from the other side; a bad prime can only cause
// a fallback to exact arithmetic, never a wrong answer.

struct BadPrime : std::runtime_error {
  BadPrime() : std::runtime_error("denominator vanishes mod p") {}
};

inline constexpr std::uint32_t kPrimes[] = {2000000011u, 1999999973u,
                                            1999999943u};

std::uint32_t zp_inv(std::uint32_t a, std::uint32_t p);

// throws BadPrime when the reduced denominator vanishes mod p
std::uint32_t to_zp(const Rational& q, std::uint32_t p);

class EchelonZp {
public:
  explicit EchelonZp(int width, std::uint32_t p) : width_(width), p_(p) {}

  bool insert(std::vector<std::uint32_t> v);
  int dim() const { return static_cast<int>(rows_.size()); }

private:
  int width_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> leads_;
};

int zp_rank(std::vector<std::vector<std::uint32_t>> rows, int width,
            std::uint32_t p);

// Determinant of a square matrix of polynomials by memoized cofactor
// expansion; fine for the sizes that occur here (up to 5x5).
Poly poly_matrix_det(const std::vector<std::vector<Poly>>& m);

}  // namespace arrkit

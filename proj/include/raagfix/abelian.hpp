#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagfix/error.hpp"

namespace raagfix {

// Arbitrary precision throughout; Hermite reduction blows up intermediate
// entries even on small inputs.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix power(int k) const; // square only, k >= 0

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m);

struct HnfResult {
  IntMatrix h; // row-style Hermite normal form of the input
  IntMatrix u; // unimodular, u * input = h
};

// Canonical row HNF: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows last.
HnfResult hermite_normal_form(const IntMatrix& m);

Int determinant(const IntMatrix& m); // square only

// Integer row lattice, kept as an HNF basis so equality is structural.
class Lattice {
public:
  static Lattice from_generators(const std::vector<std::vector<Int>>& rows, int ambient);
  static Lattice full(int ambient);
  static Lattice zero(int ambient);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  int ambient_ = 0;
  std::vector<std::vector<Int>> basis_;
};

// Basis of {u : u * m = 0} (left kernel; saturated by construction).
std::vector<std::vector<Int>> left_kernel(const IntMatrix& m);

// Basis of {u : u * m = u}, the abelian shadow of the fixed subgroup.
Lattice fixed_lattice(const IntMatrix& m);

// Lattice generated by the kernels of m^k - id for k = 1..kmax.
Lattice periodic_lattice(const IntMatrix& m, int kmax);

// Exact membership in the integer row span, by HNF back-substitution.
bool lattice_member(const Lattice& l, const std::vector<Int>& v);

} // namespace raagfix

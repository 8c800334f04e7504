#include "raagfix/abelian.hpp"

#include <algorithm>
#include <utility>

namespace raagfix {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw Error("matrix shape mismatch in product");
  IntMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const Int& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols(); ++j) out.at(i, j) += xv * y.at(k, j);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error("matrix shape mismatch in difference");
  IntMatrix out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
  return out;
}

IntMatrix IntMatrix::power(int k) const {
  if (rows_ != cols_) throw Error("power of a non-square matrix");
  if (k < 0) throw Error("negative matrix power");
  IntMatrix acc = identity(rows_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw Error("row vector length mismatch");
  std::vector<Int> out(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  // b > 0 assumed
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

void add_row_multiple(IntMatrix& m, int dst, int src, const Int& factor) {
  if (factor == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
}

void swap_rows(IntMatrix& m, int r1, int r2) {
  if (r1 == r2) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int pivot_row = 0;

  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclidean elimination below the pivot row.
    for (;;) {
      int smallest = -1;
      for (int r = pivot_row; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        if (smallest < 0 || abs(h.at(r, col)) < abs(h.at(smallest, col))) smallest = r;
      }
      if (smallest < 0) break;
      bool others = false;
      for (int r = pivot_row; r < h.rows(); ++r) {
        if (r == smallest || h.at(r, col) == 0) continue;
        others = true;
        Int q = -(h.at(r, col) / h.at(smallest, col));
        add_row_multiple(h, r, smallest, q);
        add_row_multiple(u, r, smallest, q);
      }
      if (!others) {
        swap_rows(h, pivot_row, smallest);
        swap_rows(u, pivot_row, smallest);
        break;
      }
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (int r = 0; r < pivot_row; ++r) {
      Int q = -floor_div(h.at(r, col), h.at(pivot_row, col));
      add_row_multiple(h, r, pivot_row, q);
      add_row_multiple(u, r, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(a, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        // Bareiss fraction-free step; the division is exact.
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Lattice Lattice::from_generators(const std::vector<std::vector<Int>>& rows, int ambient) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient) throw Error("lattice generator length mismatch");
  IntMatrix m(static_cast<int>(rows.size()), ambient);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
  IntMatrix h = hermite_normal_form(m).h;

  Lattice l;
  l.ambient_ = ambient;
  for (int i = 0; i < h.rows(); ++i) {
    std::vector<Int> row(ambient);
    bool zero = true;
    for (int j = 0; j < ambient; ++j) {
      row[j] = h.at(i, j);
      zero = zero && row[j] == 0;
    }
    if (!zero) l.basis_.push_back(std::move(row));
  }
  return l;
}

Lattice Lattice::full(int ambient) {
  std::vector<std::vector<Int>> rows(ambient, std::vector<Int>(ambient));
  for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
  return from_generators(rows, ambient);
}

Lattice Lattice::zero(int ambient) { return from_generators({}, ambient); }

std::vector<std::vector<Int>> left_kernel(const IntMatrix& m) {
  HnfResult res = hermite_normal_form(m);
  std::vector<std::vector<Int>> kernel;
  for (int i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < res.h.cols(); ++j) zero = zero && res.h.at(i, j) == 0;
    if (!zero) continue;
    std::vector<Int> row(m.rows());
    for (int j = 0; j < m.rows(); ++j) row[j] = res.u.at(i, j);
    kernel.push_back(std::move(row));
  }
  return kernel;
}

Lattice fixed_lattice(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("fixed lattice needs a square matrix");
  return Lattice::from_generators(left_kernel(m - IntMatrix::identity(m.rows())), m.rows());
}

Lattice periodic_lattice(const IntMatrix& m, int kmax) {
  if (m.rows() != m.cols()) throw Error("periodic lattice needs a square matrix");
  if (kmax < 1) throw Error("kmax must be at least 1");
  std::vector<std::vector<Int>> rows;
  for (int k = 1; k <= kmax; ++k) {
    auto kernel = left_kernel(m.power(k) - IntMatrix::identity(m.rows()));
    rows.insert(rows.end(), kernel.begin(), kernel.end());
  }
  return Lattice::from_generators(rows, m.rows());
}

bool lattice_member(const Lattice& l, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != l.ambient()) throw Error("lattice membership dimension mismatch");
  std::vector<Int> rest = v;
  for (const auto& row : l.basis()) {
    int pivot = 0;
    while (pivot < l.ambient() && row[pivot] == 0) ++pivot;
    if (rest[pivot] % row[pivot] != 0) return false;
    Int q = rest[pivot] / row[pivot];
    if (q != 0)
      for (int j = 0; j < l.ambient(); ++j) rest[j] -= q * row[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Int& x) { return x == 0; });
}

} // namespace raagfix

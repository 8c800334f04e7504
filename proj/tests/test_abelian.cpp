#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "raagfix/abelian.hpp"

using namespace raagfix;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<Int> vec(const std::vector<long long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

// The path witness endomorphism abelianized: a -> ab, b -> b, c -> b^-1 c.
IntMatrix path_witness_matrix() { return from_rows({{1, 1, 0}, {0, 1, 0}, {0, -1, 1}}); }

// The five-generator example: a -> ab^-1, b -> b, c -> c, d -> dc^-1, e -> ebc.
IntMatrix fgno_matrix() {
  return from_rows({{1, -1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, -1, 1, 0}, {0, 1, 1, 0, 1}});
}

bool rows_equal(const Lattice& l, const std::vector<std::vector<long long>>& rows) {
  if (l.rank() != static_cast<int>(rows.size())) return false;
  for (int i = 0; i < l.rank(); ++i)
    if (l.basis()[i] != vec(rows[i])) return false;
  return true;
}

// Laplace expansion, the independent determinant oracle for small matrices.
Int naive_det(const IntMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int total = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * naive_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

// Brute-force fixed vectors in a box, the kernel oracle.
void scan_box(int dim, int halfwidth, const std::function<void(const std::vector<Int>&)>& visit) {
  std::vector<Int> v(dim);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == dim) {
      visit(v);
      return;
    }
    for (int x = -halfwidth; x <= halfwidth; ++x) {
      v[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
}

} // namespace

TEST_CASE("hermite normal form on the worked examples") {
  auto [h1, u1] = hermite_normal_form(IntMatrix::identity(3));
  CHECK(h1 == IntMatrix::identity(3));
  CHECK(u1 == IntMatrix::identity(3));

  auto [h2, u2] = hermite_normal_form(from_rows({{2, 4}, {1, 2}}));
  CHECK(h2 == from_rows({{1, 2}, {0, 0}}));
  CHECK(u2 * from_rows({{2, 4}, {1, 2}}) == h2);
  CHECK(abs(determinant(u2)) == 1);

  auto [h3, u3] = hermite_normal_form(IntMatrix(2, 2));
  CHECK(h3 == IntMatrix(2, 2));
}

TEST_CASE("hermite normal form is canonical and unimodular on random input") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    int r = 2 + rng() % 3, c = 2 + rng() % 3;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<int>(rng() % 11) - 5;

    auto [h, u] = hermite_normal_form(m);
    REQUIRE(u * m == h);
    REQUIRE(abs(determinant(u)) == 1);

    // canonical shape: positive pivots with strictly increasing columns,
    // reduced entries above, zero rows last
    int last_pivot = -1;
    bool seen_zero_row = false;
    for (int i = 0; i < h.rows(); ++i) {
      int p = 0;
      while (p < h.cols() && h.at(i, p) == 0) ++p;
      if (p == h.cols()) {
        seen_zero_row = true;
        continue;
      }
      REQUIRE(!seen_zero_row);
      REQUIRE(p > last_pivot);
      last_pivot = p;
      REQUIRE(h.at(i, p) > 0);
      for (int k = 0; k < i; ++k) {
        REQUIRE(h.at(k, p) >= 0);
        REQUIRE(h.at(k, p) < h.at(i, p));
      }
    }

    // invariance under row shuffles
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix shuffled(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) shuffled.at(i, j) = m.at(perm[i], j);
    REQUIRE(hermite_normal_form(shuffled).h == h);
  }
}

TEST_CASE("determinant matches the Laplace oracle") {
  CHECK(determinant(from_rows({{1, 1}, {0, 1}})) == 1);
  CHECK(determinant(from_rows({{2, 4}, {1, 2}})) == 0);
  CHECK(determinant(path_witness_matrix()) == 1);
  CHECK(determinant(fgno_matrix()) == 1);
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<int>(rng() % 9) - 4;
    REQUIRE(determinant(m) == naive_det(m));
  }
}

TEST_CASE("fixed lattice of the worked matrices") {
  Lattice path = fixed_lattice(path_witness_matrix());
  CHECK(rows_equal(path, {{1, 0, 1}, {0, 1, 0}}));

  Lattice full = fixed_lattice(IntMatrix::identity(4));
  CHECK(full == Lattice::full(4));

  Lattice fgno = fixed_lattice(fgno_matrix());
  CHECK(fgno.rank() == 3);
  CHECK(rows_equal(fgno, {{1, 0, 0, 1, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  // the basis encodes equal first, fourth and fifth coordinates
  for (const auto& row : fgno.basis()) {
    CHECK(row[0] == row[3]);
    CHECK(row[0] == row[4]);
  }
}

TEST_CASE("fixed lattice agrees with a box search oracle") {
  for (const IntMatrix& m : {path_witness_matrix(), fgno_matrix()}) {
    Lattice l = fixed_lattice(m);
    scan_box(m.rows(), 3, [&](const std::vector<Int>& v) {
      bool fixed = row_times_matrix(v, m) == v;
      REQUIRE(fixed == lattice_member(l, v));
    });
  }
}

TEST_CASE("periodic lattice") {
  IntMatrix m = path_witness_matrix();
  CHECK(periodic_lattice(m, 5) == fixed_lattice(m));

  IntMatrix minus = from_rows({{-1, 0}, {0, -1}});
  CHECK(periodic_lattice(minus, 2) == Lattice::full(2));
  CHECK(periodic_lattice(minus, 1) == Lattice::zero(2));
  CHECK(periodic_lattice(minus, 1).rank() == 0);

  // fixed lattice sits inside every periodic lattice
  for (const IntMatrix& mm : {path_witness_matrix(), fgno_matrix(), minus}) {
    Lattice fixed = fixed_lattice(mm);
    for (int k = 1; k <= 4; ++k) {
      Lattice per = periodic_lattice(mm, k);
      for (const auto& row : fixed.basis()) REQUIRE(lattice_member(per, row));
    }
  }
}

TEST_CASE("lattice membership") {
  Lattice l = fixed_lattice(path_witness_matrix());
  CHECK(lattice_member(l, vec({2, 5, 2})));
  CHECK(!lattice_member(l, vec({1, 0, 0})));
  CHECK(lattice_member(l, vec({0, 0, 0})));
  CHECK_THROWS_AS(lattice_member(l, vec({1, 2})), Error);
}

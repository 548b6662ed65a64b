#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "anfan/exactla.hpp"

using namespace anfan;

namespace {

SparseMatrix dense(std::vector<std::vector<int>> rows) {
  SparseMatrix m;
  m.ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    SparseVec v;
    for (int j = 0; j < m.ncols; ++j)
      if (r[j] != 0) v.emplace_back(j, Rat(r[j]));
    m.rows.push_back(std::move(v));
  }
  return m;
}

// naive cofactor expansion, the independent oracle for det
Rat naive_det(const std::vector<std::vector<Rat>>& a) {
  std::size_t n = a.size();
  if (n == 0) return Rat(1);
  if (n == 1) return a[0][0];
  Rat sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Rat term = a[0][j] * naive_det(minor);
    if (j % 2) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("row reduction ranks") {
  CHECK(row_reduce(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).rank() == 3);
  CHECK(row_reduce(dense({{0, 1, 1}, {1, 0, 1}, {1, 1, 1}})).rank() == 3);
  CHECK(row_reduce(dense({{0, 0}, {0, 0}})).rank() == 0);
  CHECK(row_reduce(dense({{1, 2}, {2, 4}})).rank() == 1);
}

TEST_CASE("in_span") {
  SparseMatrix m = dense({{1, 2, 0}, {0, 1, 1}});
  auto coeffs = in_span(m.rows[0], m);
  REQUIRE(coeffs);
  CHECK((*coeffs)[0] == 1);
  CHECK((*coeffs)[1] == 0);
  CHECK(in_span(SparseVec{}, m));
  SparseMatrix empty;
  empty.ncols = 3;
  CHECK_FALSE(in_span(SparseVec{{0, Rat(1)}}, empty));
  // combination case: row0 + 2*row1
  SparseVec v = sparse_add(m.rows[0], m.rows[1], Rat(2));
  auto c2 = in_span(v, m);
  REQUIRE(c2);
  CHECK((*c2)[0] == 1);
  CHECK((*c2)[1] == 2);
}

TEST_CASE("determinants") {
  CHECK(det(dense({{1, 0}, {0, 1}})) == 1);
  CHECK(det(dense({{0, 1}, {1, 0}})) == -1);
  CHECK(det(dense({{0, 1, 1}, {1, 0, 1}, {1, 1, 1}})) == 1);
  CHECK(det(dense({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(det(dense({{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
}

TEST_CASE("rank is invariant under row shuffles") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<int>> rows(5, std::vector<int>(6));
    for (auto& r : rows)
      for (int& e : r) e = entry(rng);
    int rank0 = row_reduce(dense(rows)).rank();
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(row_reduce(dense(rows)).rank() == rank0);
  }
}

TEST_CASE("det agrees with cofactor expansion up to size 5") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<int>> rows(size, std::vector<int>(size));
      std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          rows[i][j] = entry(rng);
          a[i][j] = Rat(rows[i][j]);
        }
      CHECK(det(dense(rows)) == naive_det(a));
    }
  }
}

#pragma once

// Exact sparse linear algebra over arbitrary-precision rationals.
// Everything here is a value; no floating point anywhere.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anfan/combinat.hpp"

namespace anfan {

/// Sparse vector: (column, coefficient) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

inline SparseVec sparse_add(const SparseVec& a, const SparseVec& b,
                            const Rat& scale_b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rat c = b[j].second * scale_b;
      if (c != 0) out.emplace_back(b[j].first, c);
      ++j;
    } else {
      Rat c = a[i].second + b[j].second * scale_b;
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

struct SparseMatrix {
  int ncols = 0;
  std::vector<SparseVec> rows;
};

struct Echelon {
  int ncols = 0;
  // reduced rows, one per pivot, sorted by pivot column; each row starts
  // with coefficient 1 at its pivot and is reduced against the others
  std::vector<SparseVec> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }

  /// Reduce v against the echelon rows, returning the residue.
  SparseVec reduce(SparseVec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int p = pivots[r];
      auto it = std::lower_bound(
          v.begin(), v.end(), p,
          [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
      if (it == v.end() || it->first != p) continue;
      Rat c = -it->second;
      v = sparse_add(v, rows[r], c);
    }
    return v;
  }

  /// Insert a row, keeping the basis reduced. Returns false if the row
  /// reduced to zero.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    int p = v.front().first;
    // back-substitute into existing rows
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = std::lower_bound(
          rows[r].begin(), rows[r].end(), p,
          [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
      if (it != rows[r].end() && it->first == p) {
        Rat c = -it->second;
        rows[r] = sparse_add(rows[r], v, c);
      }
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
    std::size_t idx = pos - pivots.begin();
    pivots.insert(pos, p);
    rows.insert(rows.begin() + idx, std::move(v));
    return true;
  }
};

/// Reduced row-echelon form, rank and pivot columns.
inline Echelon row_reduce(const SparseMatrix& m) {
  Echelon e;
  e.ncols = m.ncols;
  for (const SparseVec& r : m.rows) e.insert(r);
  return e;
}

/// Exact row-space membership, with the expressing coefficients when
/// v does lie in the span of the rows of m.
inline std::optional<std::vector<Rat>> in_span(const SparseVec& v,
                                               const SparseMatrix& m) {
  // augment each row with a unit column tracking the combination
  Echelon e;
  e.ncols = m.ncols + static_cast<int>(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    SparseVec r = m.rows[i];
    r.emplace_back(m.ncols + static_cast<int>(i), Rat(1));
    e.insert(std::move(r));
  }
  SparseVec res = e.reduce(v);
  std::vector<Rat> coeffs(m.rows.size(), Rat(0));
  for (const auto& [col, c] : res) {
    if (col < m.ncols) return std::nullopt;  // nonzero residue
    coeffs[col - m.ncols] = -c;
  }
  return coeffs;
}

/// Exact determinant by fraction-free Bareiss elimination. Row
/// denominators are cleared first and divided back out at the end.
inline Rat det(const SparseMatrix& m) {
  int n = static_cast<int>(m.rows.size());
  if (n != m.ncols) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return Rat(1);
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
  Rat denom(1);
  for (int i = 0; i < n; ++i) {
    Int lcm(1);
    for (const auto& [col, c] : m.rows[i])
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    denom *= lcm;
    for (const auto& [col, c] : m.rows[i]) {
      Rat scaled = c * lcm;
      a[i][col] = scaled.get_num();
    }
  }
  int sign = 1;
  Int prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Rat(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat result(a[n - 1][n - 1] * sign);
  result /= denom;
  result.canonicalize();
  return result;
}

/// Determinant of a dense integer matrix (used for cone unimodularity).
inline Int det_int(const std::vector<std::vector<Int>>& rows) {
  SparseMatrix m;
  m.ncols = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    SparseVec v;
    for (int j = 0; j < m.ncols; ++j)
      if (r[j] != 0) v.emplace_back(j, Rat(r[j]));
    m.rows.push_back(std::move(v));
  }
  Rat d = det(m);
  if (d.get_den() != 1) throw std::logic_error("det_int: non-integer result");
  return d.get_num();
}

}  // namespace anfan

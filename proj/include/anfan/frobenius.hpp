#pragma once

// Frobenius structure of M*(n): top class, the pairing, the S' elements
// obtained through code duality, the pairing formulas, the two cutting
// lemmas, unimodularity of the pairing matrices, and the dual-basis
// identity against the change of basis.

#include <algorithm>
#include <string>
#include <vector>

#include "anfan/check.hpp"
#include "anfan/combinat.hpp"
#include "anfan/exactla.hpp"
#include "anfan/iso.hpp"
#include "anfan/mring.hpp"

namespace anfan {

/// ∏_{i∈[n]} S_i, the unique degree-n natural basis element.
inline Monomial top_class(int n) {
  Monomial m;
  for (int i = 1; i <= n; ++i) m.gens.push_back(gen_simple(i));
  return m;
}

/// ⟨x,y⟩ = coefficient of the top class in the normal form of x·y.
inline Int pairing(MRing& ring, const RingElt& x, const RingElt& y) {
  RingElt prod = ring.multiply(x, y);
  auto it = prod.terms.find(top_class(ring.n()));
  return it == prod.terms.end() ? Int(0) : it->second;
}

/// S'_ρ: dualize the degree-1 code of ρ and decode; a degree-(n-1)
/// natural monomial.
inline Monomial s_prime(const Root& rho, int n) {
  USet u;
  if (rho.is_simple())
    u.simples.push_back(rho.lo);
  else
    u.roots.push_back(rho);
  Code dual = dual_code(code_from_uset(u, n));
  return monomial_of_uset(uset_from_code(dual));
}

/// The four pairing formulas between degree 1 and degree n-1:
///   ⟨S_j, S'_i⟩ = δ_{ij};  ⟨S_β, S'_i⟩ = δ_{i∈β};
///   ⟨S_j, S'_α⟩ = δ_{j∈α};
///   ⟨S_β, S'_α⟩ = #β-1 if β ⊆ α, else #(α∩β).
inline CheckReport verify_pairing_proposition(MRing& ring) {
  int n = ring.n();
  CheckReport rep;
  auto elt = [&](const Monomial& m) { return ring_elt(n, m); };
  for (int i = 1; i <= n; ++i) {
    RingElt sp = elt(s_prime(Root{i, i}, n));
    for (int j = 1; j <= n; ++j) {
      Int expect = (i == j) ? 1 : 0;
      rep.record(pairing(ring, elt(monomial({gen_simple(j)})), sp) == expect,
                 "<S_" + std::to_string(j) + ", S'_" + std::to_string(i) + ">");
    }
    for (const Root& b : nonsimple_roots(n)) {
      Int expect = b.contains(i) ? 1 : 0;
      rep.record(pairing(ring, elt(monomial({gen_root(b)})), sp) == expect,
                 "<S_" + to_string(b) + ", S'_" + std::to_string(i) + ">");
    }
  }
  for (const Root& a : nonsimple_roots(n)) {
    RingElt sp = elt(s_prime(a, n));
    for (int j = 1; j <= n; ++j) {
      Int expect = a.contains(j) ? 1 : 0;
      rep.record(pairing(ring, elt(monomial({gen_simple(j)})), sp) == expect,
                 "<S_" + std::to_string(j) + ", S'_" + to_string(a) + ">");
    }
    for (const Root& b : nonsimple_roots(n)) {
      Int expect;
      if (a.contains(b)) {
        expect = b.length() - 1;
      } else {
        int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        expect = std::max(0, hi - lo + 1);
      }
      rep.record(pairing(ring, elt(monomial({gen_root(b)})), sp) == expect,
                 "<S_" + to_string(b) + ", S'_" + to_string(a) + ">");
    }
  }
  return rep;
}

/// S_{i,j}·S_{i,i+1}···S_{j-1,j} = (j-i)·S_i···S_j and
/// S_{i,j}·S_i···S_j = 0 for all 1 ≤ i < j ≤ n.
inline CheckReport verify_cutting_lemmas(MRing& ring) {
  int n = ring.n();
  CheckReport rep;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Monomial chain;
      chain.gens.push_back(gen_root(Root{i, j}));
      for (int k = i; k < j; ++k) chain.gens.push_back(gen_root(Root{k, k + 1}));
      chain.normalize();
      Monomial simples;
      for (int k = i; k <= j; ++k) simples.gens.push_back(gen_simple(k));
      RingElt expect = ring_elt(n, simples, Int(j - i));
      rep.record(ring.normal_form(chain) == expect,
                 "chain lemma at [" + std::to_string(i) + "," +
                     std::to_string(j) + "]");
      Monomial killed;
      killed.gens.push_back(gen_root(Root{i, j}));
      for (int k = i; k <= j; ++k) killed.gens.push_back(gen_simple(k));
      killed.normalize();
      rep.record(ring.normal_form(killed).is_zero(),
                 "vanishing lemma at [" + std::to_string(i) + "," +
                     std::to_string(j) + "]");
    }
  }
  return rep;
}

struct FrobeniusMatrix {
  SparseMatrix matrix;
  Rat determinant;
  bool unimodular = false;
};

/// Pairing matrix between the degree-k and degree-(n-k) natural bases;
/// square by Betti symmetry, and unimodular when the pairing is perfect.
inline FrobeniusMatrix frobenius_matrix(MRing& ring, int k) {
  int n = ring.n();
  std::vector<Monomial> rows = ring.natural_basis(k);
  std::vector<Monomial> cols = ring.natural_basis(n - k);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  FrobeniusMatrix out;
  out.matrix.ncols = static_cast<int>(cols.size());
  for (const Monomial& r : rows) {
    SparseVec row;
    RingElt re = ring_elt(n, r);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Int v = pairing(ring, re, ring_elt(n, cols[c]));
      if (v != 0) row.emplace_back(static_cast<int>(c), Rat(v));
    }
    out.matrix.rows.push_back(std::move(row));
  }
  if (rows.size() == cols.size()) {
    out.determinant = det(out.matrix);
    out.unimodular = (out.determinant == 1 || out.determinant == -1);
  }
  return out;
}

/// S_α = Σ_β ⟨S_α, S'_β⟩ T_β in degree 1: the pairing row must equal the
/// change-of-basis row, for every α ∈ Φ_{>0}.
inline CheckReport verify_dual_basis(MRing& ring) {
  int n = ring.n();
  CheckReport rep;
  for (const Root& a : positive_roots(n)) {
    Gen g = a.is_simple() ? gen_simple(a.lo) : gen_root(a);
    std::map<Root, Int> expect = change_of_basis_row(g, n);
    std::map<Root, Int> got;
    RingElt ge = ring_elt(n, monomial({g}));
    for (const Root& b : positive_roots(n)) {
      Int v = pairing(ring, ge, ring_elt(n, s_prime(b, n)));
      if (v != 0) got[b] = v;
    }
    rep.record(got == expect, "dual basis row at " + to_string(a));
  }
  return rep;
}

}  // namespace anfan

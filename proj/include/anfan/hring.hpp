#pragma once

// Standard presentation of H*(X_{Σ(Q_n)}): the T-generators, linear and
// quadratic relations, elimination of the T_{-i}, and exact reduction in
// each graded piece. This side is the independent oracle for everything
// computed in M*(n).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "anfan/combinat.hpp"
#include "anfan/exactla.hpp"
#include "anfan/fan.hpp"

namespace anfan {

// A variable T_{-i} or T_α (simple roots allowed) is just an almost
// positive root.
using TVar = AlmostPositive;

inline std::string tvar_string(const TVar& v) {
  if (v.is_negative()) return "T(-" + std::to_string(v.neg) + ")";
  return "T(" + std::to_string(v.pos.lo) + "," + std::to_string(v.pos.hi) + ")";
}

/// Monomial over T variables: sorted multiset.
using HMono = std::vector<TVar>;

struct HPoly {
  std::map<HMono, Int> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(HMono m, const Int& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, fresh] = terms.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  HPoly& operator+=(const HPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }

  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly out;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        HMono m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        out.add_term(std::move(m), ca * cb);
      }
    return out;
  }

  friend bool operator==(const HPoly& a, const HPoly& b) {
    return a.terms == b.terms;
  }
};

inline HPoly h_var(const TVar& v) {
  HPoly p;
  p.add_term({v}, 1);
  return p;
}

struct HRelations {
  std::vector<HPoly> linear;     // T_{-i} - Σ_{i∈α} T_α
  std::vector<HPoly> quadratic;  // vanishing products of incompatible rays
};

/// The presentation relations. The quadratic part is exactly the set of
/// products T_u T_v over incompatible pairs of rays, which the fan module
/// cross-checks against the general toric description.
inline HRelations h_relations(int n) {
  HRelations rels;
  for (int i = 1; i <= n; ++i) {
    HPoly p = h_var(TVar::negative(i));
    for (const Root& a : positive_roots(n))
      if (a.contains(i)) p.add_term({TVar::positive(a)}, -1);
    rels.linear.push_back(std::move(p));
  }
  std::vector<TVar> rays = almost_positive_roots(n);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i; j < rays.size(); ++j)
      if (!compatible(rays[i], rays[j])) {
        HPoly p;
        p.add_term({rays[i], rays[j]}, 1);
        rels.quadratic.push_back(std::move(p));
      }
  return rels;
}

/// Substitute every T_{-i} by Σ_{i∈α} T_α; the result involves only
/// positive-root variables.
inline HPoly eliminate_linear(const HPoly& p, int n) {
  HPoly out;
  for (const auto& [m, c] : p.terms) {
    HPoly term;
    term.add_term({}, c);
    for (const TVar& v : m) {
      HPoly factor;
      if (v.is_negative()) {
        for (const Root& a : positive_roots(n))
          if (a.contains(v.neg)) factor.add_term({TVar::positive(a)}, 1);
      } else {
        factor.add_term({v}, 1);
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

/// The degree-d slice of the quotient after elimination. Monomials whose
/// support contains an incompatible pair lie in the Stanley-Reisner part
/// of the ideal and are dropped outright; the eliminated relations
/// (Σ_{i∈β} T_β)·T_α for i ∈ α contribute the remaining rows.
class HQuotient {
 public:
  HQuotient(int n, int d) : n_(n), d_(d) {
    roots_ = positive_roots(n);
    int m = static_cast<int>(roots_.size());
    compat_.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        compat_[i][j] = compatible(TVar::positive(roots_[i]),
                                   TVar::positive(roots_[j]));
    allowed_ = allowed_monomials(d);
    for (std::size_t i = 0; i < allowed_.size(); ++i)
      index_[allowed_[i]] = static_cast<int>(i);
    if (d >= 2) build_rows();
  }

  int n() const { return n_; }
  int degree() const { return d_; }
  int num_allowed() const { return static_cast<int>(allowed_.size()); }
  const std::vector<HMono>& allowed() const { return allowed_; }

  /// Rank of the whole degree-d ideal slice inside the full monomial space.
  int quotient_rank() const { return num_allowed() - echelon_.rank(); }

  /// Canonical residue of a homogeneous degree-d polynomial over positive
  /// variables, as coordinates in the allowed monomials.
  SparseVec reduce(const HPoly& p) const {
    SparseVec v = project(p);
    return echelon_.reduce(std::move(v));
  }

  bool reduces_to_zero(const HPoly& p) const { return reduce(p).empty(); }

  SparseVec project(const HPoly& p) const {
    std::map<int, Int> acc;
    for (const auto& [m, c] : p.terms) {
      if (static_cast<int>(m.size()) != d_)
        throw std::invalid_argument("HQuotient: wrong degree");
      auto it = index_.find(m);
      if (it == index_.end()) continue;  // Stanley-Reisner monomial
      acc[it->second] += c;
    }
    SparseVec v;
    for (const auto& [col, c] : acc)
      if (c != 0) v.emplace_back(col, Rat(c));
    return v;
  }

  /// Multiply eliminated linear factors together, pruning Stanley-Reisner
  /// monomials after each step. Factors must be degree-1 over positive vars.
  SparseVec reduce_product(const std::vector<HPoly>& factors) const {
    if (static_cast<int>(factors.size()) != d_)
      throw std::invalid_argument("reduce_product: wrong number of factors");
    std::map<HMono, Int> acc;
    acc[{}] = 1;
    for (const HPoly& f : factors) {
      std::map<HMono, Int> next;
      for (const auto& [m, c] : acc) {
        for (const auto& [fm, fc] : f.terms) {
          HMono merged = m;
          merged.push_back(fm.front());
          std::sort(merged.begin(), merged.end());
          if (!support_compatible(merged)) continue;
          next[merged] += c * fc;
        }
      }
      acc = std::move(next);
    }
    HPoly p;
    for (auto& [m, c] : acc) p.add_term(m, c);
    return reduce(p);
  }

 private:
  int root_index(const Root& r) const {
    // positive_roots(n) lists (lo,hi) in lexicographic order
    int before = 0;
    for (int i = 1; i < r.lo; ++i) before += n_ - i + 1;
    return before + (r.hi - r.lo);
  }

  bool support_compatible(const HMono& m) const {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!compat_[root_index(m[i].pos)][root_index(m[j].pos)]) return false;
    return true;
  }

  std::vector<HMono> allowed_monomials(int d) const {
    std::vector<HMono> out;
    HMono cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i < static_cast<int>(roots_.size()); ++i) {
        bool ok = true;
        for (const TVar& v : cur)
          if (!compat_[root_index(v.pos)][i]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(TVar::positive(roots_[i]));
        rec(i, left - 1);  // repeats allowed: T_α^k survives
        cur.pop_back();
      }
    };
    rec(0, d);
    return out;
  }

  void build_rows() {
    // eliminated generators: (Σ_{i∈β} T_β) T_α - Σ ... for i ∈ α, i.e.
    // elim(T_{-i} T_α), one per incidence (i, α)
    std::vector<HPoly> gens;
    for (const Root& a : roots_) {
      for (int i = a.lo; i <= a.hi; ++i) {
        HPoly g;
        g.add_term({TVar::negative(i), TVar::positive(a)}, 1);
        gens.push_back(eliminate_linear(g, n_));
      }
    }
    std::vector<HMono> mults = allowed_monomials(d_ - 2);
    echelon_.ncols = num_allowed();
    for (const HPoly& g : gens) {
      for (const HMono& m : mults) {
        HPoly prod;
        for (const auto& [gm, gc] : g.terms) {
          HMono merged = gm;
          merged.insert(merged.end(), m.begin(), m.end());
          prod.add_term(std::move(merged), gc);
        }
        SparseVec row = project(prod);
        if (!row.empty()) echelon_.insert(std::move(row));
      }
    }
  }

  int n_;
  int d_;
  std::vector<Root> roots_;
  std::vector<std::vector<bool>> compat_;
  std::vector<HMono> allowed_;
  std::map<HMono, int> index_;
  Echelon echelon_;
};

/// The general toric linear relations Σ_u <e_i, w_u> T_u, computed from
/// the actual ray vectors, must reproduce the stated linear relations.
inline bool linear_relations_from_rays(int n) {
  Fan f = build_fan(n);
  HRelations rels = h_relations(n);
  for (int i = 1; i <= n; ++i) {
    HPoly p;
    for (std::size_t u = 0; u < f.rays.size(); ++u) {
      const Int& coord = f.ray_vectors[u][i - 1];
      if (coord != 0) p.add_term({f.rays[u]}, coord);
    }
    // Σ_u <e_i, w_u> T_u = -(T_{-i} - Σ_{i∈α} T_α)
    HPoly expected = rels.linear[i - 1];
    HPoly sum = p;
    sum += expected;
    if (!sum.is_zero()) return false;
  }
  return true;
}

/// The square of T_{-i} reduces to zero in degree 2, for every i.
inline bool negative_squares_vanish(int n) {
  HQuotient q(n, 2);
  for (int i = 1; i <= n; ++i) {
    HPoly p = h_var(TVar::negative(i)) * h_var(TVar::negative(i));
    if (!q.reduces_to_zero(eliminate_linear(p, n))) return false;
  }
  return true;
}

/// Derived relation obtained by eliminating the simple variables from
/// T_i T_{i+1} = 0; built verbatim and checked to lie in the ideal.
inline HPoly derived_relation_adjacent(int i, int n) {
  HPoly p;
  p.add_term({TVar::negative(i), TVar::negative(i + 1)}, 1);
  for (int k = i + 2; k <= n; ++k)
    p.add_term({TVar::negative(i), TVar::positive(Root{i + 1, k})}, -1);
  for (int j = 1; j < i; ++j)
    p.add_term({TVar::positive(Root{j, i}), TVar::negative(i + 1)}, -1);
  for (const Root& a : nonsimple_roots(n)) {
    if (!a.contains(i)) continue;
    for (const Root& b : nonsimple_roots(n)) {
      if (!b.contains(i + 1)) continue;
      if (a.contains(b) || b.contains(a))
        p.add_term({TVar::positive(a), TVar::positive(b)}, 1);
    }
  }
  return p;
}

/// Derived relation T_{-i} T_α = Σ_{i∈β, α⊆β} T_α T_β for i ∉ α with α
/// touching i; returned as lhs - rhs.
inline HPoly derived_relation_endpoint(int i, const Root& a, int n) {
  HPoly p;
  p.add_term({TVar::negative(i), TVar::positive(a)}, 1);
  for (const Root& b : positive_roots(n))
    if (b.contains(i) && b.contains(a))
      p.add_term({TVar::positive(a), TVar::positive(b)}, -1);
  return p;
}

/// Both derived relation families reduce to zero in degree 2.
inline bool derived_relations_vanish(int n) {
  HQuotient q(n, 2);
  for (int i = 1; i < n; ++i)
    if (!q.reduces_to_zero(eliminate_linear(derived_relation_adjacent(i, n), n)))
      return false;
  for (const Root& a : positive_roots(n)) {
    for (int i = 1; i <= n; ++i) {
      if (a.contains(i)) continue;
      if (!a.contains(i + 1) && !a.contains(i - 1)) continue;
      if (!q.reduces_to_zero(eliminate_linear(derived_relation_endpoint(i, a, n), n)))
        return false;
    }
  }
  return true;
}

/// Residue of p (homogeneous of degree d after elimination) modulo the
/// degree-d slice of the ideal.
inline SparseVec degree_component_reduce(const HPoly& p, int n, int d) {
  HQuotient q(n, d);
  return q.reduce(eliminate_linear(p, n));
}

/// rank_d of the quotient for each degree 0..n.
inline std::vector<Int> quotient_ranks(int n) {
  std::vector<Int> out;
  for (int d = 0; d <= n; ++d) {
    HQuotient q(n, d);
    out.push_back(Int(q.quotient_rank()));
  }
  return out;
}

}  // namespace anfan

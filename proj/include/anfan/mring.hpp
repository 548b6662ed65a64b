#pragma once

// The ring M*(n): generators S_i and S_α, the height-decreasing rewrite
// system given by the two defining relation families, normal forms on the
// natural (U-set) basis and products.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "anfan/combinat.hpp"

namespace anfan {

/// Ring generator: S_i when lo == hi (height 1), S_α otherwise (height #α).
struct Gen {
  int lo = 1;
  int hi = 1;

  bool is_simple() const { return lo == hi; }
  int height() const { return hi - lo + 1; }
  Root root() const { return Root{lo, hi}; }

  // canonical order: simples ascending, then roots by (lo, hi)
  friend bool operator<(const Gen& a, const Gen& b) {
    if (a.is_simple() != b.is_simple()) return a.is_simple();
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }
  friend bool operator==(const Gen& a, const Gen& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline Gen gen_simple(int i) { return Gen{i, i}; }
inline Gen gen_root(const Root& r) { return Gen{r.lo, r.hi}; }

inline std::string to_string(const Gen& g) {
  if (g.is_simple()) return "S(" + std::to_string(g.lo) + ")";
  return "S(" + std::to_string(g.lo) + "," + std::to_string(g.hi) + ")";
}

/// Multiset of generators, kept sorted in the canonical order.
struct Monomial {
  std::vector<Gen> gens;

  int degree() const { return static_cast<int>(gens.size()); }
  int height() const {
    int h = 0;
    for (const Gen& g : gens) h += g.height();
    return h;
  }

  void normalize() { std::sort(gens.begin(), gens.end()); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.gens == b.gens;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.gens.begin(), a.gens.end(),
                                        b.gens.begin(), b.gens.end());
  }
};

inline Monomial monomial(std::vector<Gen> gens) {
  Monomial m{std::move(gens)};
  m.normalize();
  return m;
}

inline std::string to_string(const Monomial& m) {
  if (m.gens.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    if (i) s += '*';
    s += to_string(m.gens[i]);
  }
  return s;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (const Gen& g : m.gens) {
      h = (h ^ static_cast<std::size_t>(g.lo * 131 + g.hi)) * 1099511628211ull;
    }
    return h;
  }
};

/// Sparse integer combination of monomials; the ambient representation
/// for elements of M*(n).
struct RingElt {
  int n = 0;
  std::map<Monomial, Int> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  RingElt& operator+=(const RingElt& other) {
    for (const auto& [m, c] : other.terms) add_term(m, c);
    return *this;
  }
  RingElt& operator-=(const RingElt& other) {
    for (const auto& [m, c] : other.terms) add_term(m, -c);
    return *this;
  }
  RingElt& operator*=(const Int& c) {
    if (c == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms) coeff *= c;
    return *this;
  }

  friend bool operator==(const RingElt& a, const RingElt& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

inline RingElt ring_elt(int n, const Monomial& m, Int c = Int(1)) {
  RingElt e;
  e.n = n;
  e.add_term(m, c);
  return e;
}

inline RingElt ring_one(int n) { return ring_elt(n, Monomial{}); }

/// True iff the monomial is squarefree with U-set support.
inline bool is_natural(const Monomial& m, int n) {
  USet u;
  for (const Gen& g : m.gens) {
    if (g.is_simple())
      u.simples.push_back(g.lo);
    else
      u.roots.push_back(g.root());
  }
  u.normalize();
  for (std::size_t i = 1; i < u.simples.size(); ++i)
    if (u.simples[i] == u.simples[i - 1]) return false;
  for (std::size_t i = 1; i < u.roots.size(); ++i)
    if (u.roots[i] == u.roots[i - 1]) return false;
  return uset_valid(u, n);
}

inline Monomial monomial_of_uset(const USet& u) {
  Monomial m;
  for (int i : u.simples) m.gens.push_back(gen_simple(i));
  for (const Root& r : u.roots) m.gens.push_back(gen_root(r));
  m.normalize();
  return m;
}

inline USet uset_of_monomial(const Monomial& m) {
  USet u;
  for (const Gen& g : m.gens) {
    if (g.is_simple())
      u.simples.push_back(g.lo);
    else
      u.roots.push_back(g.root());
  }
  u.normalize();
  return u;
}

/// A pair of generators that can never occur together in a natural
/// monomial: equal simples, a simple inside a root, or roots overlapping
/// in at least two points (equal roots included).
inline bool pair_violates(const Gen& g, const Gen& h) {
  if (g.is_simple() && h.is_simple()) return g.lo == h.lo;
  if (g.is_simple()) return h.root().contains(g.lo);
  if (h.is_simple()) return g.root().contains(h.lo);
  OverlapResult o = overlap(g.root(), h.root());
  return o.overlaps && o.size >= 2;
}

/// Right-hand side of the defining relation rewriting g·h, or nullopt if
/// the pair is admissible. Every output monomial has strictly smaller
/// height than height(g) + height(h).
inline std::optional<RingElt> rewrite_pair(const Gen& g, const Gen& h, int n) {
  if (!pair_violates(g, h)) return std::nullopt;
  RingElt out;
  out.n = n;
  if (g.is_simple() && h.is_simple()) {
    return out;  // S_i^2 = 0
  }
  if (g.is_simple() || h.is_simple()) {
    // S_i S_α = Σ_{j∈α, j≠i} S_i S_j
    int i = g.is_simple() ? g.lo : h.lo;
    Root a = g.is_simple() ? h.root() : g.root();
    for (int j = a.lo; j <= a.hi; ++j) {
      if (j == i) continue;
      out.add_term(monomial({gen_simple(i), gen_simple(j)}), 1);
    }
    return out;
  }
  // orient so that (α.lo, α.hi) ≤lex (β.lo, β.hi)
  Root a = g.root(), b = h.root();
  if (std::pair(b.lo, b.hi) < std::pair(a.lo, a.hi)) std::swap(a, b);
  Root inter{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  for (int i = inter.lo; i <= inter.hi; ++i)
    for (int j = i + 1; j <= inter.hi; ++j)
      out.add_term(monomial({gen_simple(i), gen_simple(j)}), 1);
  // Rα ∩ Lβ = [max(a.lo+1, b.lo), min(a.hi, b.hi-1)]
  int rl_lo = std::max(a.lo + 1, b.lo);
  int rl_hi = std::min(a.hi, b.hi - 1);
  for (int l = rl_lo; l <= rl_hi; ++l) {
    out.add_term(monomial({gen_root(cut_right(a, l)), gen_root(cut_left(l, b))}),
                 1);
    if (l + 1 <= rl_hi)
      out.add_term(
          monomial({gen_root(cut_right(a, l)), gen_root(cut_left(l + 1, b))}),
          -1);
  }
  return out;
}

/// All instances of the two defining relation families of M*(n), as
/// (lhs, rhs) pairs of ring elements.
inline std::vector<std::pair<RingElt, RingElt>> mring_relation_instances(int n) {
  std::vector<std::pair<RingElt, RingElt>> out;
  for (int i = 1; i <= n; ++i) {
    RingElt lhs = ring_elt(n, monomial({gen_simple(i), gen_simple(i)}));
    RingElt rhs;
    rhs.n = n;
    out.emplace_back(lhs, rhs);
  }
  for (const Root& a : nonsimple_roots(n)) {
    for (int i = a.lo; i <= a.hi; ++i) {
      RingElt lhs = ring_elt(n, monomial({gen_simple(i), gen_root(a)}));
      RingElt rhs = *rewrite_pair(gen_simple(i), gen_root(a), n);
      out.emplace_back(lhs, rhs);
    }
  }
  std::vector<Root> roots = nonsimple_roots(n);
  for (const Root& a : roots) {
    for (const Root& b : roots) {
      if (std::pair(b.lo, b.hi) < std::pair(a.lo, a.hi)) continue;
      OverlapResult o = overlap(a, b);
      if (!o.overlaps || o.size < 2) continue;
      RingElt lhs = ring_elt(n, monomial({gen_root(a), gen_root(b)}));
      RingElt rhs = *rewrite_pair(gen_root(a), gen_root(b), n);
      out.emplace_back(lhs, rhs);
    }
  }
  return out;
}

/// Rewrite engine for a fixed n, with a normal-form memo over monomials.
class MRing {
 public:
  explicit MRing(int n) : n_(n) {}

  int n() const { return n_; }

  /// Index of the lexicographically smallest violating pair of positions,
  /// or nullopt if the monomial is natural.
  static std::optional<std::pair<int, int>> find_violation(const Monomial& m) {
    for (std::size_t i = 0; i < m.gens.size(); ++i)
      for (std::size_t j = i + 1; j < m.gens.size(); ++j)
        if (pair_violates(m.gens[i], m.gens[j]))
          return std::pair{static_cast<int>(i), static_cast<int>(j)};
    return std::nullopt;
  }

  const RingElt& normal_form(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    RingElt result;
    result.n = n_;
    auto viol = find_violation(m);
    if (!viol) {
      result.add_term(m, 1);
    } else {
      auto [i, j] = *viol;
      RingElt rhs = *rewrite_pair(m.gens[i], m.gens[j], n_);
      Monomial rest;
      for (std::size_t k = 0; k < m.gens.size(); ++k)
        if (static_cast<int>(k) != i && static_cast<int>(k) != j)
          rest.gens.push_back(m.gens[k]);
      for (const auto& [rm, rc] : rhs.terms) {
        Monomial merged = rest;
        merged.gens.insert(merged.gens.end(), rm.gens.begin(), rm.gens.end());
        merged.normalize();
        RingElt sub = normal_form(merged);  // height strictly decreased
        sub *= rc;
        result += sub;
      }
    }
    auto [pos, ok] = cache_.emplace(m, std::move(result));
    (void)ok;
    return pos->second;
  }

  RingElt normal_form(const RingElt& e) {
    require_same_n(e);
    RingElt out;
    out.n = n_;
    for (const auto& [m, c] : e.terms) {
      RingElt nf = normal_form(m);
      nf *= c;
      out += nf;
    }
    return out;
  }

  RingElt multiply(const RingElt& a, const RingElt& b) {
    require_same_n(a);
    require_same_n(b);
    RingElt out;
    out.n = n_;
    for (const auto& [ma, ca] : a.terms) {
      for (const auto& [mb, cb] : b.terms) {
        Monomial prod = ma;
        prod.gens.insert(prod.gens.end(), mb.gens.begin(), mb.gens.end());
        prod.normalize();
        RingElt nf = normal_form(prod);
        nf *= ca * cb;
        out += nf;
      }
    }
    return out;
  }

  std::vector<Monomial> natural_basis(std::optional<int> degree = std::nullopt) {
    std::vector<Monomial> out;
    for (const USet& u : enumerate_usets(n_, degree))
      out.push_back(monomial_of_uset(u));
    return out;
  }

  /// Normal form with a randomized choice of violating pair at each step;
  /// no memoization. Used only to test strategy independence.
  RingElt normal_form_random(const Monomial& m, std::mt19937& rng) const {
    RingElt pending = ring_elt(n_, m);
    RingElt done;
    done.n = n_;
    while (!pending.terms.empty()) {
      auto it = pending.terms.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(
                           0, pending.terms.size() - 1)(rng));
      Monomial cur = it->first;
      Int coeff = it->second;
      pending.terms.erase(it);
      std::vector<std::pair<int, int>> violations;
      for (std::size_t i = 0; i < cur.gens.size(); ++i)
        for (std::size_t j = i + 1; j < cur.gens.size(); ++j)
          if (pair_violates(cur.gens[i], cur.gens[j]))
            violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
      if (violations.empty()) {
        done.add_term(cur, coeff);
        continue;
      }
      auto [i, j] = violations[std::uniform_int_distribution<std::size_t>(
          0, violations.size() - 1)(rng)];
      RingElt rhs = *rewrite_pair(cur.gens[i], cur.gens[j], n_);
      Monomial rest;
      for (std::size_t k = 0; k < cur.gens.size(); ++k)
        if (static_cast<int>(k) != i && static_cast<int>(k) != j)
          rest.gens.push_back(cur.gens[k]);
      for (const auto& [rm, rc] : rhs.terms) {
        Monomial merged = rest;
        merged.gens.insert(merged.gens.end(), rm.gens.begin(), rm.gens.end());
        merged.normalize();
        pending.add_term(merged, coeff * rc);
      }
    }
    return done;
  }

 private:
  void require_same_n(const RingElt& e) const {
    if (e.n != n_) throw std::invalid_argument("ring size mismatch");
  }

  int n_;
  std::unordered_map<Monomial, RingElt, MonomialHash> cache_;
};

}  // namespace anfan

#pragma once

// Exact Buchberger engine over the S-generators with the height-weighted
// term order. Certifies that the defining relations of M*(n) are already a
// Groebner basis and computes the quotient dimension of the deformed ring.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "anfan/check.hpp"
#include "anfan/combinat.hpp"
#include "anfan/mring.hpp"

namespace anfan {

/// Dense exponent vector over a fixed variable list.
using GMono = std::vector<int>;

/// Weighted order: variables of greater height are dominant. Weighted
/// degree first, then total degree, then reverse lexicographic over the
/// fixed variable list (sorted by (height, lo, hi) descending).
struct TermOrder {
  std::vector<Gen> vars;
  std::vector<int> weights;

  explicit TermOrder(int n) {
    for (int i = 1; i <= n; ++i) vars.push_back(gen_simple(i));
    for (const Root& a : nonsimple_roots(n)) vars.push_back(gen_root(a));
    std::sort(vars.begin(), vars.end(), [](const Gen& a, const Gen& b) {
      if (a.height() != b.height()) return a.height() > b.height();
      if (a.lo != b.lo) return a.lo > b.lo;
      return a.hi > b.hi;
    });
    for (const Gen& g : vars) weights.push_back(g.height());
  }

  int nvars() const { return static_cast<int>(vars.size()); }

  int var_index(const Gen& g) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == g) return i;
    throw std::invalid_argument("unknown variable");
  }

  long weighted_degree(const GMono& m) const {
    long w = 0;
    for (int i = 0; i < nvars(); ++i) w += static_cast<long>(m[i]) * weights[i];
    return w;
  }

  // negative if a < b, zero if equal, positive if a > b
  int compare(const GMono& a, const GMono& b) const {
    long wa = weighted_degree(a), wb = weighted_degree(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    long ta = 0, tb = 0;
    for (int i = 0; i < nvars(); ++i) {
      ta += a[i];
      tb += b[i];
    }
    if (ta != tb) return ta < tb ? -1 : 1;
    for (int i = nvars() - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
};

inline GMono mono_one(const TermOrder& o) { return GMono(o.nvars(), 0); }

inline GMono mono_mul(const GMono& a, const GMono& b) {
  GMono m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += b[i];
  return m;
}

inline bool mono_divides(const GMono& a, const GMono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline GMono mono_div(const GMono& a, const GMono& b) {
  GMono m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] -= b[i];
  return m;
}

inline GMono mono_lcm(const GMono& a, const GMono& b) {
  GMono m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], b[i]);
  return m;
}

inline bool mono_coprime(const GMono& a, const GMono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

/// Polynomial: terms sorted descending in the term order, lead first.
struct GPoly {
  std::vector<std::pair<GMono, Rat>> terms;

  bool is_zero() const { return terms.empty(); }
  const GMono& lead() const {
    if (terms.empty()) throw std::invalid_argument("lead of zero polynomial");
    return terms.front().first;
  }
  const Rat& lead_coeff() const { return terms.front().second; }
};

inline GPoly gpoly_from_map(std::map<GMono, Rat> m, const TermOrder& o) {
  GPoly p;
  for (auto& [mono, c] : m)
    if (c != 0) p.terms.emplace_back(mono, c);
  std::sort(p.terms.begin(), p.terms.end(),
            [&](const auto& a, const auto& b) {
              return o.compare(a.first, b.first) > 0;
            });
  return p;
}

inline GPoly gpoly_add_scaled(const GPoly& a, const GPoly& b, const GMono& m,
                              const Rat& c, const TermOrder& o) {
  // a + c * m * b, merging sorted term lists
  GPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    GMono bm = mono_mul(b.terms[j].first, m);
    if (i == a.terms.size()) {
      Rat coeff = b.terms[j].second * c;
      if (coeff != 0) out.terms.emplace_back(std::move(bm), coeff);
      ++j;
      continue;
    }
    int cmp = o.compare(a.terms[i].first, bm);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      Rat coeff = b.terms[j].second * c;
      if (coeff != 0) out.terms.emplace_back(std::move(bm), coeff);
      ++j;
    } else {
      Rat coeff = a.terms[i].second + b.terms[j].second * c;
      if (coeff != 0) out.terms.emplace_back(a.terms[i].first, coeff);
      ++i;
      ++j;
    }
  }
  return out;
}

/// Scale so coefficients are coprime integers with positive lead.
inline void gpoly_normalize(GPoly& p) {
  if (p.is_zero()) return;
  Int lcm(1), gcd(0);
  for (const auto& [m, c] : p.terms)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [m, c] : p.terms) {
    Rat scaled = c * lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  Rat factor(lcm);
  factor /= gcd;
  if (p.terms.front().second < 0) factor = -factor;
  for (auto& [m, c] : p.terms) {
    c *= factor;
    c.canonicalize();
  }
}

/// Full division: no monomial of the remainder is divisible by any basis
/// lead. Deterministic given the ordering of the basis.
inline GPoly reduce(GPoly p, const std::vector<GPoly>& basis,
                    const TermOrder& o) {
  GPoly remainder;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const GPoly& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lead(), p.lead())) {
        GMono q = mono_div(p.lead(), g.lead());
        Rat c = -p.lead_coeff() / g.lead_coeff();
        p = gpoly_add_scaled(p, g, q, c, o);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return remainder;
}

inline GPoly spoly(const GPoly& f, const GPoly& g, const TermOrder& o) {
  GMono l = mono_lcm(f.lead(), g.lead());
  GPoly s = gpoly_add_scaled(GPoly{}, f, mono_div(l, f.lead()),
                             Rat(1) / f.lead_coeff(), o);
  return gpoly_add_scaled(s, g, mono_div(l, g.lead()),
                          Rat(-1) / g.lead_coeff(), o);
}

struct BuchbergerStats {
  int input_size = 0;
  int basis_size = 0;
  int spairs_processed = 0;
  bool input_was_groebner = true;
};

/// Buchberger with the normal selection strategy (smallest lcm) and the
/// coprime-lead criterion.
inline std::vector<GPoly> buchberger(std::vector<GPoly> basis,
                                     const TermOrder& o,
                                     BuchbergerStats* stats = nullptr) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const GPoly& p) { return p.is_zero(); }),
              basis.end());
  for (GPoly& p : basis) gpoly_normalize(p);
  if (stats) stats->input_size = static_cast<int>(basis.size());

  auto lcm_less = [&](const GMono& a, const GMono& b) {
    return o.compare(a, b) < 0;
  };
  using Pair = std::pair<int, int>;
  std::multimap<GMono, Pair, decltype(lcm_less)> queue(lcm_less);
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      if (mono_coprime(basis[i].lead(), basis[k].lead())) continue;
      queue.emplace(mono_lcm(basis[i].lead(), basis[k].lead()), Pair{i, k});
    }
  };
  for (int k = 1; k < static_cast<int>(basis.size()); ++k) push_pairs(k);

  int original = static_cast<int>(basis.size());
  while (!queue.empty()) {
    auto it = queue.begin();
    auto [i, j] = it->second;
    queue.erase(it);
    GPoly s = reduce(spoly(basis[i], basis[j], o), basis, o);
    if (stats) ++stats->spairs_processed;
    if (s.is_zero()) continue;
    gpoly_normalize(s);
    basis.push_back(std::move(s));
    if (stats && static_cast<int>(basis.size()) > original)
      stats->input_was_groebner = false;
    push_pairs(static_cast<int>(basis.size()) - 1);
  }
  if (stats) stats->basis_size = static_cast<int>(basis.size());
  return basis;
}

/// True iff every S-polynomial of non-coprime leads reduces to zero.
inline bool is_groebner(const std::vector<GPoly>& basis, const TermOrder& o) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (mono_coprime(basis[i].lead(), basis[j].lead())) continue;
      if (!reduce(spoly(basis[i], basis[j], o), basis, o).is_zero())
        return false;
    }
  return true;
}

inline GPoly gpoly_from_ring_elt(const RingElt& e, const TermOrder& o) {
  std::map<GMono, Rat> m;
  for (const auto& [mon, c] : e.terms) {
    GMono g = mono_one(o);
    for (const Gen& v : mon.gens) ++g[o.var_index(v)];
    m[g] += Rat(c);
  }
  return gpoly_from_map(std::move(m), o);
}

/// The defining relations of M*(n) as polynomials (lhs - rhs).
inline std::vector<GPoly> mring_ideal(int n, const TermOrder& o) {
  std::vector<GPoly> out;
  for (const auto& [lhs, rhs] : mring_relation_instances(n)) {
    RingElt diff = lhs;
    diff -= rhs;
    out.push_back(gpoly_from_ring_elt(diff, o));
  }
  return out;
}

/// The deformed ideal: S_i^2 - S_i instead of S_i^2, the rest unchanged.
inline std::vector<GPoly> deformed_ideal(int n, const TermOrder& o) {
  std::vector<GPoly> out;
  for (const auto& [lhs, rhs] : mring_relation_instances(n)) {
    RingElt diff = lhs;
    diff -= rhs;
    const Monomial& lm = lhs.terms.begin()->first;
    if (lm.gens.size() == 2 && lm.gens[0].is_simple() &&
        lm.gens[0] == lm.gens[1]) {
      diff.add_term(monomial({lm.gens[0]}), -1);  // S_i^2 = S_i
    }
    out.push_back(gpoly_from_ring_elt(diff, o));
  }
  return out;
}

/// Number of monomials divisible by no lead of the basis; the vector-space
/// dimension of the quotient, or nullopt when infinite.
inline std::optional<Int> standard_monomial_count(
    const std::vector<GPoly>& gb, const TermOrder& o,
    std::vector<GMono>* collect = nullptr) {
  std::vector<GMono> leads;
  for (const GPoly& g : gb)
    if (!g.is_zero()) leads.push_back(g.lead());
  // bound each exponent below the smallest pure power among the leads
  std::vector<int> bound(o.nvars(), -1);
  for (const GMono& l : leads) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < o.nvars(); ++i) {
      if (l[i] > 0) {
        if (var >= 0) {
          pure = false;
          break;
        }
        var = i;
      }
    }
    if (pure && var >= 0)
      bound[var] = bound[var] < 0 ? l[var] - 1 : std::min(bound[var], l[var] - 1);
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;  // some variable is unbounded

  Int count = 0;
  GMono cur = mono_one(o);
  std::function<void(int)> rec = [&](int var) {
    if (var == o.nvars()) {
      ++count;
      if (collect) collect->push_back(cur);
      return;
    }
    for (int e = 0; e <= bound[var]; ++e) {
      cur[var] = e;
      bool divisible = false;
      for (const GMono& l : leads) {
        bool div = true;
        for (int i = 0; i <= var; ++i)
          if (l[i] > cur[i]) {
            div = false;
            break;
          }
        for (int i = var + 1; i < o.nvars(); ++i)
          if (l[i] > 0) {
            div = false;
            break;
          }
        if (div) {
          divisible = true;
          break;
        }
      }
      if (!divisible) rec(var + 1);
    }
    cur[var] = 0;
  };
  rec(0);
  return count;
}

inline std::optional<Monomial> monomial_from_gmono(const GMono& m,
                                                   const TermOrder& o) {
  Monomial out;
  for (int i = 0; i < o.nvars(); ++i) {
    if (m[i] > 1) return std::nullopt;  // not squarefree
    if (m[i] == 1) out.gens.push_back(o.vars[i]);
  }
  out.normalize();
  return out;
}

struct DeformationReport {
  int n = 0;
  bool input_was_groebner = false;
  BuchbergerStats stats;
  std::optional<Int> dimension;
  bool matches_catalan = false;
};

/// Builds the deformed ideal, runs Buchberger, and compares the quotient
/// dimension with catalan(n+1).
inline DeformationReport deformation_check(int n) {
  DeformationReport rep;
  rep.n = n;
  TermOrder o(n);
  std::vector<GPoly> gb = buchberger(deformed_ideal(n, o), o, &rep.stats);
  rep.input_was_groebner = rep.stats.input_was_groebner;
  rep.dimension = standard_monomial_count(gb, o);
  rep.matches_catalan = rep.dimension && *rep.dimension == catalan(n + 1);
  return rep;
}

}  // namespace anfan

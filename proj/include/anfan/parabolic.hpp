#pragma once

// Parabolic inclusions M*(n1) ⊗ M*(n2) → M*(n1+n2): the embedding by index
// shift, injectivity on natural bases, and the census of basis elements
// unreachable from every split.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "anfan/check.hpp"
#include "anfan/combinat.hpp"
#include "anfan/mring.hpp"

namespace anfan {

struct Split {
  int n1 = 1;
  int n2 = 1;
  int n() const { return n1 + n2; }
};

inline Monomial shift_monomial(const Monomial& m, int offset) {
  Monomial out;
  for (const Gen& g : m.gens)
    out.gens.push_back(Gen{g.lo + offset, g.hi + offset});
  out.normalize();
  return out;
}

/// Ring morphism: first-factor generators keep their indices, second-factor
/// indices shift by n1. The target ring normalizes the products.
inline RingElt embed(MRing& target, const RingElt& x, const RingElt& y,
                     const Split& s) {
  if (x.n != s.n1 || y.n != s.n2 || target.n() != s.n())
    throw std::invalid_argument("embed: size mismatch");
  RingElt out;
  out.n = s.n();
  for (const auto& [mx, cx] : x.terms) {
    for (const auto& [my, cy] : y.terms) {
      Monomial m = mx;
      Monomial shifted = shift_monomial(my, s.n1);
      m.gens.insert(m.gens.end(), shifted.gens.begin(), shifted.gens.end());
      m.normalize();
      RingElt nf = target.normal_form(m);
      nf *= cx * cy;
      out += nf;
    }
  }
  return out;
}

/// A root [i,j] spans cut k iff i ≤ k < j; a basis element is reachable
/// from the split at k iff none of its roots spans k.
inline bool spans_cut(const Root& r, int k) { return r.lo <= k && k < r.hi; }

inline bool reachable(const USet& u, int n) {
  for (int k = 1; k < n; ++k) {
    bool spanned = false;
    for (const Root& r : u.roots)
      if (spans_cut(r, k)) {
        spanned = true;
        break;
      }
    if (!spanned) return true;
  }
  return false;
}

struct Census {
  Int count = 0;
  std::vector<Monomial> witnesses;
};

/// Natural basis elements outside the image of every parabolic inclusion.
inline Census census_unreachable(int n) {
  Census c;
  for (const USet& u : enumerate_usets(n)) {
    if (!reachable(u, n)) {
      c.count += 1;
      c.witnesses.push_back(monomial_of_uset(u));
    }
  }
  return c;
}

/// Cross-check of the combinatorial census against the span definition:
/// the union over splits of the embedded basis monomials.
inline Census census_unreachable_by_span(int n) {
  MRing target(n);
  std::set<Monomial> image;
  for (int n1 = 1; n1 < n; ++n1) {
    Split s{n1, n - n1};
    MRing left(s.n1), right(s.n2);
    for (const Monomial& mu : left.natural_basis()) {
      for (const Monomial& mv : right.natural_basis()) {
        RingElt e = embed(target, ring_elt(s.n1, mu), ring_elt(s.n2, mv), s);
        if (e.terms.size() != 1 || e.terms.begin()->second != 1)
          throw std::logic_error("embedded basis tensor is not a basis monomial");
        image.insert(e.terms.begin()->first);
      }
    }
  }
  Census c;
  for (const Monomial& m : MRing(n).natural_basis()) {
    if (!image.count(m)) {
      c.count += 1;
      c.witnesses.push_back(m);
    }
  }
  return c;
}

/// Distinct basis tensors map to distinct natural basis monomials.
inline CheckReport verify_embed_injective(int n) {
  CheckReport rep;
  MRing target(n);
  for (int n1 = 1; n1 < n; ++n1) {
    Split s{n1, n - n1};
    MRing left(s.n1), right(s.n2);
    std::set<Monomial> seen;
    bool all_natural = true;
    for (const Monomial& mu : left.natural_basis()) {
      for (const Monomial& mv : right.natural_basis()) {
        RingElt e = embed(target, ring_elt(s.n1, mu), ring_elt(s.n2, mv), s);
        if (e.terms.size() != 1 ||
            !is_natural(e.terms.begin()->first, n))
          all_natural = false;
        else
          seen.insert(e.terms.begin()->first);
      }
    }
    Int expected = catalan(s.n1 + 1) * catalan(s.n2 + 1);
    rep.record(all_natural, "split " + std::to_string(n1) + "+" +
                                std::to_string(n - n1) + ": images natural");
    rep.record(Int(static_cast<unsigned long>(seen.size())) == expected,
               "split " + std::to_string(n1) + "+" + std::to_string(n - n1) +
                   ": images distinct");
    rep.record(expected < catalan(n + 1),
               "split " + std::to_string(n1) + "+" + std::to_string(n - n1) +
                   ": not surjective");
  }
  return rep;
}

/// embed respects the ring structure: for generators g, h of one factor,
/// the image of the product equals the product of the images.
inline CheckReport verify_embed_morphism(int n) {
  CheckReport rep;
  MRing target(n);
  for (int n1 = 1; n1 < n; ++n1) {
    Split s{n1, n - n1};
    for (int side = 0; side < 2; ++side) {
      int sz = side == 0 ? s.n1 : s.n2;
      MRing factor(sz);
      std::vector<Gen> gens;
      for (int i = 1; i <= sz; ++i) gens.push_back(gen_simple(i));
      for (const Root& a : nonsimple_roots(sz)) gens.push_back(gen_root(a));
      for (const Gen& g : gens) {
        for (const Gen& h : gens) {
          RingElt prod = factor.multiply(ring_elt(sz, monomial({g})),
                                         ring_elt(sz, monomial({h})));
          RingElt lhs, rhs;
          if (side == 0) {
            lhs = embed(target, prod, ring_one(s.n2), s);
            rhs = target.multiply(
                embed(target, ring_elt(sz, monomial({g})), ring_one(s.n2), s),
                embed(target, ring_elt(sz, monomial({h})), ring_one(s.n2), s));
          } else {
            lhs = embed(target, ring_one(s.n1), prod, s);
            rhs = target.multiply(
                embed(target, ring_one(s.n1), ring_elt(sz, monomial({g})), s),
                embed(target, ring_one(s.n1), ring_elt(sz, monomial({h})), s));
          }
          rep.record(lhs == rhs, "morphism at split " + std::to_string(n1) +
                                     "+" + std::to_string(n - n1));
        }
      }
    }
  }
  return rep;
}

}  // namespace anfan

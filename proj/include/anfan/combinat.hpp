#pragma once

// Roots of type A_n, the compatibility relation, codes over {L,R,LR,V}
// and U-sets, with the bijection between them and Catalan enumeration.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace anfan {

using Int = mpz_class;
using Rat = mpq_class;

/// Positive root of A_n, i.e. an interval [lo,hi] inside [1,n].
struct Root {
  int lo = 1;
  int hi = 1;

  friend auto operator<=>(const Root&, const Root&) = default;

  bool is_simple() const { return lo == hi; }
  int length() const { return hi - lo + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  bool contains(const Root& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

inline std::string to_string(const Root& r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

/// Almost positive root: a positive root or a negative simple -i.
struct AlmostPositive {
  // neg > 0 encodes the negative simple -neg; neg == 0 means `pos` is used.
  int neg = 0;
  Root pos{};

  static AlmostPositive negative(int i) {
    assert(i >= 1);
    AlmostPositive a;
    a.neg = i;
    return a;
  }
  static AlmostPositive positive(Root r) {
    AlmostPositive a;
    a.pos = r;
    return a;
  }

  bool is_negative() const { return neg > 0; }

  friend auto operator<=>(const AlmostPositive&, const AlmostPositive&) =
      default;
};

inline std::string to_string(const AlmostPositive& a) {
  if (a.is_negative()) return "-" + std::to_string(a.neg);
  return to_string(a.pos);
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// Catalan number c_m = C(2m,m)/(m+1).
inline Int catalan(unsigned long m) {
  Int c = binomial(2 * m, m);
  c /= static_cast<unsigned long>(m + 1);
  return c;
}

struct OverlapResult {
  bool overlaps = false;
  int size = 0;      // |a ∩ b| when overlapping
  bool strict = false;  // neither contains the other
};

/// Two roots overlap when a.lo <= b.lo <= a.hi <= b.hi or symmetrically.
/// Strict nesting is not an overlap; shared-endpoint containment is.
inline OverlapResult overlap(const Root& a, const Root& b) {
  OverlapResult res;
  bool ab = a.lo <= b.lo && b.lo <= a.hi && a.hi <= b.hi;
  bool ba = b.lo <= a.lo && a.lo <= b.hi && b.hi <= a.hi;
  if (!ab && !ba) return res;
  res.overlaps = true;
  res.size = std::min(a.hi, b.hi) - std::max(a.lo, b.lo) + 1;
  res.strict = !a.contains(b) && !b.contains(a);
  return res;
}

inline bool adjacent(const Root& a, const Root& b) {
  return a.hi + 1 == b.lo || b.hi + 1 == a.lo;
}

/// The compatibility relation on almost positive roots: symmetric and
/// reflexive; the forbidden pairs are adjacent roots, strictly overlapping
/// roots, and -i against a root containing i.
inline bool compatible(const AlmostPositive& a, const AlmostPositive& b) {
  if (a.is_negative() && b.is_negative()) return true;
  if (a.is_negative()) return !b.pos.contains(a.neg);
  if (b.is_negative()) return !a.pos.contains(b.neg);
  const Root& x = a.pos;
  const Root& y = b.pos;
  if (adjacent(x, y)) return false;
  OverlapResult o = overlap(x, y);
  return !(o.overlaps && o.strict && o.size >= 1);
}

// min α is the left endpoint, max α the right one; Rα and Lα drop them.
struct RootParts {
  int min = 0;
  int max = 0;
  Root right{};  // Rα = α \ {min α}
  Root left{};   // Lα = α \ {max α}
};

inline RootParts root_parts(const Root& a) {
  if (a.is_simple()) throw std::invalid_argument("root_parts: simple root");
  return RootParts{a.lo, a.hi, Root{a.lo + 1, a.hi}, Root{a.lo, a.hi - 1}};
}

/// ℓ/α = [ℓ, α.hi], defined for ℓ in Lα.
inline Root cut_left(int l, const Root& a) {
  if (l < a.lo || l > a.hi - 1)
    throw std::invalid_argument("cut_left: l outside Lα");
  return Root{l, a.hi};
}

/// α/ℓ = [α.lo, ℓ], defined for ℓ in Rα.
inline Root cut_right(const Root& a, int l) {
  if (l < a.lo + 1 || l > a.hi)
    throw std::invalid_argument("cut_right: l outside Rα");
  return Root{a.lo, l};
}

// ---------------------------------------------------------------------------
// Codes and U-sets.

enum class Letter : std::uint8_t { L = 0, LR = 1, R = 2, V = 3 };

inline const char* to_string(Letter l) {
  switch (l) {
    case Letter::L: return "L";
    case Letter::LR: return "LR";
    case Letter::R: return "R";
    case Letter::V: return "V";
  }
  return "?";
}

struct Code {
  std::vector<Letter> letters;

  friend auto operator<=>(const Code&, const Code&) = default;

  int size() const { return static_cast<int>(letters.size()); }

  /// Number of L symbols seen, counting LR.
  int degree() const {
    int d = 0;
    for (Letter l : letters)
      if (l == Letter::L || l == Letter::LR) ++d;
    return d;
  }
};

/// Balance conditions count pure L and pure R only; LR contributes one of
/// each simultaneously and never affects them.
inline bool code_valid(const Code& c) {
  int open = 0;
  for (Letter l : c.letters) {
    if (l == Letter::L) ++open;
    if (l == Letter::R) {
      if (open == 0) return false;
      --open;
    }
  }
  return open == 0;
}

inline std::string to_string(const Code& c) {
  std::string s;
  for (std::size_t i = 0; i < c.letters.size(); ++i) {
    if (i) s += '.';
    s += to_string(c.letters[i]);
  }
  return s;
}

inline std::optional<Code> parse_code(const std::string& s) {
  Code c;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '.') {
      ++i;
      continue;
    }
    if (s.compare(i, 2, "LR") == 0) {
      c.letters.push_back(Letter::LR);
      i += 2;
    } else if (s[i] == 'L') {
      c.letters.push_back(Letter::L);
      ++i;
    } else if (s[i] == 'R') {
      c.letters.push_back(Letter::R);
      ++i;
    } else if (s[i] == 'V') {
      c.letters.push_back(Letter::V);
      ++i;
    } else {
      return std::nullopt;
    }
  }
  if (!code_valid(c)) return std::nullopt;
  return c;
}

/// Swaps LR and V letterwise; an involution mapping degree k to n-k.
inline Code dual_code(const Code& c) {
  Code d = c;
  for (Letter& l : d.letters) {
    if (l == Letter::LR)
      l = Letter::V;
    else if (l == Letter::V)
      l = Letter::LR;
  }
  return d;
}

/// U-set: simples and non-simple roots indexing a natural basis element.
struct USet {
  std::vector<int> simples;  // sorted
  std::vector<Root> roots;   // sorted by (lo,hi), all non-simple

  friend auto operator<=>(const USet&, const USet&) = default;

  int cardinality() const {
    return static_cast<int>(simples.size() + roots.size());
  }

  void normalize() {
    std::sort(simples.begin(), simples.end());
    std::sort(roots.begin(), roots.end());
  }
};

/// Direct check of the two U-set conditions, plus endpoint uniqueness.
inline bool uset_valid(const USet& u, int n) {
  for (int i : u.simples) {
    if (i < 1 || i > n) return false;
    for (const Root& a : u.roots)
      if (a.contains(i)) return false;
  }
  for (std::size_t x = 0; x < u.roots.size(); ++x) {
    const Root& a = u.roots[x];
    if (a.is_simple() || a.lo < 1 || a.hi > n) return false;
    for (std::size_t y = x + 1; y < u.roots.size(); ++y) {
      const Root& b = u.roots[y];
      if (a == b) return false;
      OverlapResult o = overlap(a, b);
      if (o.overlaps && o.size != 1) return false;
      // no two roots share a left endpoint or a right endpoint
      if (a.lo == b.lo || a.hi == b.hi) return false;
    }
  }
  std::vector<int> s = u.simples;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return true;
}

/// Stack decoding, left to right. LR with an empty stack is a simple
/// element; LR with a nonempty stack closes the open root and opens a new
/// one at the same position.
inline USet uset_from_code(const Code& c) {
  USet u;
  std::vector<int> stack;
  for (int pos = 1; pos <= c.size(); ++pos) {
    switch (c.letters[pos - 1]) {
      case Letter::L:
        stack.push_back(pos);
        break;
      case Letter::R:
        u.roots.push_back(Root{stack.back(), pos});
        stack.pop_back();
        break;
      case Letter::LR:
        if (stack.empty()) {
          u.simples.push_back(pos);
        } else {
          u.roots.push_back(Root{stack.back(), pos});
          stack.pop_back();
          stack.push_back(pos);
        }
        break;
      case Letter::V:
        break;
    }
  }
  u.normalize();
  return u;
}

inline Code code_from_uset(const USet& u, int n) {
  if (!uset_valid(u, n)) throw std::invalid_argument("code_from_uset: invalid U-set");
  Code c;
  c.letters.assign(n, Letter::V);
  std::vector<bool> starts(n + 1, false), ends(n + 1, false), simple(n + 1, false);
  for (const Root& a : u.roots) {
    starts[a.lo] = true;
    ends[a.hi] = true;
  }
  for (int i : u.simples) simple[i] = true;
  for (int pos = 1; pos <= n; ++pos) {
    if (simple[pos] || (starts[pos] && ends[pos]))
      c.letters[pos - 1] = Letter::LR;
    else if (starts[pos])
      c.letters[pos - 1] = Letter::L;
    else if (ends[pos])
      c.letters[pos - 1] = Letter::R;
  }
  return c;
}

inline USet dual_uset(const USet& u, int n) {
  return uset_from_code(dual_code(code_from_uset(u, n)));
}

/// All codes of length n in lexicographic order with L < LR < R < V,
/// optionally filtered by degree.
inline void enumerate_codes(int n, const std::function<void(const Code&)>& emit,
                            std::optional<int> degree = std::nullopt) {
  Code c;
  c.letters.reserve(n);
  int deg = 0;
  std::function<void(int, int)> rec = [&](int pos, int open) {
    if (pos == n) {
      if (open == 0 && (!degree || deg == *degree)) emit(c);
      return;
    }
    // remaining positions must be able to close `open` pure L's
    for (Letter l : {Letter::L, Letter::LR, Letter::R, Letter::V}) {
      int nopen = open;
      if (l == Letter::L) ++nopen;
      if (l == Letter::R) {
        if (open == 0) continue;
        --nopen;
      }
      if (nopen > n - pos - 1) continue;
      c.letters.push_back(l);
      if (l == Letter::L || l == Letter::LR) ++deg;
      rec(pos + 1, nopen);
      if (l == Letter::L || l == Letter::LR) --deg;
      c.letters.pop_back();
    }
  };
  rec(0, 0);
}

inline std::vector<Code> all_codes(int n, std::optional<int> degree = std::nullopt) {
  std::vector<Code> out;
  enumerate_codes(n, [&](const Code& c) { out.push_back(c); }, degree);
  return out;
}

/// All U-sets, decoded from codes; count is catalan(n+1).
inline std::vector<USet> enumerate_usets(int n,
                                         std::optional<int> degree = std::nullopt) {
  std::vector<USet> out;
  enumerate_codes(n, [&](const Code& c) { out.push_back(uset_from_code(c)); },
                  degree);
  return out;
}

inline std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(Root{i, j});
  return out;
}

inline std::vector<Root> nonsimple_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Root{i, j});
  return out;
}

inline std::vector<AlmostPositive> almost_positive_roots(int n) {
  std::vector<AlmostPositive> out;
  for (int i = 1; i <= n; ++i) out.push_back(AlmostPositive::negative(i));
  for (const Root& r : positive_roots(n)) out.push_back(AlmostPositive::positive(r));
  return out;
}

}  // namespace anfan

#include <catch_amalgamated.hpp>

#include "anfan/frobenius.hpp"

using namespace anfan;

namespace {

std::vector<std::vector<Int>> dense_matrix(const SparseMatrix& m) {
  std::vector<std::vector<Int>> out(m.rows.size(),
                                    std::vector<Int>(m.ncols, Int(0)));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& [c, v] : m.rows[r]) out[r][c] = Int(v.get_num());
  return out;
}

}  // namespace

TEST_CASE("top class and pairing basics") {
  CHECK(top_class(3) == monomial({gen_simple(1), gen_simple(2), gen_simple(3)}));
  MRing ring(3);
  RingElt top = ring_elt(3, top_class(3));
  CHECK(pairing(ring, top, ring_one(3)) == 1);
  CHECK(pairing(ring, ring_one(3), ring_one(3)) == 0);
  // <S_{1,3}, S_1 S_2 S_3> = 0 by the vanishing lemma
  CHECK(pairing(ring, ring_elt(3, monomial({gen_root(Root{1, 3})})),
                ring_elt(3, monomial({gen_simple(1), gen_simple(2),
                                      gen_simple(3)}))) == 0);
}

TEST_CASE("s_prime") {
  // code of {2} at n=3 is V.LR.V; its dual LR.V.LR decodes to {1, 3}
  CHECK(s_prime(Root{2, 2}, 3) == monomial({gen_simple(1), gen_simple(3)}));
  // code of {[1,2]} at n=2 is L.R, self-dual under LR <-> V
  CHECK(s_prime(Root{1, 2}, 2) == monomial({gen_root(Root{1, 2})}));
  // S'_rho always has degree n-1
  for (int n = 2; n <= 6; ++n)
    for (const Root& r : positive_roots(n))
      CHECK(s_prime(r, n).degree() == n - 1);
}

TEST_CASE("pairing formulas") {
  for (int n = 2; n <= 5; ++n) {
    MRing ring(n);
    CheckReport rep = verify_pairing_proposition(ring);
    INFO(join_failures(rep));
    CHECK(rep.pass);
  }
}

TEST_CASE("cutting lemmas") {
  for (int n = 2; n <= 6; ++n) {
    MRing ring(n);
    CheckReport rep = verify_cutting_lemmas(ring);
    INFO(join_failures(rep));
    CHECK(rep.pass);
  }
}

TEST_CASE("frobenius matrix at n = 2 degree 1") {
  MRing ring(2);
  FrobeniusMatrix fm = frobenius_matrix(ring, 1);
  std::vector<std::vector<Int>> expect{{0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  CHECK(dense_matrix(fm.matrix) == expect);
  CHECK(fm.determinant == 1);
  CHECK(fm.unimodular);
}

TEST_CASE("pairing matrices are unimodular") {
  for (int n = 1; n <= 5; ++n) {
    MRing ring(n);
    for (int k = 0; k <= n; ++k) {
      FrobeniusMatrix fm = frobenius_matrix(ring, k);
      INFO("n=" << n << " k=" << k);
      CHECK(fm.unimodular);
    }
  }
}

TEST_CASE("pairing matrices are transposes across complementary degrees") {
  MRing ring(4);
  for (int k = 0; k <= 4; ++k) {
    auto a = dense_matrix(frobenius_matrix(ring, k).matrix);
    auto b = dense_matrix(frobenius_matrix(ring, 4 - k).matrix);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j)
        CHECK(a[i][j] == b[j][i]);
  }
}

TEST_CASE("dual basis identity") {
  for (int n = 2; n <= 5; ++n) {
    MRing ring(n);
    CheckReport rep = verify_dual_basis(ring);
    INFO(join_failures(rep));
    CHECK(rep.pass);
  }
}

// Acceptance gate: one line per criterion, exit 0 iff all pass.
// All checks are exact; the scales (ranges of n, sample counts) are pinned
// here and match the verification suites.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "anfan/fan.hpp"
#include "anfan/frobenius.hpp"
#include "anfan/groebner.hpp"
#include "anfan/hring.hpp"
#include "anfan/iso.hpp"
#include "anfan/mring.hpp"
#include "anfan/parabolic.hpp"
#include "anfan/parse.hpp"

using namespace anfan;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "pass" : "FAIL", criterion,
              name.c_str(), seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(number, name, ok, secs, detail);
}

bool expect_print(MRing& ring, const std::string& expr,
                  const std::string& golden, std::string& detail) {
  std::string got = print_element(ring.normal_form(parse_element(expr, ring.n())));
  if (got == golden) return true;
  detail += expr + " -> \"" + got + "\" expected \"" + golden + "\"; ";
  return false;
}

}  // namespace

int main() {
  criterion(1, "Catalan counts for codes and U-sets, n = 1..12",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 12; ++n) {
                Int expected = catalan(n + 1);
                auto codes = all_codes(n);
                auto usets = enumerate_usets(n);
                if (Int(static_cast<unsigned long>(codes.size())) != expected ||
                    Int(static_cast<unsigned long>(usets.size())) != expected) {
                  ok = false;
                  detail += "n=" + std::to_string(n) + " mismatch; ";
                }
              }
              if (catalan(13) != 742900) {
                ok = false;
                detail += "catalan(13) != 742900; ";
              }
              return ok;
            });

  criterion(2, "fan smooth, complete, c_{n+1} maximal cones, n <= 7",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 7; ++n) {
                Fan f = build_fan(n);
                bool count = Int(static_cast<unsigned long>(
                                 f.max_cones().size())) == catalan(n + 1);
                FanReport smooth = verify_smooth(f);
                FanReport complete = verify_complete(f);
                if (!count || !smooth.pass || !complete.pass) {
                  ok = false;
                  detail += "n=" + std::to_string(n) + ": " +
                            (count ? "" : "count ") +
                            (smooth.pass ? "" : "smooth ") +
                            (complete.pass ? "" : "complete ") + "; ";
                }
              }
              return ok;
            });

  criterion(3, "Betti = U-set degree counts (n <= 7) = quotient ranks (n <= 5)",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 7; ++n) {
                std::vector<Int> b = betti_numbers(build_fan(n));
                for (int d = 0; d <= n; ++d)
                  if (b[d] != Int(static_cast<unsigned long>(
                                  enumerate_usets(n, d).size()))) {
                    ok = false;
                    detail += "betti n=" + std::to_string(n) +
                              " d=" + std::to_string(d) + "; ";
                  }
              }
              for (int n = 1; n <= 5; ++n) {
                std::vector<Int> ranks = quotient_ranks(n);
                std::vector<Int> b = betti_numbers(build_fan(n));
                if (ranks != b) {
                  ok = false;
                  detail += "ranks n=" + std::to_string(n) + "; ";
                }
              }
              return ok;
            });

  criterion(4, "psi maps every defining relation into the ideal, n <= 7",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 7; ++n) {
                CheckReport rep = verify_psi_morphism(n);
                if (!rep.pass) {
                  ok = false;
                  detail += "n=" + std::to_string(n) + ": " +
                            join_failures(rep) + "; ";
                }
              }
              return ok;
            });

  criterion(5, "psi is an isomorphism (n <= 5) with T preimages (n <= 6)",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 5; ++n) {
                CheckReport rep = verify_iso_small(n);
                if (!rep.pass) {
                  ok = false;
                  detail += "iso n=" + std::to_string(n) + ": " +
                            join_failures(rep) + "; ";
                }
              }
              for (int n = 1; n <= 6; ++n) {
                CheckReport rep = verify_t_in_image(n);
                if (!rep.pass) {
                  ok = false;
                  detail += "preimages n=" + std::to_string(n) + ": " +
                            join_failures(rep) + "; ";
                }
              }
              return ok;
            });

  criterion(6, "rewriting soundness: confluence, filtration, derived relations, n <= 6",
            [](std::string& detail) {
              bool ok = true;
              std::mt19937 rng(20240917);
              for (int n = 1; n <= 6; ++n) {
                MRing ring(n);
                auto basis = ring.natural_basis();
                std::uniform_int_distribution<std::size_t> pick(
                    0, basis.size() - 1);
                for (int trial = 0; trial < 1000; ++trial) {
                  Monomial prod = basis[pick(rng)];
                  const Monomial& other = basis[pick(rng)];
                  prod.gens.insert(prod.gens.end(), other.gens.begin(),
                                   other.gens.end());
                  prod.normalize();
                  if (ring.normal_form_random(prod, rng) !=
                      ring.normal_form(prod)) {
                    ok = false;
                    detail += "confluence n=" + std::to_string(n) + " at " +
                              to_string(prod) + "; ";
                    break;
                  }
                }
                for (const Monomial& a : basis) {
                  for (const Monomial& b : basis) {
                    Monomial prod = a;
                    prod.gens.insert(prod.gens.end(), b.gens.begin(),
                                     b.gens.end());
                    prod.normalize();
                    for (const auto& [m, c] : ring.normal_form(prod).terms) {
                      if (m.height() > a.height() + b.height()) {
                        ok = false;
                        detail += "filtration n=" + std::to_string(n) + "; ";
                      }
                    }
                  }
                }
                if (n >= 2 && !derived_relations_vanish(n)) {
                  ok = false;
                  detail += "derived relations n=" + std::to_string(n) + "; ";
                }
              }
              return ok;
            });

  criterion(7, "Frobenius: formulas (n<=7), lemmas (n<=8), unimodular matrices and dual basis (n<=6)",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 2; n <= 8; ++n) {
                MRing ring(n);
                if (n <= 7) {
                  CheckReport rep = verify_pairing_proposition(ring);
                  if (!rep.pass) {
                    ok = false;
                    detail += "formulas n=" + std::to_string(n) + "; ";
                  }
                }
                CheckReport lemmas = verify_cutting_lemmas(ring);
                if (!lemmas.pass) {
                  ok = false;
                  detail += "lemmas n=" + std::to_string(n) + "; ";
                }
                if (n <= 6) {
                  for (int k = 0; k <= n; ++k) {
                    FrobeniusMatrix fm = frobenius_matrix(ring, k);
                    if (!fm.unimodular) {
                      ok = false;
                      detail += "matrix n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + "; ";
                    }
                  }
                  CheckReport dual = verify_dual_basis(ring);
                  if (!dual.pass) {
                    ok = false;
                    detail += "dual basis n=" + std::to_string(n) + "; ";
                  }
                }
              }
              return ok;
            });

  criterion(8, "defining relations are a Groebner basis with natural standard monomials, n <= 6",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 6; ++n) {
                TermOrder o(n);
                std::vector<GPoly> ideal = mring_ideal(n, o);
                for (GPoly& p : ideal) gpoly_normalize(p);
                if (!is_groebner(ideal, o)) {
                  ok = false;
                  detail += "not GB at n=" + std::to_string(n) + "; ";
                  continue;
                }
                std::vector<GMono> collected;
                auto count = standard_monomial_count(ideal, o, &collected);
                if (!count || *count != catalan(n + 1)) {
                  ok = false;
                  detail += "count n=" + std::to_string(n) + "; ";
                  continue;
                }
                std::set<Monomial> standard;
                for (const GMono& m : collected) {
                  auto mono = monomial_from_gmono(m, o);
                  if (!mono) {
                    ok = false;
                    detail += "non-squarefree standard monomial n=" +
                              std::to_string(n) + "; ";
                    break;
                  }
                  standard.insert(*mono);
                }
                std::set<Monomial> natural;
                for (const Monomial& m : MRing(n).natural_basis())
                  natural.insert(m);
                if (standard != natural) {
                  ok = false;
                  detail += "set mismatch n=" + std::to_string(n) + "; ";
                }
              }
              return ok;
            });

  criterion(9, "deformed quotient dimension equals c_{n+1}, n = 1..6 (429 at n = 6)",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 1; n <= 6; ++n) {
                DeformationReport rep = deformation_check(n);
                if (!rep.matches_catalan) {
                  ok = false;
                  detail += "n=" + std::to_string(n) + " dim " +
                            (rep.dimension ? rep.dimension->get_str()
                                           : std::string("infinite")) +
                            "; ";
                }
                if (n == 6 && rep.dimension && *rep.dimension != 429) {
                  ok = false;
                  detail += "n=6 != 429; ";
                }
              }
              return ok;
            });

  criterion(10, "parabolic: embed injective (n <= 7), census c_{n-1} with S(1,n) witness (n <= 8)",
            [](std::string& detail) {
              bool ok = true;
              for (int n = 2; n <= 7; ++n) {
                CheckReport rep = verify_embed_injective(n);
                if (!rep.pass) {
                  ok = false;
                  detail += "injective n=" + std::to_string(n) + "; ";
                }
              }
              for (int n = 2; n <= 8; ++n) {
                Census c = census_unreachable(n);
                bool witness = false;
                Monomial full = monomial({gen_root(Root{1, n})});
                for (const Monomial& m : c.witnesses)
                  if (m == full) witness = true;
                if (c.count != catalan(n - 1) || !witness) {
                  ok = false;
                  detail += "census n=" + std::to_string(n) + "; ";
                }
              }
              return ok;
            });

  criterion(11, "worked-example goldens, byte-exact", [](std::string& detail) {
    bool ok = true;
    {
      MRing r2(2);
      ok &= expect_print(r2, "S(1,2)^2", "S(1)*S(2)", detail);
      ok &= expect_print(r2, "S(1)^2", "0", detail);
      ok &= expect_print(r2, "S(1,2)*S(1)*S(2)", "0", detail);
    }
    {
      MRing r3(3);
      ok &= expect_print(r3, "S(1,3)*S(1,2)*S(2,3)", "2*S(1)*S(2)*S(3)",
                         detail);
      ok &= expect_print(r3, "S(2)*S(2,3)", "S(2)*S(3)", detail);
      ok &= expect_print(r3, "S(1)*S(1,3)", "S(1)*S(2) + S(1)*S(3)", detail);
      ok &= expect_print(r3, "S(1,3)*S(2,3)", "S(2)*S(3) + S(1,2)*S(2,3)",
                         detail);
    }
    {
      // the length-7 code example, both directions, byte-exact
      const std::string golden = "LR.V.L.LR.V.LR.R";
      auto code = parse_code(golden);
      if (!code || to_string(*code) != golden) {
        ok = false;
        detail += "code print round trip; ";
      } else {
        USet u = uset_from_code(*code);
        USet expect{{1}, {{3, 4}, {4, 6}, {6, 7}}};
        if (u != expect || to_string(code_from_uset(expect, 7)) != golden) {
          ok = false;
          detail += "code example decode/encode; ";
        }
      }
      // V^n <-> (LR)^n duality
      if (to_string(dual_code(*parse_code("V.V.V"))) != "LR.LR.LR") {
        ok = false;
        detail += "dual of V^3; ";
      }
    }
    {
      // compatibility and ray-map goldens
      if (!compatible(AlmostPositive::negative(1), AlmostPositive::negative(2)) ||
          compatible(AlmostPositive::negative(2),
                     AlmostPositive::positive(Root{1, 3})) ||
          compatible(AlmostPositive::positive(Root{1, 1}),
                     AlmostPositive::positive(Root{2, 2}))) {
        ok = false;
        detail += "compatibility goldens; ";
      }
      if (ray_vector(AlmostPositive::negative(1), 2) !=
              RayVector{Int(-1), Int(0)} ||
          ray_vector(AlmostPositive::positive(Root{1, 2}), 2) !=
              RayVector{Int(1), Int(1)}) {
        ok = false;
        detail += "ray vector goldens; ";
      }
    }
    {
      // psi and change-of-basis goldens at n = 2
      HPoly img = psi(gen_root(Root{1, 2}), 2);
      if (img != parse_t_element("T(-1) + T(-2) - T(1,2)", 2)) {
        ok = false;
        detail += "psi(S(1,2)); ";
      }
      if (psi(gen_simple(1), 2) != parse_t_element("T(-1)", 2)) {
        ok = false;
        detail += "psi(S(1)); ";
      }
      auto row = change_of_basis_row(gen_simple(1), 2);
      auto row12 = change_of_basis_row(gen_root(Root{1, 2}), 2);
      if (row != std::map<Root, Int>{{Root{1, 1}, 1}, {Root{1, 2}, 1}} ||
          row12 != std::map<Root, Int>{{Root{1, 1}, 1},
                                       {Root{1, 2}, 1},
                                       {Root{2, 2}, 1}}) {
        ok = false;
        detail += "change of basis goldens; ";
      }
    }
    {
      // pairing and S' goldens
      MRing r2(2);
      if (pairing(r2, parse_element("S(1)", 2), parse_element("S(1)", 2)) != 0 ||
          pairing(r2, parse_element("S(1,2)", 2),
                  parse_element("S(1,2)", 2)) != 1) {
        ok = false;
        detail += "pairing goldens; ";
      }
      if (print_element(ring_elt(2, s_prime(Root{1, 1}, 2))) != "S(2)" ||
          print_element(ring_elt(2, s_prime(Root{1, 2}, 2))) != "S(1,2)") {
        ok = false;
        detail += "S' goldens; ";
      }
      MRing r3(3);
      if (pairing(r3, parse_element("S(2,3)", 3),
                  ring_elt(3, s_prime(Root{1, 3}, 3))) != 1 ||
          pairing(r3, parse_element("S(1,2)", 3),
                  ring_elt(3, s_prime(Root{2, 3}, 3))) != 1) {
        ok = false;
        detail += "fourth formula goldens; ";
      }
    }
    return ok;
  });

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}

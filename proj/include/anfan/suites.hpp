#pragma once

// Named verification suites assembled from the module checks; consumed by
// the CLI `verify` and `report` subcommands.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anfan/check.hpp"
#include "anfan/combinat.hpp"
#include "anfan/fan.hpp"
#include "anfan/frobenius.hpp"
#include "anfan/groebner.hpp"
#include "anfan/hring.hpp"
#include "anfan/iso.hpp"
#include "anfan/mring.hpp"
#include "anfan/parabolic.hpp"
#include "anfan/report.hpp"

namespace anfan {

inline void add_check(VerificationReport& out, const std::string& name,
                      const CheckReport& rep, const Stopwatch& sw) {
  out.add(name, rep.pass, "all " + std::to_string(rep.checked) + " checks",
          rep.pass ? "all pass" : join_failures(rep), sw.elapsed_ms());
}

inline VerificationReport suite_fan(int n) {
  VerificationReport out;
  out.n = n;
  out.suite = "fan";
  Stopwatch total;
  Fan f = build_fan(n);
  out.add("ray count", static_cast<int>(f.rays.size()) == n + n * (n + 1) / 2,
          std::to_string(n + n * (n + 1) / 2), std::to_string(f.rays.size()),
          total.elapsed_ms());
  Int expect = catalan(n + 1);
  Int got(static_cast<unsigned long>(f.max_cones().size()));
  out.add("maximal cone count", got == expect, expect.get_str(), got.get_str());
  {
    Stopwatch sw;
    FanReport smooth = verify_smooth(f);
    out.add("smooth", smooth.pass, "all determinants ±1",
            smooth.pass ? "pass" : smooth.issues.front(), sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    FanReport complete = verify_complete(f);
    out.add("complete", complete.pass, "walls paired, graph connected",
            complete.pass ? "pass" : complete.issues.front(), sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    std::vector<Int> betti = betti_numbers(f);
    bool ok = true;
    std::string bstr, ustr;
    for (int k = 0; k <= n; ++k) {
      Int usets(static_cast<unsigned long>(enumerate_usets(n, k).size()));
      if (betti[k] != usets) ok = false;
      bstr += (k ? "," : "") + betti[k].get_str();
      ustr += (k ? "," : "") + usets.get_str();
    }
    out.add("betti equals U-set degree counts", ok, ustr, bstr, sw.elapsed_ms());
  }
  return out;
}

inline VerificationReport suite_mring(int n, int confluence_samples = 200,
                                      unsigned seed = 2024) {
  VerificationReport out;
  out.n = n;
  out.suite = "mring";
  MRing ring(n);

  {
    Stopwatch sw;
    std::mt19937 rng(seed);
    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(gen_simple(i));
    for (const Root& a : nonsimple_roots(n)) gens.push_back(gen_root(a));
    CheckReport rep;
    std::uniform_int_distribution<int> deg_dist(2, 4);
    std::uniform_int_distribution<std::size_t> gen_dist(0, gens.size() - 1);
    for (int t = 0; t < confluence_samples; ++t) {
      Monomial m;
      int deg = deg_dist(rng);
      for (int k = 0; k < deg; ++k) m.gens.push_back(gens[gen_dist(rng)]);
      m.normalize();
      RingElt a = ring.normal_form_random(m, rng);
      RingElt b = ring.normal_form_random(m, rng);
      RingElt c = ring.normal_form(m);
      rep.record(a == b && b == c, "confluence at " + to_string(m));
    }
    add_check(out, "confluence (random strategies agree)", rep, sw);
  }
  {
    Stopwatch sw;
    CheckReport rep;
    std::vector<Monomial> basis = ring.natural_basis();
    for (const Monomial& u : basis) {
      for (const Monomial& v : basis) {
        Monomial prod = u;
        prod.gens.insert(prod.gens.end(), v.gens.begin(), v.gens.end());
        prod.normalize();
        const RingElt& nf = ring.normal_form(prod);
        bool ok = true;
        for (const auto& [m, c] : nf.terms)
          if (m.height() > prod.height()) ok = false;
        rep.record(ok, "height filtration at " + to_string(prod));
      }
    }
    add_check(out, "height filtration on basis pairs", rep, sw);
  }
  {
    Stopwatch sw;
    std::mt19937 rng(seed + 1);
    CheckReport rep;
    std::vector<Monomial> basis = ring.natural_basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_elt = [&] {
      RingElt e;
      e.n = n;
      for (int t = 0; t < 3; ++t) e.add_term(basis[pick(rng)], coeff(rng));
      return e;
    };
    for (int t = 0; t < 25; ++t) {
      RingElt a = random_elt(), b = random_elt(), c = random_elt();
      rep.record(ring.multiply(a, b) == ring.multiply(b, a), "commutativity");
      rep.record(ring.multiply(ring.multiply(a, b), c) ==
                     ring.multiply(a, ring.multiply(b, c)),
                 "associativity");
    }
    add_check(out, "commutativity/associativity on random triples", rep, sw);
  }
  {
    Stopwatch sw;
    bool ok = derived_relations_vanish(n);
    out.add("derived relations reduce to zero", ok, "residue 0",
            ok ? "residue 0" : "nonzero residue", sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    bool ok = negative_squares_vanish(n);
    out.add("square of T(-i) is zero", ok, "residue 0",
            ok ? "residue 0" : "nonzero residue", sw.elapsed_ms());
  }
  return out;
}

inline VerificationReport suite_iso(int n, int rank_cap = 5) {
  VerificationReport out;
  out.n = n;
  out.suite = "iso";
  {
    Stopwatch sw;
    add_check(out, "psi is a morphism", verify_psi_morphism(n), sw);
  }
  {
    Stopwatch sw;
    add_check(out, "preimages of T variables", verify_t_in_image(n), sw);
  }
  {
    Stopwatch sw;
    add_check(out, "change of basis formulas", verify_change_of_basis(n), sw);
  }
  if (n <= rank_cap) {
    Stopwatch sw;
    add_check(out, "psi is an isomorphism", verify_iso_small(n), sw);
  } else {
    out.add_skipped("psi is an isomorphism");
  }
  return out;
}

inline VerificationReport suite_frobenius(int n, int matrix_cap = 6) {
  VerificationReport out;
  out.n = n;
  out.suite = "frobenius";
  MRing ring(n);
  {
    Stopwatch sw;
    add_check(out, "pairing formulas", verify_pairing_proposition(ring), sw);
  }
  {
    Stopwatch sw;
    add_check(out, "cutting lemmas", verify_cutting_lemmas(ring), sw);
  }
  if (n <= matrix_cap) {
    Stopwatch sw;
    bool all = true;
    std::string dets;
    for (int k = 0; k <= n; ++k) {
      FrobeniusMatrix fm = frobenius_matrix(ring, k);
      if (!fm.unimodular) all = false;
      dets += (k ? "," : "") + fm.determinant.get_str();
    }
    out.add("frobenius matrices unimodular", all, "all ±1", dets,
            sw.elapsed_ms());
  } else {
    out.add_skipped("frobenius matrices unimodular");
  }
  {
    Stopwatch sw;
    add_check(out, "dual basis identity", verify_dual_basis(ring), sw);
  }
  return out;
}

inline VerificationReport suite_groebner(int n) {
  VerificationReport out;
  out.n = n;
  out.suite = "groebner";
  TermOrder o(n);
  std::vector<GPoly> rels = mring_ideal(n, o);
  for (GPoly& p : rels) gpoly_normalize(p);
  {
    Stopwatch sw;
    bool ok = is_groebner(rels, o);
    out.add("relations are a Groebner basis", ok, "all S-polynomials reduce",
            ok ? "pass" : "nonzero S-polynomial remainder", sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    std::vector<GMono> standard;
    std::optional<Int> count = standard_monomial_count(rels, o, &standard);
    Int expect = catalan(n + 1);
    bool count_ok = count && *count == expect;
    out.add("standard monomial count", count_ok, expect.get_str(),
            count ? count->get_str() : "infinite", sw.elapsed_ms());

    std::set<Monomial> standard_set;
    bool squarefree = true;
    for (const GMono& m : standard) {
      auto mono = monomial_from_gmono(m, o);
      if (!mono)
        squarefree = false;
      else
        standard_set.insert(*mono);
    }
    std::set<Monomial> natural_set;
    for (const Monomial& m : MRing(n).natural_basis()) natural_set.insert(m);
    bool equal = squarefree && standard_set == natural_set;
    out.add("standard monomials equal natural monomials", equal,
            "set equality", equal ? "equal" : "mismatch", sw.elapsed_ms());
  }
  return out;
}

inline VerificationReport suite_deformation(int n) {
  VerificationReport out;
  out.n = n;
  out.suite = "deformation";
  Stopwatch sw;
  DeformationReport rep = deformation_check(n);
  Int expect = catalan(n + 1);
  out.add("deformed quotient dimension", rep.matches_catalan, expect.get_str(),
          rep.dimension ? rep.dimension->get_str() : "infinite",
          sw.elapsed_ms());
  out.add("input already a Groebner basis", rep.input_was_groebner, "true",
          rep.input_was_groebner ? "true" : "false", sw.elapsed_ms());
  return out;
}

inline VerificationReport suite_parabolic(int n) {
  VerificationReport out;
  out.n = n;
  out.suite = "parabolic";
  if (n < 2) {
    out.add_skipped("parabolic (needs n >= 2)");
    return out;
  }
  {
    Stopwatch sw;
    add_check(out, "embed is injective on bases", verify_embed_injective(n), sw);
  }
  {
    Stopwatch sw;
    Census c = census_unreachable(n);
    Int expect = catalan(n - 1);
    bool witness = false;
    Monomial top;
    top.gens.push_back(gen_root(Root{1, n}));
    for (const Monomial& w : c.witnesses)
      if (w == top) witness = true;
    out.add("unreachable count", c.count == expect, expect.get_str(),
            c.count.get_str(), sw.elapsed_ms());
    out.add("S(1,n) among witnesses", witness, "present",
            witness ? "present" : "absent", sw.elapsed_ms());
  }
  if (n <= 5) {
    Stopwatch sw;
    Census combinatorial = census_unreachable(n);
    Census spans = census_unreachable_by_span(n);
    out.add("census cross-check against span definition",
            combinatorial.count == spans.count &&
                combinatorial.witnesses == spans.witnesses,
            "agreement", "computed both ways", sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    add_check(out, "embed respects relations", verify_embed_morphism(n), sw);
  }
  return out;
}

inline VerificationReport suite_catalan(int max_n = 12) {
  VerificationReport out;
  out.n = max_n;
  out.suite = "catalan";
  for (int n = 1; n <= max_n; ++n) {
    Stopwatch sw;
    Int expect = catalan(n + 1);
    long codes = 0;
    enumerate_codes(n, [&](const Code&) { ++codes; });
    out.add("codes(" + std::to_string(n) + ")", Int(codes) == expect,
            expect.get_str(), std::to_string(codes), sw.elapsed_ms());
  }
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"fan",      "mring",       "iso",      "frobenius",
          "groebner", "deformation", "parabolic"};
}

inline VerificationReport run_suite(const std::string& name, int n) {
  if (name == "fan") return suite_fan(n);
  if (name == "mring") return suite_mring(n);
  if (name == "iso") return suite_iso(n);
  if (name == "frobenius") return suite_frobenius(n);
  if (name == "groebner") return suite_groebner(n);
  if (name == "deformation") return suite_deformation(n);
  if (name == "parabolic") return suite_parabolic(n);
  if (name == "catalan") return suite_catalan();
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace anfan

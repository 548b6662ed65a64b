// Command-line front end: enumeration, fan export, exact products and
// pairings, and the verification suites with JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anfan/fan.hpp"
#include "anfan/frobenius.hpp"
#include "anfan/parse.hpp"
#include "anfan/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

int max_n_cap() {
  if (const char* env = std::getenv("ANFAN_MAX_N")) return std::atoi(env);
  return 9;
}

nlohmann::json uset_json(const anfan::USet& u) {
  nlohmann::json j = nlohmann::json::array();
  for (int i : u.simples) j.push_back(nlohmann::json::array({i}));
  for (const anfan::Root& r : u.roots)
    j.push_back(nlohmann::json::array({r.lo, r.hi}));
  return j;
}

nlohmann::json fan_json(const anfan::Fan& f) {
  nlohmann::json j;
  j["n"] = f.n;
  j["rays"] = nlohmann::json::array();
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    nlohmann::json ray;
    ray["label"] = anfan::to_string(f.rays[i]);
    nlohmann::json vec = nlohmann::json::array();
    for (const anfan::Int& c : f.ray_vectors[i]) vec.push_back(c.get_si());
    ray["vector"] = vec;
    j["rays"].push_back(ray);
  }
  j["max_cones"] = nlohmann::json::array();
  for (const auto& cone : f.max_cones()) j["max_cones"].push_back(cone);
  return j;
}

int cmd_enumerate(const std::string& what, int n, std::optional<int> degree,
                  const std::string& format) {
  using namespace anfan;
  if (what == "roots") {
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const AlmostPositive& a : almost_positive_roots(n))
        j.push_back(to_string(a));
      std::cout << j.dump() << "\n";
    } else {
      for (const AlmostPositive& a : almost_positive_roots(n))
        std::cout << to_string(a) << "\n";
    }
    return kExitOk;
  }
  if (what == "codes") {
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      enumerate_codes(n, [&](const Code& c) { j.push_back(to_string(c)); },
                      degree);
      std::cout << j.dump() << "\n";
    } else {
      enumerate_codes(
          n, [&](const Code& c) { std::cout << to_string(c) << "\n"; }, degree);
    }
    return kExitOk;
  }
  if (what == "usets") {
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const USet& u : enumerate_usets(n, degree)) j.push_back(uset_json(u));
      std::cout << j.dump() << "\n";
    } else {
      for (const USet& u : enumerate_usets(n, degree)) {
        std::string row;
        for (int i : u.simples) row += std::to_string(i) + " ";
        for (const Root& r : u.roots) row += to_string(r) + " ";
        if (row.empty()) row = "{}";
        std::cout << row << "\n";
      }
    }
    return kExitOk;
  }
  std::cerr << "unknown enumeration target: " << what << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of the toric variety of the unioriented type A quiver fan"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List codes, U-sets or roots");
  std::string enum_what;
  int enum_n = 1;
  std::optional<int> enum_degree;
  std::string enum_format = "table";
  enumerate->add_option("what", enum_what, "codes|usets|roots")->required();
  enumerate->add_option("--n", enum_n, "rank")->required();
  enumerate->add_option("--degree", enum_degree, "filter by degree");
  enumerate->add_option("--format", enum_format, "json|table");

  // fan
  auto* fan_cmd = app.add_subcommand("fan", "Build the fan, verify, export");
  int fan_n = 1;
  bool fan_verify = false;
  std::string fan_export;
  fan_cmd->add_option("--n", fan_n, "rank")->required();
  fan_cmd->add_flag("--verify", fan_verify, "run smoothness/completeness checks");
  fan_cmd->add_option("--export", fan_export, "write fan JSON to path");

  // multiply
  auto* mult = app.add_subcommand("multiply", "Normal form of an expression");
  int mult_n = 1;
  std::string mult_expr, mult_pair;
  mult->add_option("--n", mult_n, "rank")->required();
  mult->add_option("--expr", mult_expr, "S-expression")->required();
  mult->add_option("--pairing-with", mult_pair, "pair the result with this");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  int verify_n = 1;
  std::string verify_suite = "all";
  verify->add_option("--n", verify_n, "rank")->required();
  verify->add_option("--suite", verify_suite,
                     "all|fan|mring|iso|frobenius|groebner|deformation|parabolic");

  // pairing
  auto* pairing_cmd = app.add_subcommand("pairing", "Frobenius pairing matrices");
  int pairing_n = 1;
  std::optional<int> pairing_k;
  pairing_cmd->add_option("--n", pairing_n, "rank")->required();
  pairing_cmd->add_option("--matrix", pairing_k, "export the degree-k matrix");

  // report
  auto* report_cmd = app.add_subcommand("report", "Run all suites, write JSON");
  int report_n = 1;
  std::string report_out;
  report_cmd->add_option("--n", report_n, "rank")->required();
  report_cmd->add_option("--out", report_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) {
      if (enum_n < 1 || enum_n > max_n_cap()) return kExitResourceLimit;
      return cmd_enumerate(enum_what, enum_n, enum_degree, enum_format);
    }
    if (*fan_cmd) {
      if (fan_n < 1 || fan_n > max_n_cap()) return kExitResourceLimit;
      anfan::Fan f = anfan::build_fan(fan_n);
      std::cout << "rays: " << f.rays.size()
                << ", maximal cones: " << f.max_cones().size() << "\n";
      int rc = kExitOk;
      if (fan_verify) {
        anfan::FanReport smooth = anfan::verify_smooth(f);
        anfan::FanReport complete = anfan::verify_complete(f);
        std::cout << "smooth: " << (smooth.pass ? "pass" : "FAIL") << "\n";
        std::cout << "complete: " << (complete.pass ? "pass" : "FAIL") << "\n";
        if (!smooth.pass || !complete.pass) rc = kExitVerificationFailure;
      }
      if (!fan_export.empty()) {
        std::ofstream out(fan_export);
        out << fan_json(f).dump(2) << "\n";
      }
      return rc;
    }
    if (*mult) {
      if (mult_n < 1 || mult_n > max_n_cap()) return kExitResourceLimit;
      anfan::MRing ring(mult_n);
      anfan::RingElt e =
          ring.normal_form(anfan::parse_element(mult_expr, mult_n));
      if (!mult_pair.empty()) {
        anfan::RingElt other =
            ring.normal_form(anfan::parse_element(mult_pair, mult_n));
        std::cout << anfan::pairing(ring, e, other).get_str() << "\n";
      } else {
        std::cout << anfan::print_element(e) << "\n";
      }
      return kExitOk;
    }
    if (*pairing_cmd) {
      if (pairing_n < 1 || pairing_n > max_n_cap()) return kExitResourceLimit;
      anfan::MRing ring(pairing_n);
      int lo = pairing_k ? *pairing_k : 0;
      int hi = pairing_k ? *pairing_k : pairing_n;
      bool all_unimodular = true;
      for (int k = lo; k <= hi; ++k) {
        anfan::FrobeniusMatrix fm = anfan::frobenius_matrix(ring, k);
        if (pairing_k) {
          nlohmann::json rows = nlohmann::json::array();
          int ncols = fm.matrix.ncols;
          for (const anfan::SparseVec& r : fm.matrix.rows) {
            std::vector<std::string> dense(ncols, "0");
            for (const auto& [col, c] : r) dense[col] = c.get_str();
            rows.push_back(dense);
          }
          std::cout << rows.dump() << "\n";
        }
        std::cout << "degree " << k << ": det " << fm.determinant.get_str()
                  << (fm.unimodular ? " (unimodular)" : " (NOT unimodular)")
                  << "\n";
        if (!fm.unimodular) all_unimodular = false;
      }
      return all_unimodular ? kExitOk : kExitVerificationFailure;
    }
    if (*verify || *report_cmd) {
      int n = *verify ? verify_n : report_n;
      if (n < 1 || n > max_n_cap()) return kExitResourceLimit;
      std::vector<std::string> names;
      if (*report_cmd || verify_suite == "all")
        names = anfan::suite_names();
      else
        names = {verify_suite};
      nlohmann::json suites = nlohmann::json::array();
      bool all_pass = true;
      for (const std::string& name : names) {
        anfan::VerificationReport rep = anfan::run_suite(name, n);
        if (!rep.pass()) all_pass = false;
        suites.push_back(rep.to_json(/*include_timings=*/false));
        if (*verify) {
          for (const auto& c : rep.checks)
            std::cout << "[" << c.status << "] " << rep.suite << ": " << c.name
                      << (c.status == "fail"
                              ? " (expected " + c.expected + ", got " + c.actual + ")"
                              : "")
                      << "\n";
        }
      }
      if (*report_cmd) {
        nlohmann::json j;
        j["n"] = n;
        j["status"] = all_pass ? "pass" : "fail";
        j["suites"] = suites;
        std::ofstream out(report_out);
        out << j.dump(2) << "\n";
      }
      return all_pass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const anfan::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

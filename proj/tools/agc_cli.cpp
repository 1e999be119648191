// Command-line front end for affine Grassmann codes.
#include "agc/acceptance.hpp"
#include "agc/affine_code.hpp"
#include "agc/grassmann.hpp"
#include "agc/group_action.hpp"
#include "agc/io.hpp"
#include "agc/qcomb.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Triple {
  unsigned q = 0, l = 0, lp = 0;
};

void add_triple(CLI::App* cmd, Triple& t, bool required = true) {
  auto* q = cmd->add_option("--q", t.q, "field order (prime power)");
  auto* l = cmd->add_option("--l", t.l, "number of rows");
  auto* lp = cmd->add_option("--lp", t.lp, "number of columns (l <= lp)");
  if (required) {
    q->required();
    l->required();
    lp->required();
  }
}

void override_cap(const char* name, std::uint64_t& cap) {
  if (const char* v = std::getenv(name)) {
    try {
      cap = std::stoull(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad value for ") + name);
    }
  }
}

agc::Caps caps_from_env() {
  agc::Caps caps;
  override_cap("AGC_MAX_POINTS", caps.max_points);
  override_cap("AGC_MAX_MESSAGES", caps.max_messages);
  override_cap("AGC_MAX_GL", caps.max_gl_candidates);
  override_cap("AGC_MAX_LISTED", caps.max_listed);
  return caps;
}

int report(const std::vector<agc::CriterionResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    std::cout << agc::format_result(r, false) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Grassmann codes: construction, exhaustive verification and Grassmann comparison"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for exhaustive scans")->check(CLI::Range(1u, 256u));

  Triple t;
  std::string format = "text";
  auto format_check = CLI::IsMember({"text", "json"});

  auto* params = app.add_subcommand("params", "print n, k, d, A_d and group orders");
  add_triple(params, t);
  params->add_option("--format", format)->check(format_check);

  auto* build = app.add_subcommand("build", "export the generator matrix");
  add_triple(build, t);
  std::string out_path;
  build->add_option("--out", out_path, "output file (default: stdout)");
  build->add_option("--format", format)->check(format_check);

  auto* mindist = app.add_subcommand("mindist", "minimum distance by exhaustive scan");
  add_triple(mindist, t);
  bool blind = false;
  mindist->add_flag("--blind", blind, "scan every codeword without stopping at the expected distance");

  auto* weightdist = app.add_subcommand("weightdist", "full weight distribution");
  add_triple(weightdist, t);
  weightdist->add_option("--format", format)->check(format_check);

  auto* minwords = app.add_subcommand("minwords", "minimum-weight census from the orbit parametrization");
  add_triple(minwords, t);
  bool verify = false;
  minwords->add_flag("--verify", verify, "cross-check against the exhaustive weight scan");

  auto* autocheck_cmd = app.add_subcommand("autocheck", "randomized automorphism checks");
  add_triple(autocheck_cmd, t);
  unsigned samples = 50;
  std::uint64_t seed = agc::SuiteOptions{}.seed;
  autocheck_cmd->add_option("--samples", samples);
  autocheck_cmd->add_option("--seed", seed);

  auto* grassmann = app.add_subcommand("grassmann", "Grassmann code parameters and basic-cell comparison");
  int gl = 0, gm = 0;
  unsigned gq = 0;
  grassmann->add_option("--l", gl)->required();
  grassmann->add_option("--m", gm)->required();
  grassmann->add_option("--q", gq)->required();
  bool compare_cell = false;
  grassmann->add_flag("--compare-cell", compare_cell);

  auto* verify_all = app.add_subcommand("verify-all", "acceptance suite, or all checks for one triple");
  add_triple(verify_all, t, false);
  verify_all->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const agc::Caps caps = caps_from_env();
    agc::ScanOptions scan;
    scan.threads = threads;
    scan.max_messages = caps.max_messages;
    auto code_params = [&] { return agc::CodeParams::make(t.q, t.l, t.lp); };

    if (*params) {
      const auto p = code_params();
      std::cout << (format == "json" ? agc::param_table_json(p) : agc::param_table_text(p));
      return kOk;
    }
    if (*build) {
      const auto p = code_params();
      const auto code = agc::build_affine_code(p, caps);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
      }
      std::ostream& os = out_path.empty() ? std::cout : file;
      if (format == "json")
        os << agc::generator_json(p, code);
      else
        agc::write_generator_text(os, p, code);
      return kOk;
    }
    if (*mindist) {
      const auto p = code_params();
      const auto code = agc::build_affine_code(p, caps);
      if (!blind) scan.stop_at_weight = static_cast<std::uint64_t>(agc::min_distance_formula(p));
      std::cout << agc::min_distance(code, scan) << '\n';
      return kOk;
    }
    if (*weightdist) {
      const auto p = code_params();
      const auto dist = agc::weight_distribution(agc::build_affine_code(p, caps), scan);
      if (format == "json") {
        std::cout << "{";
        bool first = true;
        for (std::size_t w = 0; w < dist.size(); ++w)
          if (dist[w]) {
            std::cout << (first ? "" : ",") << "\"" << w << "\":" << dist[w];
            first = false;
          }
        std::cout << "}\n";
      } else {
        for (std::size_t w = 0; w < dist.size(); ++w)
          if (dist[w]) std::cout << w << ' ' << dist[w] << '\n';
      }
      return kOk;
    }
    if (*minwords) {
      const auto p = code_params();
      const auto polys = agc::generate_min_weight_polys(p, caps);
      const auto expected = agc::min_weight_count_formula(p);
      std::cout << "d=" << agc::min_distance_formula(p) << '\n'
                << "generated=" << polys.size() << '\n'
                << "formula=" << expected << '\n';
      bool ok = agc::BigInt(polys.size()) == expected;
      if (verify) {
        const auto code = agc::build_affine_code(p, caps);
        const auto d = static_cast<std::uint64_t>(agc::min_distance_formula(p));
        std::set<std::vector<agc::Elem>> scanned, generated;
        for (const auto& msg : agc::messages_of_weight(code, d, scan)) scanned.insert(code.encode(msg));
        for (const auto& f : polys) generated.insert(agc::ev(f));
        const bool equal = scanned == generated;
        std::cout << "scanned=" << scanned.size() << '\n' << "sets_equal=" << (equal ? "yes" : "no") << '\n';
        ok = ok && equal;
      }
      return ok ? kOk : kVerificationFailed;
    }
    if (*autocheck_cmd) return report({agc::autocheck(code_params(), samples, seed, caps)});
    if (*grassmann) {
      const auto code = agc::build_grassmann_code(gl, gm, gq, caps);
      const auto dist = agc::weight_distribution(code, scan);
      std::size_t d = 1;
      while (d < dist.size() && dist[d] == 0) ++d;
      const unsigned delta = static_cast<unsigned>(gl * (gm - gl));
      std::cout << "n=" << code.length() << '\n'
                << "k=" << code.dimension() << '\n'
                << "d=" << d << '\n'
                << "A_d=" << dist[d] << '\n';
      bool ok = agc::BigInt(d) == agc::big_pow(gq, delta) &&
                agc::BigInt(dist[d]) == agc::BigInt(gq - 1) * agc::gaussian_binomial(gm, gl, gq);
      if (compare_cell) {
        const auto cmp = agc::cell_restriction_compare(gl, gm, gq, caps);
        std::cout << "cell=" << cmp.cell_size << '/' << cmp.total << '\n'
                  << "matched=" << (cmp.matched ? "yes" : "no") << '\n';
        if (cmp.matched) {
          std::cout << "row_map=";
          for (std::size_t r = 0; r < cmp.row_map.size(); ++r)
            std::cout << (r ? "," : "") << (cmp.sign[r] < 0 ? "-" : "+") << cmp.row_map[r];
          std::cout << '\n';
        } else {
          std::cout << "reason=" << cmp.detail << '\n';
        }
        ok = ok && cmp.matched;
      }
      return ok ? kOk : kVerificationFailed;
    }
    if (*verify_all) {
      agc::SuiteOptions options;
      options.threads = threads;
      options.seed = seed;
      const bool any = t.q || t.l || t.lp;
      if (any) return report(agc::verify_params(code_params(), caps, options));
      return report(agc::run_acceptance_suite(options));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const agc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise it with the AGC_MAX_* environment variables)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

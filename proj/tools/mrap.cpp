#include <iostream>

#include "CLI11.hpp"
#include "mrap/scan.hpp"
#include "mrap/oracle.hpp"

namespace {

using namespace mrap;

// "u" or "u,v" in omega-coordinates.
AlgInt parse_coeff(const FieldDesc& F, const std::string& text) {
  auto comma = text.find(',');
  try {
    mpz_class u(text.substr(0, comma));
    mpz_class v = 0;
    if (comma != std::string::npos) {
      if (F.is_rational())
        throw CLI::ValidationError("coefficient", "omega part given over Q: " + text);
      v = mpz_class(text.substr(comma + 1));
    }
    return AlgInt(F, u, v);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("coefficient", "cannot parse \"" + text + "\"");
  }
}

std::string field_banner(const FieldDesc& F) {
  if (F.is_rational()) return "K = Q";
  std::string omega = F.half_omega ? "(1+sqrt(D))/2" : "sqrt(D)";
  return "K = Q(sqrt(" + std::to_string(F.D) + ")), a = " + omega;
}

struct InstanceArgs {
  std::string a = "1", b = "1", c = "1", d = "1";
  long disc = 1;

  void attach(CLI::App* cmd, bool with_d = true) {
    cmd->add_option("--a", a, "coefficient a, as u or u,v");
    cmd->add_option("--b", b, "coefficient b");
    cmd->add_option("--c", c, "coefficient c");
    if (with_d) cmd->add_option("--d", d, "coefficient d");
    cmd->add_option("--disc", disc, "field parameter D (1 for Q)");
  }

  MRInstance instance() const {
    FieldDesc F = disc == 1 ? mk_rational_field() : mk_field(disc);
    return MRInstance{F, parse_coeff(F, a), parse_coeff(F, b),
                      parse_coeff(F, c), parse_coeff(F, d)};
  }
};

void print_triples(const std::vector<APTriple>& triples) {
  for (const auto& t : triples)
    std::cout << t.str() << "  ->  (" << t.x().str() << ", " << t.y().str()
              << ", " << t.z().str() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic-progression solutions of a x^2 + b y^2 + c z^2 = d x y z"};
  app.require_subcommand(1);

  InstanceArgs solve_args;
  auto* cmd_solve = app.add_subcommand("solve", "enumerate all a.p. triples");
  solve_args.attach(cmd_solve);

  InstanceArgs exists_args;
  auto* cmd_exists =
      app.add_subcommand("exists", "nontrivial-solution criterion");
  exists_args.attach(cmd_exists);

  ScanSpec spec;
  std::string fmt = "csv";
  auto* cmd_scan = app.add_subcommand("scan", "scan a (d, D) range");
  cmd_scan->add_option("--a", spec.a);
  cmd_scan->add_option("--b", spec.b);
  cmd_scan->add_option("--c", spec.c);
  cmd_scan->add_option("--d-min", spec.d_min)->required();
  cmd_scan->add_option("--d-max", spec.d_max)->required();
  cmd_scan->add_option("--disc-min", spec.disc_min,
                       "lower field discriminant bound");
  cmd_scan->add_option("--disc-max", spec.disc_max,
                       "upper field discriminant bound");
  cmd_scan->add_option("--D", spec.d_list_explicit,
                       "explicit D values (overrides the disc range)");
  cmd_scan->add_option("--out", spec.out_path, "report file (default stdout)");
  cmd_scan->add_option("--format", fmt)
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_scan->add_option("--cache", spec.cache_path, "resumable journal path");

  auto* cmd_shortlist = app.add_subcommand(
      "shortlist", "imaginary-field (d, D) candidates with AP(K) != AP(Q)");
  long sl_a = 1, sl_b = 1, sl_c = 1;
  bool sl_all = false;
  cmd_shortlist->add_option("--a", sl_a);
  cmd_shortlist->add_option("--b", sl_b);
  cmd_shortlist->add_option("--c", sl_c);
  cmd_shortlist->add_flag("--unfiltered", sl_all,
                          "also print the raw candidate list");

  auto* cmd_verify =
      app.add_subcommand("verify-paper", "regression against the published tables");

  InstanceArgs oracle_args;
  long height = 10;
  auto* cmd_oracle =
      app.add_subcommand("oracle", "independent brute-force enumeration");
  oracle_args.attach(cmd_oracle);
  cmd_oracle->add_option("--height", height, "coordinate box bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_solve) {
      MRInstance inst = solve_args.instance();
      SolutionReport rep = solve_ap(inst);
      std::cout << field_banner(inst.F) << "\n";
      std::cout << "count: " << rep.triples.size()
                << (rep.degenerate_fallback ? "  (degenerate; bounded search)"
                                            : "")
                << "\n";
      print_triples(rep.triples);
      return 0;
    }
    if (*cmd_exists) {
      MRInstance inst = exists_args.instance();
      NontrivialCheck check = has_nontrivial(inst);
      std::cout << field_banner(inst.F) << "\n";
      std::cout << "nontrivial: " << (check.nontrivial ? "yes" : "no")
                << "  clause-a: " << (check.clause_a ? "yes" : "no")
                << "  clause-b: " << (check.clause_b ? "yes" : "no") << "\n";
      return check.clauses_match_output ? 0 : 1;
    }
    if (*cmd_scan) {
      spec.format = fmt == "json" ? ReportFormat::JSON : ReportFormat::CSV;
      ScanResult result = scan(spec);
      if (spec.out_path.empty()) write_report(result, spec, std::cout);
      std::cerr << "rows: " << result.rows.size()
                << "  cache hits: " << result.cache_hits << "\n";
      return 0;
    }
    if (*cmd_shortlist) {
      ShortlistResult result = imaginary_shortlist(sl_a, sl_b, sl_c);
      if (sl_all) {
        std::cout << "candidates:\n";
        for (const auto& [d, D] : result.candidates)
          std::cout << "  d=" << d << " D=" << D << "\n";
      }
      std::cout << "filtered:\n";
      for (const auto& [d, D] : result.filtered)
        std::cout << "  d=" << d << " D=" << D << "\n";
      return 0;
    }
    if (*cmd_verify) {
      VerifyReport rep = verify_paper();
      for (const auto& line : rep.lines) std::cout << line << "\n";
      std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
      return rep.pass ? 0 : 1;
    }
    if (*cmd_oracle) {
      MRInstance inst = oracle_args.instance();
      auto triples = brute_force_ap(inst, HeightBound{height});
      std::cout << field_banner(inst.F) << "\n";
      std::cout << "count (height <= " << height << "): " << triples.size()
                << "\n";
      print_triples(triples);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

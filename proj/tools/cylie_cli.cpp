// Command-line driver: runs the check registry and exposes the individual
// constructions as JSON-in / JSON-out subcommands.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cylie/borcea.hpp"
#include "cylie/checks.hpp"
#include "cylie/gx_family.hpp"

using namespace cylie;

namespace {

int cmd_verify(const std::string& selector, const std::string& format, uint64_t seed,
               const std::string& out_file) {
  auto results = run_checks(selector, seed);
  std::string payload = format == "json" ? report_to_json(results, seed).dump(2) + "\n"
                                         : report_to_text(results);
  if (out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_file);
    out << payload;
  }
  return all_passed(results) ? 0 : 1;
}

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the symplectic rank-4 Hodge-group computations"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------
  std::string selector = "all", format = "text", out_file;
  uint64_t seed = 12345;
  auto* verify = app.add_subcommand("verify", "run registered checks (all or an id prefix)");
  verify->add_option("selector", selector, "all or an id prefix such as gx.");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for the randomized property suites");
  verify->add_option("--out", out_file, "write the report to a file instead of stdout");

  // gx ----------------------------------------------------------------
  auto* gx = app.add_subcommand("gx", "the 3-dimensional exotic subalgebra family");
  gx->require_subcommand(1);
  auto* gx_derive = gx->add_subcommand("derive", "derive the closure constraints symbolically");
  std::string x_json = "{\"c\":[\"0\",\"0\",\"2/3\",\"0\"]}";  // 2/sqrt(3) = (2/3) s
  auto* gx_inst = gx->add_subcommand("instantiate", "instantiate at a tower value of x");
  gx_inst->add_option("--x", x_json, "tower element as {\"c\": [4 rational strings]}");
  auto* gx_nil = gx->add_subcommand("nilpotent-check", "certify the absence of square-zero elements");

  // borcea --------------------------------------------------------------
  auto* borcea = app.add_subcommand("borcea", "triple-elliptic monodromy computations");
  borcea->require_subcommand(1);
  std::string r_str = "1", s_str = "1", t_str = "1";
  auto* bn = borcea->add_subcommand("nilpotent", "the 8x8 monodromy logarithm N_{r,s,t}");
  bn->add_option("--r", r_str, "coefficient r as p/q");
  bn->add_option("--s", s_str, "coefficient s as p/q");
  bn->add_option("--t", t_str, "coefficient t as p/q");
  auto* bm = borcea->add_subcommand("max-unipotent", "N^3 != 0 and N^4 = 0 test");
  bm->add_option("--r", r_str, "coefficient r as p/q");
  bm->add_option("--s", s_str, "coefficient s as p/q");
  bm->add_option("--t", t_str, "coefficient t as p/q");

  // sym3 ----------------------------------------------------------------
  auto* sym3 = app.add_subcommand("sym3", "the symmetric-cube representation");
  sym3->require_subcommand(1);
  std::string mat_json;
  auto* s3_of = sym3->add_subcommand("of", "sym3 matrix of a 2x2 matrix");
  s3_of->add_option("matrix", mat_json, "2x2 matrix as JSON")->required();
  auto* s3_id = sym3->add_subcommand("identities", "verify the symbolic cube identities");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(selector, format, seed, out_file);

    if (*gx_derive) {
      ConstraintSet cs = derive_constraints();
      json out = json::array();
      for (const auto& p : cs.polys) out.push_back(poly_to_json(p));
      std::cout << json{{"constraints", out}}.dump(2) << "\n";
      return 0;
    }
    if (*gx_inst) {
      Scalar x = scalar_from_json(json::parse(x_json));
      Subalgebra g = gx_instantiate(x.promote(Ring::Tower).as_tower(), HodgeFrame::canonical());
      std::cout << subalgebra_to_json(g).dump(2) << "\n";
      return 0;
    }
    if (*gx_nil) {
      Subalgebra g = gx_instantiate(Tower(Rational(2)) * Tower::sqrt3().inv(), HodgeFrame::canonical());
      bool ok = nilpotent_square_check(g);
      std::cout << json{{"no_square_zero", ok}}.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*bn) {
      Mat n = borcea_nilpotent(parse_rational(r_str), parse_rational(s_str), parse_rational(t_str));
      std::cout << mat_to_json(n).dump(2) << "\n";
      return 0;
    }
    if (*bm) {
      Mat n = borcea_nilpotent(parse_rational(r_str), parse_rational(s_str), parse_rational(t_str));
      bool ok = max_unipotent_check(n);
      std::cout << json{{"max_unipotent", ok}}.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*s3_of) {
      Mat m = mat_from_json(json::parse(mat_json));
      std::cout << mat_to_json(sym3_matrix(m)).dump(2) << "\n";
      return 0;
    }
    if (*s3_id) {
      Sym3Identities res = sym3_polynomial_identities();
      json out = json::array();
      for (const auto& [name, holds] : res.identities)
        out.push_back(json{{"name", name}, {"holds", holds}});
      std::cout << json{{"identities", out}, {"all_hold", res.all_hold}}.dump(2) << "\n";
      return res.all_hold ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

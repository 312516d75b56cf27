#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fixlat/catalog.hpp"
#include "fixlat/io.hpp"
#include "fixlat/verify.hpp"

using namespace fixlat;

namespace {

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw InvalidParameter("--n expects a..b or a single integer, got '" + s + "'");
  }
  if (r.lo < 1 || r.hi < r.lo) throw InvalidParameter("--n range must satisfy 1 <= a <= b");
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidParameter("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidParameter("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json profile_to_json(const GenerationProfile& p) {
  return {{"generated_at", p.generated_at}, {"strict_at", p.strict_at}, {"is_essential", p.is_essential}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point subspace arrangements of finite linear groups"};
  app.require_subcommand(1);

  ToleranceProfile tol;
  double eq_tol = 0, hash_grid = 0;
  int cap = kDefaultCap;
  auto tol_flags = [&](CLI::App* sub) {
    sub->add_option("--eq-tol", eq_tol, "equality tolerance (default 1e-9 or FIXLAT_TOL)");
    sub->add_option("--hash-grid", hash_grid, "quantization grid (default 1e-6)");
    sub->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);
  };

  auto* cat = app.add_subcommand("catalog", "list the group name grammar");
  bool cat_json = false;
  std::string cat_filter;
  cat->add_flag("--json", cat_json, "machine-readable output");
  cat->add_option("--filter", cat_filter, "only strict-codim-2 forms")->check(CLI::IsMember({"strict-codim-2"}));

  auto* an = app.add_subcommand("analyze", "build a group and compute its arrangement, quotient and cohomology");
  std::string spec, input, dot, qdot, out, check;
  bool an_json = false, parallel = false;
  an->add_option("spec", spec, "group name, e.g. D3:5 or J(mu3:3)");
  an->add_option("--input", input, "group JSON file");
  an->add_flag("--json", an_json, "print JSON to stdout");
  an->add_option("--dot", dot, "write the lattice Hasse diagram");
  an->add_option("--quotient-dot", qdot, "write the quotient Hasse diagram");
  an->add_option("--out", out, "write JSON to a file");
  an->add_option("--check", check, "evaluate a cohomology theorem")->check(CLI::IsMember({"gl3", "dim4"}));
  an->add_flag("--parallel", parallel, "compute interval homology concurrently");
  tol_flags(an);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite, range;
  ver->add_option("suite", suite, "table1, figures, theorems or cohomology")
      ->required()
      ->check(CLI::IsMember({"table1", "figures", "theorems", "cohomology"}));
  ver->add_option("--n", range, "parameter range a..b");
  tol_flags(ver);

  auto* grp = app.add_subcommand("group", "export a group as JSON");
  std::string gspec, gout;
  grp->add_option("spec", gspec, "group name")->required();
  grp->add_option("--out", gout, "output file (default stdout)");
  tol_flags(grp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    tol = ToleranceProfile::from_env();
    if (eq_tol > 0) {
      tol.eq_tol = eq_tol;
      tol.rank_tol = std::min(tol.rank_tol, eq_tol);
    }
    if (hash_grid > 0) tol.hash_grid = hash_grid;
    tol.validate();

    if (*cat) {
      json list = json::array();
      for (const auto& e : catalog_entries()) {
        if (!cat_filter.empty() && !e.strict_codim_two) continue;
        list.push_back({{"form", e.form}, {"params", e.params}, {"description", e.description},
                        {"strict_codim_two", e.strict_codim_two}});
        if (!cat_json) {
          std::cout << e.form;
          if (!e.params.empty()) std::cout << "  [" << e.params << "]";
          std::cout << "  " << e.description << "\n";
        }
      }
      if (cat_json) std::cout << list.dump(2) << "\n";
      return 0;
    }

    if (*grp) {
      auto G = build(gspec, cap, tol);
      std::string text = group_to_json(G).dump(2) + "\n";
      if (gout.empty())
        std::cout << text;
      else
        write_file(gout, text);
      return 0;
    }

    if (*an) {
      if (spec.empty() == input.empty()) throw InvalidParameter("analyze needs exactly one of <spec> or --input");
      FiniteLinearGroup G = input.empty() ? build(spec, cap, tol) : group_from_json(json::parse(read_file(input)), cap, tol);
      std::string name = G.name();
      G = orthogonalize(G);
      G.set_name(name);
      auto prof = generation_profile(G);
      auto A = build_arrangement(G);
      auto L = intersection_lattice(A);
      auto Q = orbit_poset(G, A);
      auto h = gm_cohomology(L, G.dim(), parallel);
      json j;
      j["arrangement"] = arrangement_to_json(A);
      j["profile"] = profile_to_json(prof);
      j["quotient"] = quotient_to_json(A, Q);
      j["cohomology"] = cohomology_to_json(h, stats(A), {});
      bool pass = true;
      if (check == "gl3" || check == "dim4") {
        auto rep = check == "gl3" ? check_gl3(G) : check_dim4(G);
        j["check"] = report_to_json(rep);
        pass = rep.all_pass();
      }
      if (!dot.empty()) write_file(dot, lattice_dot(A));
      if (!qdot.empty()) write_file(qdot, quotient_dot(A, Q));
      if (!out.empty()) write_file(out, j.dump(2) + "\n");
      if (an_json) {
        std::cout << j.dump(2) << "\n";
      } else if (out.empty()) {
        std::cout << "group " << (G.name().empty() ? "(input)" : G.name()) << ", order " << G.order() << ", dim "
                  << G.dim() << "\n";
        std::cout << "generated in codim " << prof.generated_at << ", strictly in {";
        bool first = true;
        for (int k : prof.strict_at) std::cout << (first ? "" : ",") << k, first = false;
        std::cout << "}, essential " << (prof.is_essential ? "yes" : "no") << "\n";
        std::cout << "flats:";
        for (const auto& [c, ids] : A.by_codim) std::cout << " " << ids.size() << " of codim " << c << ";";
        std::cout << "\nquotient: " << Q.orbits.size() << " orbits\n";
        std::cout << "cohomology:";
        for (auto v : h.h) std::cout << " " << v;
        std::cout << "\n";
        if (j.contains("check")) std::cout << j["check"].dump(2) << "\n";
      }
      return pass ? 0 : 1;
    }

    if (*ver) {
      VerifyOptions opt;
      opt.tol = tol;
      Range r = suite == "table1" ? Range{2, 7} : Range{3, 6};
      if (!range.empty()) r = parse_range(range);
      opt.n_lo = r.lo;
      opt.n_hi = r.hi;
      VerificationReport rep = suite == "table1"    ? verify_classification(opt)
                               : suite == "figures" ? verify_figures(opt)
                               : suite == "theorems" ? verify_theorems(opt)
                                                     : verify_cohomology(opt);
      rep.print(std::cout);
      if (rep.numeric_errors) return 3;
      return rep.ok() ? 0 : 1;
    }
  } catch (const NumericError& e) {
    std::cerr << "numeric certification failed: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// gcliff: computations and checks for the generic Clifford algebra of a binary cubic.

#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using gcliff::cli::json;
using gcliff::cli::Outcome;
using gcliff::cli::RunConfig;

namespace {

void render_human(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_list = [](const json& a) {
    return std::ranges::all_of(a, [](const json& e) { return !e.is_object() && !(e.is_array() && !e.empty() && e[0].is_object()); });
  };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_human(v, out, indent + 2);
    } else if (v.is_array() && !scalar_list(v)) {
      out << pad << key << ":\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        render_human(e, out, indent + 4);
      }
    } else {
      out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

int emit(const RunConfig& cfg, const std::string& command, const Outcome& o) {
  auto doc = gcliff::report::envelope(command, {{"kind", "prime"}, {"modulus", cfg.prime}}, o.result);
  doc["seed"] = cfg.seed;
  doc["passed"] = o.ok;
  if (cfg.output == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << command << " over F_" << cfg.prime << "\n";
    render_human(o.result, std::cout, 2);
    std::cout << (o.ok ? "ok" : "FAILED") << "\n";
  }
  return o.ok ? 0 : 1;
}

Outcome verify_all(const RunConfig& cfg) {
  gcliff::acceptance::SuiteConfig suite;
  suite.prime = cfg.prime;
  suite.seed = cfg.seed;
  suite.degree_bound = cfg.graded_bound();
  json criteria = json::array();
  bool all = true;
  for (const auto& run : gcliff::acceptance::criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run(suite);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "criterion " << r.id << (r.passed ? " passed" : " FAILED") << " in " << ms << " ms\n";
    all = all && r.passed;
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }

  namespace c = gcliff::cli;
  json subcommands = json::object();
  auto record = [&](const std::string& name, const Outcome& o) {
    subcommands[name] = {{"passed", o.ok}, {"result", o.result}};
    all = all && o.ok;
  };
  record("hilbert", c::hilbert(cfg, 4));
  record("nf", c::nf(cfg, "yxxx"));
  record("center-check", c::center_check(cfg));
  record("relation-check", c::relation_check(cfg));
  record("singular-check", c::singular_check(cfg, "1,1,1,1,0,0"));
  record("quotient", c::quotient(cfg, "1,1,1,1,0,0", ""));
  record("irreps", c::irreps(cfg, "1,1,1,1,0,0"));
  record("search-dim2", c::search_dim2(cfg));
  record("point-module", c::point_module(cfg, "1:0,0:1,1:1"));
  record("disc-locus", c::disc_locus(cfg, 5, 5));
  return {{{"criteria", criteria}, {"subcommands", subcommands}, {"all_passed", all}}, all};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the generic Clifford algebra of a binary cubic form"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  unsigned degree_bound = 0;
  app.add_option("--prime,-p", cfg.prime, "prime modulus, p = 1 mod 3")->envname("GCLIFF_PRIME")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->envname("GCLIFF_SEED")->capture_default_str();
  app.add_option("--degree-bound", degree_bound, "completion degree bound (default 13, or 16 for quotients)")
      ->envname("GCLIFF_DEGREE_BOUND");
  app.add_option("--output,-o", cfg.output, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->envname("GCLIFF_OUTPUT")
      ->capture_default_str();

  std::string name;
  auto sub = [&](const std::string& n, const std::string& help) {
    auto* s = app.add_subcommand(n, help);
    s->callback([&, n] { name = n; });
    return s;
  };

  unsigned max_degree = 13;
  auto* hilbert = sub("hilbert", "graded dimensions against the closed-form Hilbert series");
  hilbert->add_option("--max-degree", max_degree)->capture_default_str();

  std::string poly;
  sub("nf", "normal form of a noncommutative polynomial")->add_option("--poly", poly)->required();
  sub("center-check", "centrality of z0..z5");
  sub("relation-check", "z4^2 = z5^3 - 27 Delta in C");

  std::string point;
  sub("singular-check", "partials of Delta and singular-locus membership")
      ->add_option("--point", point, "a,b,c,d[,e,f]")
      ->required();

  std::string dump;
  auto* quotient = sub("quotient", "the finite-dimensional algebra C/mC");
  quotient->add_option("--point", point, "a,b,c,d,e,f")->required();
  quotient->add_option("--dump", dump, "write structure constants to FILE");

  sub("irreps", "Wedderburn blocks and irreducible representations of C/mC")
      ->add_option("--point", point, "a,b,c,d,e,f")
      ->required();
  sub("search-dim2", "exhaustive search for 2-dimensional irreducible representations");

  std::string triple;
  sub("point-module", "point module data for a triple in P^1 x P^1 x P^1")
      ->add_option("--triple", triple, "x0:y0,x1:y1,x2:y2")
      ->required();

  std::size_t ell = 4, samples = 10;
  auto* disc = sub("disc-locus", "discriminant-ideal zero sets over a stratified sample");
  disc->add_option("--ell", ell)->capture_default_str();
  disc->add_option("--samples", samples, "points per stratum")->capture_default_str();

  sub("verify-all", "run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (degree_bound) cfg.degree_bound = degree_bound;

  namespace c = gcliff::cli;
  try {
    Outcome o;
    if (name == "hilbert") o = c::hilbert(cfg, max_degree);
    else if (name == "nf") o = c::nf(cfg, poly);
    else if (name == "center-check") o = c::center_check(cfg);
    else if (name == "relation-check") o = c::relation_check(cfg);
    else if (name == "singular-check") o = c::singular_check(cfg, point);
    else if (name == "quotient") o = c::quotient(cfg, point, dump);
    else if (name == "irreps") o = c::irreps(cfg, point);
    else if (name == "search-dim2") o = c::search_dim2(cfg);
    else if (name == "point-module") o = c::point_module(cfg, triple);
    else if (name == "disc-locus") o = c::disc_locus(cfg, ell, samples);
    else if (name == "verify-all") o = verify_all(cfg);
    return emit(cfg, name, o);
  } catch (const c::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcliff::NotPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcliff::CharTwoOrThree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcliff::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcliff::ZeroPoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcliff::AlgebraError& e) {
    json failure{{"schema", gcliff::report::kSchemaVersion}, {"command", name}, {"passed", false},
                 {"error", e.what()}};
    std::cout << failure.dump(2) << "\n";
    return 1;
  }
}

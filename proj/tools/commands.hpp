#pragma once

// One function per subcommand. Each returns the JSON result and whether the
// verification it performs (if any) passed.

#include "gcliff/acceptance.hpp"
#include "gcliff/center.hpp"
#include "gcliff/commgeo.hpp"
#include "gcliff/disc.hpp"
#include "gcliff/findim.hpp"
#include "gcliff/pointmod.hpp"
#include "gcliff/report.hpp"
#include "gcliff/repthy.hpp"
#include "gcliff/rewrite.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcliff::cli {

using report::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t prime = 13;
  std::uint64_t seed = 0;
  std::optional<unsigned> degree_bound;
  std::string output = "human";

  unsigned graded_bound() const { return degree_bound.value_or(13); }
  unsigned quotient_bound() const { return degree_bound.value_or(kQuotientDegreeBound); }
};

struct Outcome {
  json result;
  bool ok = true;
};

inline PrimeField field_of(const RunConfig& cfg) {
  PrimeField k(cfg.prime);
  if (!k.has_omega()) throw UsageError(k.name() + " has no primitive cube root of unity (need p = 1 mod 3)");
  return k;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

/// "a,b,c,d" or "a,b,c,d,e,f"; missing e, f read as 0.
inline CentralPoint<PrimeField> parse_point(const PrimeField& k, std::string_view text, bool require_six) {
  auto parts = split(text, ',');
  if (parts.size() != 6 && (require_six || parts.size() != 4))
    throw UsageError("expected " + std::string(require_six ? "6" : "4 or 6") + " comma-separated coordinates");
  std::vector<Residue> v;
  for (auto p : parts) v.push_back(k.parse(p));
  while (v.size() < 6) v.push_back(k.zero());
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

inline PointTriple<PrimeField> parse_triple(const PrimeField& k, std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("expected three points x:y separated by commas");
  std::vector<ProjPoint<PrimeField>> pts;
  for (auto p : parts) {
    auto xy = split(p, ':');
    if (xy.size() != 2) throw UsageError("point '" + std::string(p) + "' is not of the form x:y");
    pts.emplace_back(k, k.parse(xy[0]), k.parse(xy[1]));
  }
  return {pts[0], pts[1], pts[2]};
}

inline json proj_json(const ProjPoint<PrimeField>& p) { return json::array({p.x().value, p.y().value}); }

inline RewriteSystem<PrimeField> graded_system(const PrimeField& k, const RunConfig& cfg) {
  return acceptance::clifford_system(k, cfg.graded_bound());
}

inline Outcome hilbert(const RunConfig& cfg, unsigned max_degree) {
  auto k = field_of(cfg);
  auto sys = graded_system(k, cfg);
  json rows = json::array();
  bool all = true;
  for (unsigned n = 0; n <= max_degree; ++n) {
    auto d = graded_dimension(sys, n);
    auto o = hilbert_oracle(n);
    all = all && d == o;
    rows.push_back({{"degree", n}, {"dimension", d}, {"oracle", o}, {"match", d == o}});
  }
  return {{{"rows", rows}, {"all_match", all}, {"rules", sys.rules().size()}, {"complete", sys.is_complete()},
           {"order", sys.order().name()}},
          all};
}

inline Outcome nf(const RunConfig& cfg, const std::string& poly) {
  auto k = field_of(cfg);
  auto sys = graded_system(k, cfg);
  auto p = NcPoly<PrimeField>::parse(k, poly);
  check_confluent_degree(sys, p.degree());
  return {{{"input", p.str()}, {"normal_form", normal_form(sys, p).str()}}, true};
}

inline Outcome center_check(const RunConfig& cfg) {
  auto k = field_of(cfg);
  auto sys = graded_system(k, cfg);
  auto z = central_elements(k);
  json out = json::array();
  bool all = true;
  auto zs = z.all();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    bool c = verify_centrality(sys, *zs[i]);
    all = all && c;
    out.push_back({{"name", "z" + std::to_string(i)}, {"degree", zs[i]->degree()}, {"central", c}});
  }
  bool alt = normal_form(sys, z.z5 - z.z5_alternate).is_zero();
  return {{{"elements", out}, {"all_central", all}, {"z5_forms_agree", alt}}, all && alt};
}

inline Outcome relation_check(const RunConfig& cfg) {
  auto k = field_of(cfg);
  auto sys = graded_system(k, cfg);
  auto r = center_relation_residual(sys);
  return {{{"relation_holds", r.is_zero()}, {"residual_terms", r.terms().size()}}, r.is_zero()};
}

inline Outcome singular_check(const RunConfig& cfg, const std::string& point) {
  auto k = field_of(cfg);
  bool has_ef = split(point, ',').size() == 6;
  auto pt = parse_point(k, point, false);
  std::vector<Residue> abcd{pt.a, pt.b, pt.c, pt.d};
  json partials = json::array();
  bool all_zero = true;
  for (const auto& d : delta_partials(k)) {
    auto v = d.evaluate(abcd);
    all_zero = all_zero && k.is_zero(v);
    partials.push_back(v.value);
  }
  json out{{"point", report::point_json(k, pt)},
           {"discriminant", discriminant_value(k, pt.a, pt.b, pt.c, pt.d).value},
           {"partials", partials},
           {"partials_vanish", all_zero},
           {"on_twisted_cubic", on_twisted_cubic(k, pt.a, pt.b, pt.c, pt.d)}};
  if (has_ef) {
    out["on_center_variety"] = satisfies_center_relation(k, pt);
    out["singular"] = singular_locus_membership(k, pt);
  }
  return {out, true};
}

inline json quotient_checks(const Quotient<PrimeField>& q) {
  const auto& k = q.system.field();
  auto images = reduce_center_images(q, central_elements(k));
  auto coords = q.point.coords();
  bool character = true;
  for (std::size_t i = 0; i < 6; ++i) character = character && images[i] == coords[i];
  auto [X, Y] = generator_matrices(q);
  bool relations = true;
  for (const auto& rel : cubic_form_relations(k, q.point.a, q.point.b, q.point.c, q.point.d))
    relations = relations && rel.evaluate(X, Y).is_zero();
  return {{"unit_law", q.algebra.check_unit_law()},
          {"associative", q.algebra.check_associativity()},
          {"central_character_matches", character},
          {"generator_matrices_satisfy_relations", relations}};
}

inline Outcome quotient(const RunConfig& cfg, const std::string& point, const std::string& dump_path) {
  auto k = field_of(cfg);
  auto pt = parse_point(k, point, true);
  if (!satisfies_center_relation(k, pt)) throw UsageError("point does not satisfy e^2 = f^3 - 27 D(a,b,c,d)");
  auto q = build_quotient(k, pt, cfg.quotient_bound());
  json basis = json::array();
  for (auto w : q.basis) basis.push_back(w.str());
  auto checks = quotient_checks(q);
  bool ok = true;
  for (const auto& [key, v] : checks.items()) ok = ok && v.get<bool>();
  if (!dump_path.empty()) {
    json table = json::array();
    for (std::size_t i = 0; i < q.dim(); ++i)
      for (std::size_t j = 0; j < q.dim(); ++j) {
        json row = json::array();
        for (auto c : q.algebra.product(i, j)) row.push_back(c.value);
        table.push_back(row);
      }
    json dump{{"schema", report::kSchemaVersion},
              {"field", report::field_json(k)},
              {"point", report::point_json(k, pt)},
              {"basis", basis},
              {"structure_constants", table},
              {"rules", split(q.system.dump(), '\n')}};
    dump["rules"].erase(dump["rules"].size() - 1);
    std::ofstream f(dump_path);
    if (!f) throw UsageError("cannot write " + dump_path);
    f << dump.dump(2) << "\n";
  }
  return {{{"point", report::point_json(k, pt)},
           {"dimension", q.dim()},
           {"basis", basis},
           {"rules", q.system.rules().size()},
           {"checks", checks}},
          ok};
}

inline Outcome irreps(const RunConfig& cfg, const std::string& point) {
  auto k = field_of(cfg);
  auto pt = parse_point(k, point, true);
  if (!satisfies_center_relation(k, pt)) throw UsageError("point does not satisfy e^2 = f^3 - 27 D(a,b,c,d)");
  auto a = analyze_point(k, pt, cfg.seed);
  json reps = json::array();
  for (auto [x, y] : search_irreps_dim1(k, pt)) reps.push_back(report::pair_json(x, y));
  bool rel = std::ranges::all_of(a.block_relations, [](bool b) { return b; });
  return {{{"point", report::point_json(k, pt)},
           {"dimension", a.dim},
           {"structure", report::blocks_json(a.blocks)},
           {"gram_rank", a.gram_rank},
           {"one_dim_reps", reps},
           {"blockwise_relations_hold", rel},
           {"singular", singular_locus_membership(k, pt)}},
          rel};
}

inline Outcome search_dim2(const RunConfig& cfg) {
  auto k = field_of(cfg);
  auto r = search_irreps_dim2(k);
  json pairs = json::array();
  for (const auto& [x, y] : r.irreducible_pairs)
    pairs.push_back({{"X", {x.a.value, x.b.value, x.c.value, x.d.value}}, {"Y", {y.a.value, y.b.value, y.c.value, y.d.value}}});
  return {{{"irreducible_pairs", r.irreducible_pairs.size()},
           {"pairs", pairs},
           {"x_forms", r.x_forms},
           {"candidates", r.candidates},
           {"relation_solutions", r.relation_solutions},
           {"reducible_solutions", r.reducible_solutions}},
          r.irreducible_pairs.empty()};
}

inline Outcome point_module(const RunConfig& cfg, const std::string& triple) {
  auto k = field_of(cfg);
  auto t = parse_triple(k, triple);
  auto next = solve_next(k, t);
  auto g = gamma_invariants(k, t);
  auto dims = predict_simple_quotient(t);
  json out{{"triple", json::array({proj_json(t.p0), proj_json(t.p1), proj_json(t.p2)})},
           {"next_point", proj_json(next)},
           {"periodic", next == t.p0},
           {"relations_annihilate", relations_annihilate(k, t)},
           {"gamma_invariants",
            {{"a", g.a.value}, {"b", g.b.value}, {"c", g.c.value}, {"X", g.X.value}, {"Y", g.Y.value},
             {"Z", g.Z.value}, {"gamma", g.gamma.value}}},
           {"gamma_squared_equals_XYZ", k.equal(k.mul(g.gamma, g.gamma), k.mul(g.X, k.mul(g.Y, g.Z)))},
           {"diagonal", t.diagonal()},
           {"predicted_simple_quotient_dims", std::vector<unsigned>(dims.begin(), dims.end())},
           {"abc_system_solvable", abc_system_admits_solution(k, t)}};
  if (t.diagonal()) {
    auto cc = central_character_diagonal(k, t.p0);
    out["central_character"] = report::point_json(k, cc);
    out["central_character_singular"] = singular_locus_membership(k, cc);
  } else {
    out["central_character"] = nullptr;
  }
  return {out, true};
}

inline Outcome disc_locus(const RunConfig& cfg, std::size_t ell, std::size_t samples) {
  auto k = field_of(cfg);
  if (ell == 0) throw UsageError("--ell must be positive");
  auto s = sample_locus(k, samples, samples, samples, cfg.seed);
  json strata = json::object();
  bool agrees = true;
  for (const auto& [stratum, counts] : s.counts(ell)) {
    bool expected = expected_member(stratum, ell);
    bool match = counts.first == (expected ? counts.second : 0);
    agrees = agrees && match;
    strata[stratum_name(stratum)] = {{"members", counts.first}, {"points", counts.second},
                                     {"expected_members", expected ? counts.second : 0}};
  }
  CentralPoint<PrimeField> origin{k.zero(), k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
  auto o = v_ell_membership(k, origin, ell, cfg.seed);
  return {{{"ell", ell},
           {"samples_per_stratum", samples},
           {"strata", strata},
           {"matches_trichotomy", agrees},
           {"cone_point", {{"member", o.member}, {"gram_rank", o.gram_rank}, {"irrep_dims", o.irrep_dims}}},
           {"trace", "regular trace (3 x reduced trace on M_3)"}},
          agrees};
}

}  // namespace gcliff::cli

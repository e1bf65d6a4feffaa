#pragma once

// The end-to-end checks of the generic Clifford algebra of a binary cubic,
// shared by the acceptance test and `verify-all`. Each check returns a
// pass/fail flag and a JSON record of what it saw.

#include "gcliff/center.hpp"
#include "gcliff/commgeo.hpp"
#include "gcliff/disc.hpp"
#include "gcliff/findim.hpp"
#include "gcliff/pointmod.hpp"
#include "gcliff/report.hpp"
#include "gcliff/repthy.hpp"
#include "gcliff/rewrite.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gcliff::acceptance {

using report::json;

struct SuiteConfig {
  std::uint64_t prime = 13;
  std::uint64_t second_prime = 31;
  std::uint64_t small_prime = 7;
  std::uint64_t seed = 0;
  unsigned degree_bound = 13;

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out{prime};
    if (second_prime != prime) out.push_back(second_prime);
    return out;
  }
  std::uint64_t seed_for(int criterion) const { return seed * 1000003ull + static_cast<std::uint64_t>(criterion); }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  json detail;
};

inline RewriteSystem<PrimeField> clifford_system(const PrimeField& k, unsigned degree_bound = 13) {
  return complete(k, clifford_relations(k), CompletionOptions{WordOrder{LetterOrder::x_greater_y}, degree_bound, 5000});
}

inline CriterionResult hilbert_series(const SuiteConfig& cfg) {
  PrimeField k(cfg.prime);
  auto sys = clifford_system(k, cfg.degree_bound);
  json dims = json::array(), oracle = json::array();
  bool ok = true;
  for (unsigned n = 0; n <= cfg.degree_bound; ++n) {
    auto d = graded_dimension(sys, n);
    auto o = hilbert_oracle(n);
    dims.push_back(d);
    oracle.push_back(o);
    ok = ok && d == o;
  }
  return {1, "Hilbert series matches 1/((1-t)^2(1-t^2)(1-t^3)^2)", ok,
          {{"prime", cfg.prime}, {"max_degree", cfg.degree_bound}, {"graded_dimension", dims}, {"oracle", oracle},
           {"rules", sys.rules().size()}}};
}

inline CriterionResult confluence(const SuiteConfig& cfg) {
  PrimeField k(cfg.prime);
  auto sys = clifford_system(k, cfg.degree_bound);
  auto audit = audit_ambiguities(sys, cfg.degree_bound);
  bool ok = audit.unresolved.empty() && sys.confluent_to() >= cfg.degree_bound;
  json unresolved = json::array();
  for (auto w : audit.unresolved) unresolved.push_back(w.str());
  return {2, "No unresolved overlap ambiguities in the completed presentation", ok,
          {{"prime", cfg.prime},
           {"max_degree", cfg.degree_bound},
           {"overlaps_checked", audit.overlaps_checked},
           {"inclusions_checked", audit.inclusions_checked},
           {"unresolved", unresolved},
           {"overlaps_skipped_in_completion", sys.stats().overlaps_skipped},
           {"complete", sys.is_complete()}}};
}

inline CriterionResult centrality(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    auto sys = clifford_system(k, cfg.degree_bound);
    auto z = central_elements(k);
    json verdicts = json::array();
    for (auto* zi : z.all()) {
      bool c = verify_centrality(sys, *zi);
      verdicts.push_back(c);
      ok = ok && c;
    }
    bool alt = normal_form(sys, z.z5 - z.z5_alternate).is_zero();
    ok = ok && alt;
    per_field.push_back({{"prime", p}, {"central", verdicts}, {"z5_forms_agree", alt}});
  }
  return {3, "z0..z5 commute with x and y", ok, {{"fields", per_field}}};
}

inline CriterionResult center_relation(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    auto sys = clifford_system(k, cfg.degree_bound);
    auto residual = center_relation_residual(sys);
    ok = ok && residual.is_zero();
    per_field.push_back({{"prime", p}, {"relation_holds", residual.is_zero()}, {"residual_terms", residual.terms().size()}});
  }
  return {4, "z4^2 - z5^3 + 27 Delta reduces to zero", ok, {{"fields", per_field}}};
}

inline CriterionResult singular_locus(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  std::mt19937_64 rng(cfg.seed_for(5));
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    auto partials = delta_partials(k);
    auto delta = delta_polynomial(k);
    bool transcribed = true;
    for (std::size_t i = 0; i < 4; ++i) transcribed = transcribed && partials[i] == delta.derivative(i);
    std::size_t vanishing = 0, sampled = 0;
    while (sampled < 20) {
      Residue x0{rng() % p}, x1{rng() % p};
      if (k.is_zero(x0) && k.is_zero(x1)) continue;
      auto c = twisted_cubic_point(k, x0, x1);
      std::vector<Residue> pt(c.begin(), c.end());
      bool all_zero = true;
      for (const auto& d : partials) all_zero = all_zero && k.is_zero(d.evaluate(pt));
      vanishing += all_zero;
      ++sampled;
    }
    ok = ok && transcribed && vanishing == sampled;
    per_field.push_back({{"prime", p}, {"sampled", sampled}, {"all_partials_vanish", vanishing},
                         {"partials_match_derivatives", transcribed}});
  }

  // every common zero of the partials in F_13^4 lies on the twisted cubic
  PrimeField k(13);
  auto partials = delta_partials(k);
  std::size_t common_zeros = 0, off_cubic = 0, cubic_count = 0;
  for (std::uint64_t a = 0; a < 13; ++a)
    for (std::uint64_t b = 0; b < 13; ++b)
      for (std::uint64_t c = 0; c < 13; ++c)
        for (std::uint64_t d = 0; d < 13; ++d) {
          std::vector<Residue> pt{{a}, {b}, {c}, {d}};
          bool cubic = on_twisted_cubic(k, pt[0], pt[1], pt[2], pt[3]);
          cubic_count += cubic;
          bool zero = true;
          for (const auto& q : partials)
            if (!k.is_zero(q.evaluate(pt))) {
              zero = false;
              break;
            }
          if (!zero) continue;
          ++common_zeros;
          off_cubic += !cubic;
        }
  ok = ok && off_cubic == 0 && common_zeros == cubic_count;
  return {5, "Singular locus of Delta is the twisted cubic", ok,
          {{"fields", per_field},
           {"sweep", {{"prime", 13}, {"common_zeros", common_zeros}, {"off_cubic", off_cubic},
                      {"twisted_cubic_points", cubic_count}}}}};
}

inline CriterionResult no_dim2_irreps(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  std::vector<std::uint64_t> primes{cfg.small_prime};
  if (cfg.prime != cfg.small_prime && cfg.prime <= 31) primes.push_back(cfg.prime);
  for (auto p : primes) {
    PrimeField k(p);
    auto r = search_irreps_dim2(k);
    ok = ok && r.irreducible_pairs.empty();
    per_field.push_back({{"prime", p},
                         {"irreducible_pairs", r.irreducible_pairs.size()},
                         {"x_forms", r.x_forms},
                         {"candidates", r.candidates},
                         {"relation_solutions", r.relation_solutions},
                         {"reducible_solutions", r.reducible_solutions}});
  }
  return {6, "No irreducible 2-dimensional representations", ok, {{"fields", per_field}}};
}

/// Twisted-cubic points built from [x0 : x1] with the parameters kept, for
/// checking which one-dimensional representations appear.
struct CubicSample {
  Residue x0, x1;
  CentralPoint<PrimeField> point;
};

inline std::vector<CubicSample> cubic_points(const PrimeField& k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CubicSample> out;
  while (out.size() < n) {
    Residue x0{rng() % k.modulus()}, x1{rng() % k.modulus()};
    if (k.is_zero(x0) && k.is_zero(x1)) continue;
    auto c = twisted_cubic_point(k, x0, x1);
    out.push_back({x0, x1, {c[0], c[1], c[2], c[3], k.zero(), k.zero()}});
  }
  return out;
}

/// The stratified points shared by the PI-degree and trichotomy checks.
struct StratifiedSample {
  std::vector<CubicSample> cubic;
  std::vector<SampledPoint> azumaya;
  std::vector<SampledPoint> discriminant_zero;

  std::vector<SampledPoint> all(std::uint64_t seed) const {
    std::vector<SampledPoint> out;
    for (const auto& c : cubic) out.push_back({Stratum::twisted_cubic, c.point, seed});
    out.insert(out.end(), azumaya.begin(), azumaya.end());
    out.insert(out.end(), discriminant_zero.begin(), discriminant_zero.end());
    return out;
  }
};

inline StratifiedSample stratified_sample(const PrimeField& k, const SuiteConfig& cfg) {
  auto base = cfg.seed_for(7) * 131 + k.modulus();
  return {cubic_points(k, 10, base), sample_points(k, 0, 20, 0, base + 1), sample_points(k, 0, 0, 10, base + 2)};
}

inline CriterionResult pi_degree(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    auto omega = k.cube_root_unity();
    auto strata = stratified_sample(k, cfg);
    std::size_t azumaya_ok = 0;
    json bad = json::array();
    for (const auto& s : strata.azumaya) {
      auto a = analyze_point(k, s.point, s.seed);
      bool good = a.dim == 9 && a.blocks.radical_dim == 0 && a.blocks.blocks == std::vector<Block>{{3, 1}} &&
                  a.gram_rank == 9 && std::ranges::all_of(a.block_relations, [](bool b) { return b; }) &&
                  search_irreps_dim1(k, s.point).empty();
      azumaya_ok += good;
      if (!good) bad.push_back(report::point_json(k, s.point));
    }
    std::size_t cubic_ok = 0;
    for (const auto& c : strata.cubic) {
      auto a = analyze_point(k, c.point, cfg.seed);
      auto reps = search_irreps_dim1(k, c.point);
      std::vector<std::pair<Residue, Residue>> expected;
      auto w = k.one();
      for (int i = 0; i < 3; ++i, w = k.mul(w, omega)) expected.emplace_back(k.mul(w, c.x0), k.mul(w, c.x1));
      std::ranges::sort(expected);
      bool good = reps == expected && a.sum_squares() == 3 && a.gram_rank == 3 &&
                  std::ranges::all_of(a.block_relations, [](bool b) { return b; });
      cubic_ok += good;
      if (!good) bad.push_back(report::point_json(k, c.point));
    }
    CentralPoint<PrimeField> origin{k.zero(), k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
    auto origin_reps = search_irreps_dim1(k, origin);
    auto origin_a = analyze_point(k, origin, cfg.seed);
    bool origin_ok = origin_reps.size() == 1 && origin_reps[0] == std::pair{k.zero(), k.zero()};
    ok = ok && azumaya_ok == 20 && cubic_ok == 10 && origin_ok;
    per_field.push_back({{"prime", p},
                         {"azumaya_points_ok", azumaya_ok},
                         {"azumaya_points", 20},
                         {"twisted_cubic_points_ok", cubic_ok},
                         {"twisted_cubic_points", 10},
                         {"failures", bad},
                         {"origin",
                          {{"one_dim_reps", origin_reps.size()},
                           {"dim", origin_a.dim},
                           {"structure", report::blocks_json(origin_a.blocks)},
                           {"gram_rank", origin_a.gram_rank}}}});
  }
  return {7, "C/mC is M_3 off the singular locus; three 1-dim irreps on it", ok, {{"fields", per_field}}};
}

inline ProjPoint<PrimeField> random_proj_point(const PrimeField& k, std::mt19937_64& rng) {
  for (;;) {
    Residue x{rng() % k.modulus()}, y{rng() % k.modulus()};
    if (!k.is_zero(x) || !k.is_zero(y)) return ProjPoint<PrimeField>(k, x, y);
  }
}

inline CriterionResult point_variety(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  auto check = [&](const PrimeField& k, const PointTriple<PrimeField>& t, std::size_t& pass, std::size_t& gamma_ok) {
    bool good = false;
    try {
      good = solve_next(k, t) == t.p0 && relations_annihilate(k, t);
    } catch (const AlgebraError&) {
      good = false;
    }
    pass += good;
    auto g = gamma_invariants(k, t);
    gamma_ok += k.equal(k.mul(g.gamma, g.gamma), k.mul(g.X, k.mul(g.Y, g.Z)));
  };
  {
    PrimeField k(cfg.small_prime);
    auto line = projective_line(k);
    std::size_t total = 0, pass = 0, gamma_ok = 0;
    for (const auto& a : line)
      for (const auto& b : line)
        for (const auto& c : line) {
          check(k, {a, b, c}, pass, gamma_ok);
          ++total;
        }
    ok = ok && pass == total && gamma_ok == total;
    per_field.push_back({{"prime", cfg.small_prime}, {"mode", "exhaustive"}, {"triples", total}, {"periodic", pass},
                         {"gamma_identity", gamma_ok}});
  }
  std::mt19937_64 rng(cfg.seed_for(8));
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    std::size_t pass = 0, gamma_ok = 0;
    for (int i = 0; i < 200; ++i) {
      PointTriple<PrimeField> t{random_proj_point(k, rng), random_proj_point(k, rng), random_proj_point(k, rng)};
      check(k, t, pass, gamma_ok);
    }
    ok = ok && pass == 200 && gamma_ok == 200;
    per_field.push_back({{"prime", p}, {"mode", "random"}, {"triples", 200}, {"periodic", pass}, {"gamma_identity", gamma_ok}});
  }
  bool symbolic = gamma_identity_residual(RationalField{}).is_zero();
  ok = ok && symbolic;
  return {8, "Point modules are periodic of period 3; gamma^2 = XYZ", ok,
          {{"fields", per_field}, {"gamma_identity_symbolic", symbolic}}};
}

inline CriterionResult point_quotients(const SuiteConfig& cfg) {
  PrimeField k(cfg.prime);
  bool ok = true;
  std::size_t diagonal = 0, diagonal_ok = 0;
  for (const auto& p : projective_line(k)) {
    PointTriple<PrimeField> t{p, p, p};
    ++diagonal;
    bool good = predict_simple_quotient(t) == std::set<unsigned>{1} &&
                singular_locus_membership(k, central_character_diagonal(k, p)) && abc_system_admits_solution(k, t);
    diagonal_ok += good;
  }
  std::mt19937_64 rng(cfg.seed_for(9));
  std::size_t off = 0, off_ok = 0, coincident = 0, coincident_ok = 0;
  while (off < 50) {
    PointTriple<PrimeField> t{random_proj_point(k, rng), random_proj_point(k, rng), random_proj_point(k, rng)};
    if (t.diagonal()) continue;
    ++off;
    off_ok += predict_simple_quotient(t) == std::set<unsigned>{0, 3} && !abc_system_admits_solution(k, t);
  }
  // p0 = p1 != p2: X = 0 and Y = Z != 0
  while (coincident < 20) {
    auto p = random_proj_point(k, rng), q = random_proj_point(k, rng);
    if (p == q) continue;
    ++coincident;
    auto g = gamma_invariants(k, PointTriple<PrimeField>{p, p, q});
    coincident_ok += k.is_zero(g.X) && k.equal(g.Y, g.Z) && !k.is_zero(g.Y) && k.is_zero(g.gamma);
  }
  ok = diagonal_ok == diagonal && off_ok == off && coincident_ok == coincident;
  return {9, "Simple quotients of point modules: dim 1 on the diagonal, trivial or 3 off it", ok,
          {{"prime", cfg.prime},
           {"diagonal_triples", diagonal},
           {"diagonal_ok", diagonal_ok},
           {"non_diagonal_triples", off},
           {"non_diagonal_ok", off_ok},
           {"coincident_pair_triples", coincident},
           {"coincident_pair_ok", coincident_ok}}};
}

inline const std::vector<std::size_t>& locus_ells() {
  static const std::vector<std::size_t> ells{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  return ells;
}

inline CriterionResult discriminant_trichotomy(const SuiteConfig& cfg) {
  bool ok = true;
  json per_field = json::array();
  for (auto p : cfg.primes()) {
    PrimeField k(p);
    LocusSample sample{stratified_sample(k, cfg).all(cfg.seed), {}};
    for (const auto& pt : sample.points) sample.analyses.push_back(analyze_point(k, pt.point, pt.seed));
    json table = json::object();
    std::size_t mismatches = 0, gram_disagreements = 0;
    for (auto ell : locus_ells()) {
      json row = json::object();
      try {
        for (const auto& [stratum, counts] : sample.counts(ell)) {
          row[stratum_name(stratum)] = {{"members", counts.first}, {"points", counts.second}};
          std::size_t expected = expected_member(stratum, ell) ? counts.second : 0;
          mismatches += counts.first != expected;
        }
      } catch (const CriterionMismatch&) {
        ++mismatches;
      }
      table[std::to_string(ell)] = row;
    }
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
      auto q = build_quotient(k, sample.points[i].point);
      for (auto ell : locus_ells()) {
        bool member = v_ell_membership(sample.analyses[i], ell).member;
        bool found = modified_gram_check_with_retry(q.algebra, ell, 50, sample.points[i].seed + ell, !member);
        gram_disagreements += found == member;
      }
    }
    ok = ok && mismatches == 0 && gram_disagreements == 0;
    // the cone point (0, ..., 0) is not in the parametrized cubic stratum; listed, not scored
    CentralPoint<PrimeField> origin{k.zero(), k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
    auto origin_a = analyze_point(k, origin, cfg.seed);
    json origin_members = json::array();
    for (auto ell : locus_ells())
      if (v_ell_membership(origin_a, ell).member) origin_members.push_back(ell);
    per_field.push_back({{"prime", p},
                         {"membership", table},
                         {"cone_point", {{"sum_squares", origin_a.sum_squares()}, {"member_for_ell", origin_members}}},
                         {"stratum_mismatches", mismatches},
                         {"modified_gram_disagreements", gram_disagreements}});
  }
  return {10, "V_l over the stratified sample: empty for l <= 3, the singular locus for 4 <= l <= 9, everything for l > 9", ok,
          {{"fields", per_field}, {"trace", "regular trace (3 x reduced trace on M_3)"}}};
}

inline std::vector<std::function<CriterionResult(const SuiteConfig&)>> criteria() {
  return {hilbert_series, confluence,   centrality,     center_relation, singular_locus,
          no_dim2_irreps, pi_degree,    point_variety,  point_quotients, discriminant_trichotomy};
}

}  // namespace gcliff::acceptance

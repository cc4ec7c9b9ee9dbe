#include "trisq/solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "trisq/catalog.hpp"

using namespace trisq;

namespace {

// Test-side brute force, independent of the solver's enumeration strategy:
// walks the full index box and collects every constraint-satisfying tuple.
std::vector<std::vector<u64>> brute_force_all(const MixedForm& form, u64 n) {
  std::vector<std::vector<u64>> hits;
  std::vector<u64> idx(form.arity(), 0);
  std::vector<u64> limits(form.arity());
  for (std::size_t i = 0; i < form.arity(); ++i) {
    limits[i] = max_generator_index(form.terms[i].kind, n / form.terms[i].coeff);
  }
  while (true) {
    u64 sum = 0;
    bool overflow = false;
    for (std::size_t i = 0; i < form.arity(); ++i) {
      sum += form.terms[i].coeff * generator_value(form.terms[i].kind, idx[i]);
      if (sum > n) {
        overflow = true;
        break;
      }
    }
    if (!overflow && sum == n && satisfies_constraints(form, idx)) hits.push_back(idx);
    std::size_t pos = 0;
    while (pos < idx.size() && idx[pos] == limits[pos]) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  return hits;
}

}  // namespace

TEST_CASE("term values") {
  const std::vector<TermValue> tri = term_values(TermKind::Triangular, 10);
  REQUIRE(tri.size() == 5);
  CHECK(tri[0].index == 0);
  CHECK(tri[0].value == 0);
  CHECK(tri[2].value == 3);
  CHECK(tri[4].index == 4);
  CHECK(tri[4].value == 10);

  const std::vector<TermValue> sq = term_values(TermKind::Square, 10);
  REQUIRE(sq.size() == 4);
  CHECK(sq[3].value == 9);

  const std::vector<TermValue> zero = term_values(TermKind::Square, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].value == 0);

  MixedTerm doubled{2, TermKind::Square};
  VariableConstraint odd_only;
  odd_only.parity = IndexParity::Odd;
  const std::vector<TermValue> scaled = term_values(doubled, odd_only, 60);
  REQUIRE(scaled.size() == 3);  // 2*1, 2*9, 2*25
  CHECK(scaled[0].value == 2);
  CHECK(scaled[1].value == 18);
  CHECK(scaled[2].value == 50);
}

TEST_CASE("find_representation basics") {
  const MixedForm ttt = parse_form("t+t+t");
  const auto rep = find_representation(ttt, 3);
  REQUIRE(rep.has_value());
  CHECK(evaluate(ttt, rep->indices) == 3);
  // Deterministic order: last slot ascending outermost, first slot resolved
  // by membership, so 3 = t_2 + t_0 + t_0 wins over 1 + 1 + 1.
  CHECK(rep->indices == std::vector<u64>{2, 0, 0});

  CHECK_FALSE(find_representation(parse_form("2s+5t+t"), 4).has_value());

  const MixedForm sst = parse_form("s+s+t");
  const auto rep12 = find_representation(sst, 12);
  REQUIRE(rep12.has_value());
  CHECK(evaluate(sst, rep12->indices) == 12);

  SUBCASE("identical calls give identical witnesses") {
    for (u64 n : {17, 29, 100, 999}) {
      const auto first = find_representation(sst, n);
      const auto second = find_representation(sst, n);
      REQUIRE(first.has_value() == second.has_value());
      if (first) CHECK(first->indices == second->indices);
    }
  }
}

TEST_CASE("find_representation agrees with brute force") {
  std::mt19937 rng(23);
  const std::vector<const char*> pool = {"t+t",   "s+t",    "2s+t",    "t+4t+4t",
                                         "s+2s+3t", "2t+3t+4t", "s+s+t", "4t+t+t"};
  std::uniform_int_distribution<u64> pick_n(0, 250);
  for (int trial = 0; trial < 400; ++trial) {
    MixedForm form = parse_form(pool[trial % pool.size()]);
    if (trial % 3 == 0) form.constraints[0].min_index = 1;
    if (trial % 5 == 0) form.constraints.back().parity = IndexParity::Odd;
    const u64 n = pick_n(rng);
    const auto rep = find_representation(form, n);
    const auto all = brute_force_all(form, n);
    CAPTURE(render_form(form));
    CAPTURE(n);
    REQUIRE(rep.has_value() == !all.empty());
    if (rep) {
      CHECK(evaluate(form, rep->indices) == n);
      CHECK(satisfies_constraints(form, rep->indices));
      CHECK(std::find(all.begin(), all.end(), rep->indices) != all.end());
    }
  }
}

TEST_CASE("arity limits") {
  // Single term: 36 = 4 * 3^2.
  const auto single = find_representation(parse_form("4s"), 36);
  REQUIRE(single.has_value());
  CHECK(single->indices == std::vector<u64>{3});
  CHECK_FALSE(find_representation(parse_form("4s"), 35).has_value());

  // Eight terms still enumerate correctly.
  const MixedForm wide = parse_form("t+t+t+t+t+t+t+t");
  const auto rep = find_representation(wide, 100);
  REQUIRE(rep.has_value());
  CHECK(evaluate(wide, rep->indices) == 100);

  MixedForm empty;
  CHECK_THROWS_AS(find_representation(empty, 1), std::invalid_argument);
}

TEST_CASE("order bonds restrict the search") {
  MixedForm f = parse_form("t+2s+4t");
  f.constraints[1].order = OrderBond{2, 1};  // square index >= triangular index + 1
  for (u64 n = 0; n <= 300; ++n) {
    const auto rep = find_representation(f, n);
    const auto all = brute_force_all(f, n);
    REQUIRE(rep.has_value() == !all.empty());
    if (rep) {
      REQUIRE(rep->indices[1] >= rep->indices[2] + 1);
    }
  }
}

TEST_CASE("counting representations") {
  const MixedForm tt = parse_form("t+t");
  CHECK(count_representations(tt, 3, true) == 2);
  CHECK(count_representations(tt, 0, true) == 1);
  CHECK(count_representations(tt, 3, false) == 1);

  const MixedForm ss = parse_form("s+s");
  CHECK(count_representations(ss, 25, true) == 4);   // (0,5),(5,0),(3,4),(4,3)
  CHECK(count_representations(ss, 25, false) == 2);  // {0,5},{3,4}

  SUBCASE("ordered count matches brute force") {
    const MixedForm mixed = parse_form("s+2s+3t");
    for (u64 n = 0; n <= 200; ++n) {
      REQUIRE(count_representations(mixed, n, true) == brute_force_all(mixed, n).size());
    }
  }

  SUBCASE("unordered never exceeds ordered") {
    for (u64 n = 0; n <= 200; ++n) {
      REQUIRE(count_representations(tt, n, false) <= count_representations(tt, n, true));
      REQUIRE(count_representations(ss, n, false) <= count_representations(ss, n, true));
    }
  }
}

TEST_CASE("two-triangular counts via divisors") {
  CHECK(ewell_t2(0) == 1);
  CHECK(ewell_t2(3) == 2);
  CHECK(ewell_t2(10) == 2);  // d_1(41) - d_3(41)

  const MixedForm tt = parse_form("t+t");
  for (u64 n = 0; n <= 2000; ++n) {
    CAPTURE(n);
    REQUIRE(ewell_t2(n) == count_representations(tt, n, true));
  }
}

TEST_CASE("exception scans") {
  CHECK(exception_set(parse_form("t+4t+5t"), 1000).exceptions == std::vector<u64>{2});
  CHECK(exception_set(parse_form("s+s+t"), 1000).exceptions.empty());
  CHECK(exception_set(parse_form("s+2s+3t"), 1000).exceptions == std::vector<u64>{23});

  SUBCASE("resource ceiling") {
    ScanOptions opts;
    opts.bound_ceiling = 10;
    CHECK_THROWS_AS(exception_set(parse_form("t+t"), 100, opts), std::length_error);
  }

  SUBCASE("cross-variable constraints are rejected") {
    MixedForm f = parse_form("t+t");
    f.constraints[1].order = OrderBond{0, 0};
    CHECK_THROWS_AS(exception_set(f, 100), std::invalid_argument);
  }

  SUBCASE("per-slot constraints are honored") {
    // Squares of odd index only: 1, 9, 25, ...
    MixedForm f = parse_form("s");
    f.constraints[0].parity = IndexParity::Odd;
    const auto report = exception_set(f, 30);
    for (u64 v : {1, 9, 25}) {
      CHECK(std::find(report.exceptions.begin(), report.exceptions.end(), v) ==
            report.exceptions.end());
    }
    CHECK(std::find(report.exceptions.begin(), report.exceptions.end(), 0) !=
          report.exceptions.end());
    CHECK(std::find(report.exceptions.begin(), report.exceptions.end(), 4) !=
          report.exceptions.end());
  }

  SUBCASE("partitioned scans match the sequential result") {
    const MixedForm f = parse_form("s+s+5t");
    const auto sequential = exception_set(f, 3000);
    for (unsigned threads : {2u, 3u, 8u}) {
      ScanOptions opts;
      opts.threads = threads;
      CHECK(exception_set(f, 3000, opts).exceptions == sequential.exceptions);
    }
  }

  SUBCASE("scan marks exactly the point-query misses") {
    for (const auto& entry : catalog::conjectured_exception_sets()) {
      const MixedForm form = parse_form(entry.form);
      const auto report = exception_set(form, 2000);
      const std::set<u64> missing(report.exceptions.begin(), report.exceptions.end());
      for (u64 n = 0; n <= 2000; ++n) {
        CAPTURE(entry.form);
        CAPTURE(n);
        REQUIRE(missing.count(n) == !find_representation(form, n).has_value());
      }
    }
  }
}

TEST_CASE("triangular universality finite check") {
  CHECK(kane_triangular_universal({1, 1, 1}).status == UniversalityStatus::Universal);
  CHECK(kane_triangular_universal({1, 2, 6}).status == UniversalityStatus::NotUniversal);
  CHECK(kane_triangular_universal({2, 2, 2}).status == UniversalityStatus::NotUniversal);

  SUBCASE("evidence names the failing targets") {
    const UniversalityVerdict v = kane_triangular_universal({1, 2, 6});
    REQUIRE(v.finite_checks.size() == 5);
    for (const FiniteCheck& check : v.finite_checks) {
      if (check.target == 4) {
        CHECK_FALSE(check.witness.has_value());
      } else {
        CHECK(check.witness.has_value());
      }
    }
  }

  SUBCASE("evidence of (2,2,2) shows 1 unrepresentable") {
    const UniversalityVerdict v = kane_triangular_universal({2, 2, 2});
    CHECK_FALSE(v.finite_checks[0].witness.has_value());
  }

  CHECK_THROWS_AS(kane_triangular_universal({}), std::invalid_argument);
  CHECK_THROWS_AS(kane_triangular_universal({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("odd-square residue class check") {
  CHECK(kane_odd_square_check({1, 1, 1}).status == UniversalityStatus::Universal);
  CHECK(kane_odd_square_check({1}).status == UniversalityStatus::NotUniversal);
  CHECK(kane_odd_square_check({1, 1}).status == UniversalityStatus::NotUniversal);

  SUBCASE("witnesses use odd indices only") {
    const UniversalityVerdict v = kane_odd_square_check({1, 1, 1});
    REQUIRE(v.finite_checks.size() == 5);
    CHECK(v.finite_checks[0].target == 11);
    CHECK(v.finite_checks[4].target == 67);
    for (const FiniteCheck& check : v.finite_checks) {
      REQUIRE(check.witness.has_value());
      for (u64 index : check.witness->indices) REQUIRE(index % 2 == 1);
    }
  }

  SUBCASE("single square fails at 17") {
    const UniversalityVerdict v = kane_odd_square_check({1});
    CHECK(v.finite_checks[0].witness.has_value());        // 9 = 3^2
    CHECK_FALSE(v.finite_checks[1].witness.has_value());  // 17
  }
}

TEST_CASE("asymptotic universality criteria") {
  CHECK(asymptotically_universal(parse_form("t+2t+6t")).status ==
        UniversalityStatus::AsymptoticallyUniversal);
  CHECK(asymptotically_universal(parse_form("s+s+7t")).status ==
        UniversalityStatus::NotAsymptoticallyUniversal);
  CHECK(asymptotically_universal(parse_form("s+4t+4t")).status ==
        UniversalityStatus::NotAsymptoticallyUniversal);

  SUBCASE("input order does not matter") {
    CHECK(asymptotically_universal(parse_form("6t+t+2t")).status ==
          UniversalityStatus::AsymptoticallyUniversal);
    CHECK(asymptotically_universal(parse_form("4t+s+4t")).status ==
          UniversalityStatus::NotAsymptoticallyUniversal);
  }

  SUBCASE("evidence pinpoints the failure") {
    const UniversalityVerdict v = asymptotically_universal(parse_form("s+s+7t"));
    REQUIRE(v.residue_checks.size() == 3);
    CHECK(v.residue_checks[0].holds);  // -2bc R a'
    CHECK(v.residue_checks[1].holds);  // -2ac R b'
    CHECK_FALSE(v.residue_checks[2].holds);
    CHECK(v.residue_checks[2].relation == "-ab R c'");
    CHECK(v.residue_checks[2].value == -1);
    CHECK(v.residue_checks[2].modulus == 7);

    const UniversalityVerdict w = asymptotically_universal(parse_form("s+4t+4t"));
    for (const ResidueCheck& rc : w.residue_checks) CHECK(rc.holds);
    REQUIRE(w.side_conditions.size() == 1);
    CHECK_FALSE(w.side_conditions[0].holds);
  }

  SUBCASE("rejects uncovered inputs") {
    CHECK_THROWS_AS(asymptotically_universal(parse_form("s+s+s")), std::invalid_argument);
    CHECK_THROWS_AS(asymptotically_universal(parse_form("2s+2t+4t")), std::invalid_argument);
    CHECK_THROWS_AS(asymptotically_universal(parse_form("t+t")), std::invalid_argument);
    CHECK_THROWS_AS(asymptotically_universal(parse_form("t+t+t+t")), std::invalid_argument);
  }
}

TEST_CASE("even square plus two triangulars covers the naturals") {
  MixedForm f = parse_form("s+t+t");
  f.constraints[0].parity = IndexParity::Even;
  for (u64 n = 0; n <= 2000; ++n) {
    CAPTURE(n);
    REQUIRE(find_representation(f, n).has_value());
  }
}

TEST_CASE("triangular plus two squares of distinct parity or equal positive index") {
  MixedForm f = parse_form("s+s+t");
  f.constraints[0].predicate = {PairPredicate::DistinctParityOrEqualPositive, 1};
  for (u64 n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    const auto rep = find_representation(f, n);
    REQUIRE(rep.has_value());
    const u64 x = rep->indices[0], y = rep->indices[1];
    REQUIRE(((x % 2) != (y % 2) || (x == y && x > 0)));
  }
}

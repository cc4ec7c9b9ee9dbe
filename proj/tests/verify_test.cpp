#include "trisq/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "trisq/catalog.hpp"

using namespace trisq;

TEST_CASE("identity battery") {
  const BatteryResult r = verify_identities(150);
  CHECK(r.passed());
  CHECK(r.checked > 0);
  CHECK(r.first_counterexample.empty());
}

TEST_CASE("legendre scan battery") {
  const BatteryResult r = verify_legendre_scan(2000);
  CHECK(r.passed());
  CHECK(r.checked == 2001);
}

TEST_CASE("ewell battery") {
  const BatteryResult r = verify_ewell(500);
  CHECK(r.passed());
  CHECK(r.checked == 501);
}

TEST_CASE("kane consistency battery") {
  const BatteryResult r = verify_kane_consistency(7, 20000);
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

TEST_CASE("conjectured exception sets at a small bound") {
  const ConjecturedSetReport report = verify_conjectured_sets(2000);
  CHECK(report.passed());
  REQUIRE(report.rows.size() == catalog::conjectured_exception_sets().size());
  for (const ConjecturedSetRow& row : report.rows) {
    CAPTURE(row.form);
    CHECK(row.match);
  }
}

TEST_CASE("negative criterion verdicts are backed by small exceptions") {
  // Every ternary form with coefficient sum <= 10 and coprime coefficients
  // that fails the asymptotic criteria must miss some integer below 1e4.
  u64 negatives = 0;
  for (u64 a = 1; a <= 8; ++a) {
    for (u64 b = 1; a + b <= 9; ++b) {
      for (u64 c = 1; a + b + c <= 10; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        for (const char* pattern : {"t+t+t", "s+t+t", "s+s+t"}) {
          MixedForm form = parse_form(pattern);
          form.terms[0].coeff = a;
          form.terms[1].coeff = b;
          form.terms[2].coeff = c;
          if (asymptotically_universal(form).status !=
              UniversalityStatus::NotAsymptoticallyUniversal) {
            continue;
          }
          ++negatives;
          CAPTURE(render_form(form));
          REQUIRE_FALSE(exception_set(form, 10000).exceptions.empty());
        }
      }
    }
  }
  CHECK(negatives > 0);
}

TEST_CASE("catalog sanity") {
  CHECK(catalog::universal_sst_vectors().size() == 10);
  CHECK(catalog::universal_stt_vectors().size() == 15);
  CHECK(catalog::almost_universal_forms().size() == 34);
  CHECK(catalog::conjectured_exception_sets().size() == 25);

  for (const catalog::CoeffTriple& v : catalog::universal_sst_vectors()) {
    CHECK(v.a <= v.b);
    CHECK(std::gcd(std::gcd(v.a, v.b), v.c) >= 1);
  }
  for (const catalog::CoeffTriple& v : catalog::universal_stt_vectors()) {
    CHECK(v.b >= v.c);
  }
  for (const char* text : catalog::almost_universal_forms()) {
    const MixedForm form = parse_form(text);
    CAPTURE(text);
    REQUIRE(form.arity() == 3);
    CHECK(form.coeff_gcd() == 1);
  }
  for (const auto& entry : catalog::conjectured_exception_sets()) {
    const MixedForm form = parse_form(entry.form);
    CAPTURE(entry.form);
    REQUIRE(form.arity() == 3);
    CHECK(std::is_sorted(entry.exceptions.begin(), entry.exceptions.end()));
    CHECK_FALSE(entry.exceptions.empty());
  }
}

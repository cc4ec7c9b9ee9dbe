#include "trisq/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trisq/catalog.hpp"
#include "trisq/three_squares.hpp"

namespace trisq {

namespace {

// One residue-class root identity: sum of per-variable left columns plus a
// constant equals the sum of per-variable right columns plus a constant, for
// every index combination.
struct Identity {
  const char* name;
  std::vector<std::vector<u64>> lhs;  // one column per variable
  std::vector<std::vector<u64>> rhs;
  u64 lhs_const;
  u64 rhs_const;
};

void check_identity(const Identity& id, BatteryResult& result) {
  const std::size_t vars = id.lhs.size();
  const std::size_t n = id.lhs[0].size();
  if (vars == 2) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ++result.checked;
        if (id.lhs[0][x] + id.lhs[1][y] + id.lhs_const !=
            id.rhs[0][x] + id.rhs[1][y] + id.rhs_const) {
          if (result.failures == 0) {
            result.first_counterexample =
                std::string(id.name) + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
          }
          ++result.failures;
        }
      }
    }
    return;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const u64 l = id.lhs[0][x] + id.lhs[1][y] + id.lhs_const;
      const u64 r = id.rhs[0][x] + id.rhs[1][y] + id.rhs_const;
      // XOR-accumulate so the inner loop vectorizes; rescan on a hit.
      u64 acc = 0;
      const u64* lz = id.lhs[2].data();
      const u64* rz = id.rhs[2].data();
      for (std::size_t z = 0; z < n; ++z) acc |= (l + lz[z]) ^ (r + rz[z]);
      result.checked += n;
      if (acc != 0) {
        for (std::size_t z = 0; z < n; ++z) {
          if (l + lz[z] != r + rz[z]) {
            if (result.failures == 0) {
              result.first_counterexample = std::string(id.name) + " at (" + std::to_string(x) +
                                            ", " + std::to_string(y) + ", " + std::to_string(z) +
                                            ")";
            }
            ++result.failures;
          }
        }
      }
    }
  }
}

}  // namespace

BatteryResult verify_identities(u64 index_bound) {
  BatteryResult result;
  result.suite = "identities";
  const std::size_t n = static_cast<std::size_t>(index_bound) + 1;

  std::vector<u64> t8(n), t32(n), odd_sq(n), odd_sq4(n), even4_sq(n), sq4_2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const u64 tk = triangular(k);
    t8[k] = 8 * tk;                              // 8 t_k
    t32[k] = 32 * tk;                            // 8 * 4 t_k
    odd_sq[k] = (2 * k + 1) * (2 * k + 1);       // (2k+1)^2
    odd_sq4[k] = 4 * odd_sq[k];                  // 4 (2k+1)^2 = (2(2k+1))^2
    even4_sq[k] = (4 * k) * (4 * k);             // (4k)^2
    sq4_2[k] = (4 * k + 2) * (4 * k + 2);        // (4k+2)^2
  }
  std::vector<u64> s16_2(n);                     // 8 * 2 s_k
  for (std::size_t k = 0; k < n; ++k) s16_2[k] = 16 * static_cast<u64>(k) * k;
  std::vector<u64> adj(n);                       // 8 (s_k + s_{k+1})
  for (std::size_t k = 0; k < n; ++k) {
    adj[k] = 8 * (static_cast<u64>(k) * k + (static_cast<u64>(k) + 1) * (k + 1));
  }

  const std::vector<Identity> identities = {
      {"8(t_x+t_y+t_z)+3 = (2x+1)^2+(2y+1)^2+(2z+1)^2",
       {t8, t8, t8},
       {odd_sq, odd_sq, odd_sq},
       3,
       0},
      {"8(t_x+2s_y)+1 = (2x+1)^2+(4y)^2", {t8, s16_2}, {odd_sq, even4_sq}, 1, 0},
      {"8(t_x+4t_y+s_z+s_{z+1})+1 = (2x+1)^2+4(2y+1)^2+4(2z+1)^2",
       {t8, t32, adj},
       {odd_sq, odd_sq4, odd_sq4},
       1,
       0},
      {"8(t_x+t_y)+2 = (2x+1)^2+(2y+1)^2", {t8, t8}, {odd_sq, odd_sq}, 2, 0},
      {"8(2s_x+t_y)+2 = (4x)^2+(2y+1)^2+1", {s16_2, t8}, {even4_sq, odd_sq}, 2, 1},
      {"8(t_x+2s_y+4t_z)+5 = (2x+1)^2+(4y)^2+4(2z+1)^2",
       {t8, s16_2, t32},
       {odd_sq, even4_sq, odd_sq4},
       5,
       0},
      {"8(t_x+4t_y+2s_z)+5 = (2x+1)^2+(4y+2)^2+(4z)^2",
       {t8, t32, s16_2},
       {odd_sq, sq4_2, even4_sq},
       5,
       0},
      {"8(4t_x+t_y+t_z)+6 = (4x+2)^2+(2y+1)^2+(2z+1)^2",
       {t32, t8, t8},
       {sq4_2, odd_sq, odd_sq},
       6,
       0},
  };
  for (const Identity& id : identities) check_identity(id, result);
  return result;
}

BatteryResult verify_legendre_scan(u64 bound) {
  BatteryResult result;
  result.suite = "legendre-scan";
  for (u64 n = 0; n <= bound; ++n) {
    ++result.checked;
    const bool eligible = is_eligible(n);
    const bool represented = r3_count(n) > 0;
    if (eligible != represented) {
      if (result.failures == 0) {
        result.first_counterexample = "n = " + std::to_string(n) + ": eligible=" +
                                      (eligible ? "true" : "false") + " but r3_count" +
                                      (represented ? " > 0" : " = 0");
      }
      ++result.failures;
    }
  }
  return result;
}

BatteryResult verify_ewell(u64 bound) {
  BatteryResult result;
  result.suite = "ewell";
  const MixedForm two_triangulars = parse_form("t+t");
  for (u64 n = 0; n <= bound; ++n) {
    ++result.checked;
    const u64 via_divisors = ewell_t2(n);
    const u64 brute = count_representations(two_triangulars, n, /*ordered=*/true);
    if (via_divisors != brute) {
      if (result.failures == 0) {
        result.first_counterexample = "n = " + std::to_string(n) + ": d-formula " +
                                      std::to_string(via_divisors) + " vs brute " +
                                      std::to_string(brute);
      }
      ++result.failures;
    }
  }
  return result;
}

BatteryResult verify_kane_consistency(u64 coeff_sum_bound, u64 scan_bound,
                                      const ScanOptions& opts) {
  BatteryResult result;
  result.suite = "kane-consistency";
  std::map<std::array<u64, 3>, bool> empirical_cache;
  std::set<std::array<u64, 3>> universal;

  auto empirically_universal = [&](std::array<u64, 3> sorted) {
    auto it = empirical_cache.find(sorted);
    if (it != empirical_cache.end()) return it->second;
    MixedForm form;
    for (u64 c : sorted) form.terms.push_back({c, TermKind::Triangular});
    form.constraints.resize(3);
    const bool empty = exception_set(form, scan_bound, opts).exceptions.empty();
    empirical_cache.emplace(sorted, empty);
    return empty;
  };

  auto note_failure = [&](const std::string& text) {
    if (result.failures == 0) result.first_counterexample = text;
    ++result.failures;
  };

  for (u64 a = 1; a + 2 <= coeff_sum_bound; ++a) {
    for (u64 b = 1; a + b + 1 <= coeff_sum_bound; ++b) {
      for (u64 c = 1; a + b + c <= coeff_sum_bound; ++c) {
        ++result.checked;
        std::array<u64, 3> sorted{a, b, c};
        std::sort(sorted.begin(), sorted.end());
        const bool kane =
            kane_triangular_universal({a, b, c}).status == UniversalityStatus::Universal;
        const bool empirical = empirically_universal(sorted);
        if (kane != empirical) {
          note_failure("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + "): finite check says " + (kane ? "universal" : "not") +
                       ", scan says " + (empirical ? "universal" : "not"));
        }
        if (kane) universal.insert({a, b, c});
        if (kane && std::min({a, b, c}) > 1) {
          note_failure("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + "): judged universal with min coefficient > 1");
        }
      }
    }
  }

  if (!universal.count({1, 1, 1})) note_failure("(1,1,1) not judged universal");
  for (const std::array<u64, 3>& triple : universal) {
    std::array<u64, 3> perm = triple;
    std::sort(perm.begin(), perm.end());
    do {
      if (!universal.count(perm)) {
        note_failure("universal set not closed under permutation at (" + std::to_string(perm[0]) +
                     "," + std::to_string(perm[1]) + "," + std::to_string(perm[2]) + ")");
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

bool ConjecturedSetReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ConjecturedSetRow& row) { return row.match; });
}

ConjecturedSetReport verify_conjectured_sets(u64 bound, const ScanOptions& opts) {
  ConjecturedSetReport report{bound, {}};
  for (const catalog::ConjecturedExceptions& entry : catalog::conjectured_exception_sets()) {
    ConjecturedSetRow row;
    row.form = entry.form;
    for (u64 e : entry.exceptions) {
      if (e <= bound) row.expected.push_back(e);
    }
    row.found = exception_set(parse_form(entry.form), bound, opts).exceptions;
    row.match = row.found == row.expected;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace trisq

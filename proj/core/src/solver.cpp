#include "trisq/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace trisq {

namespace {

void validate_form(const MixedForm& form) {
  if (form.terms.empty()) throw std::invalid_argument("form has no terms");
  if (form.terms.size() > kMaxArity) throw std::invalid_argument("form exceeds 8 terms");
  if (form.constraints.size() != form.terms.size()) {
    throw std::invalid_argument("form needs one constraint slot per term");
  }
  for (const MixedTerm& t : form.terms) {
    if (t.coeff == 0) throw std::invalid_argument("zero coefficient");
  }
  for (const VariableConstraint& c : form.constraints) {
    if (c.order && c.order->partner >= form.terms.size()) {
      throw std::invalid_argument("order bond references a missing slot");
    }
    if (c.predicate && c.predicate->second >= form.terms.size()) {
      throw std::invalid_argument("pair predicate references a missing slot");
    }
  }
}

// Smallest admissible index for a slot given its min/parity constraint and an
// extra lower bound.
u64 first_admissible(const VariableConstraint& c, u64 lower) {
  u64 x = std::max(c.min_index, lower);
  if (c.parity == IndexParity::Even && x % 2 == 1) ++x;
  if (c.parity == IndexParity::Odd && x % 2 == 0) ++x;
  return x;
}

struct Search {
  const MixedForm& form;
  std::vector<u64> idx;

  explicit Search(const MixedForm& f) : form(f), idx(f.terms.size(), 0) {}

  // Slots are assigned from the last down to slot 1; slot 0 is resolved by a
  // membership test on the remainder. First hit wins, which makes the result
  // the lexicographically smallest assignment read from the last slot.
  bool run(std::size_t slot, u64 remaining) {
    if (slot == 0) {
      const MixedTerm& term = form.terms[0];
      if (remaining % term.coeff != 0) return false;
      const u64 v = remaining / term.coeff;
      const std::optional<u64> j =
          term.kind == TermKind::Square ? is_square(v) : is_triangular(v);
      if (!j) return false;
      idx[0] = *j;
      return satisfies_constraints(form, idx);
    }
    const MixedTerm& term = form.terms[slot];
    const VariableConstraint& c = form.constraints[slot];
    u64 lower = 0;
    if (c.order && c.order->partner > slot) {
      lower = checked_add(idx[c.order->partner], c.order->min_gap);
    }
    const u64 step = c.parity == IndexParity::Any ? 1 : 2;
    const u64 x_max = max_generator_index(term.kind, remaining / term.coeff);
    for (u64 x = first_admissible(c, lower); x <= x_max; x += step) {
      if (!bonds_from_above_hold(slot, x)) break;  // upper bounds only shrink
      idx[slot] = x;
      const u64 value = term.coeff * generator_value(term.kind, x);
      if (run(slot - 1, remaining - value)) return true;
    }
    return false;
  }

  // Order bonds held by already-assigned slots that point at `slot` impose
  // upper bounds on its index.
  bool bonds_from_above_hold(std::size_t slot, u64 x) const {
    for (std::size_t s = slot + 1; s < form.terms.size(); ++s) {
      const auto& order = form.constraints[s].order;
      if (order && order->partner == slot) {
        if (idx[s] < x || idx[s] - x < order->min_gap) return false;
      }
    }
    return true;
  }
};

struct Counter {
  const MixedForm& form;
  bool ordered;
  bool has_pair_predicates;
  // For unordered counting: the next later slot with the same (coeff, kind),
  // or npos. Indices must be nondecreasing along those chains.
  std::vector<std::size_t> next_same;
  std::vector<u64> idx;
  u64 count = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Counter(const MixedForm& f, bool ord)
      : form(f), ordered(ord), idx(f.terms.size(), 0) {
    has_pair_predicates = false;
    for (const VariableConstraint& c : f.constraints) {
      if (c.predicate) has_pair_predicates = true;
    }
    next_same.assign(f.terms.size(), npos);
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      for (std::size_t j = i + 1; j < f.terms.size(); ++j) {
        if (f.terms[j].coeff == f.terms[i].coeff && f.terms[j].kind == f.terms[i].kind) {
          next_same[i] = j;
          break;
        }
      }
    }
  }

  bool within_group_bound(std::size_t slot, u64 x) const {
    if (ordered) return true;
    const std::size_t j = next_same[slot];
    return j == npos || x <= idx[j];
  }

  void run(std::size_t slot, u64 remaining) {
    const MixedTerm& term = form.terms[slot];
    const VariableConstraint& c = form.constraints[slot];
    if (slot == 0) {
      if (remaining % term.coeff != 0) return;
      const u64 v = remaining / term.coeff;
      const std::optional<u64> j =
          term.kind == TermKind::Square ? is_square(v) : is_triangular(v);
      if (!j || !within_group_bound(0, *j)) return;
      idx[0] = *j;
      if (satisfies_constraints(form, idx)) ++count;
      return;
    }
    u64 lower = 0;
    if (c.order && c.order->partner > slot) {
      lower = checked_add(idx[c.order->partner], c.order->min_gap);
    }
    const u64 step = c.parity == IndexParity::Any ? 1 : 2;
    const u64 x_max = max_generator_index(term.kind, remaining / term.coeff);
    for (u64 x = first_admissible(c, lower); x <= x_max; x += step) {
      if (!within_group_bound(slot, x)) break;
      idx[slot] = x;
      const u64 value = term.coeff * generator_value(term.kind, x);
      run(slot - 1, remaining - value);
    }
  }
};

// --- bitset sieve ---------------------------------------------------------

using Words = std::vector<u64>;

// dst |= src << shift, restricted to dst words [w_lo, w_hi).
void or_shifted(Words& dst, const Words& src, u64 shift, std::size_t w_lo, std::size_t w_hi) {
  const std::size_t q = static_cast<std::size_t>(shift / 64);
  const unsigned r = static_cast<unsigned>(shift % 64);
  for (std::size_t w = std::max(w_lo, q); w < w_hi; ++w) {
    u64 bits = src[w - q] << r;
    if (r != 0 && w - q >= 1) bits |= src[w - q - 1] >> (64 - r);
    dst[w] |= bits;
  }
}

std::vector<u64> constrained_values(const MixedTerm& term, const VariableConstraint& c,
                                    u64 bound) {
  std::vector<u64> values;
  const u64 gen_bound = bound / term.coeff;
  const u64 x_max = max_generator_index(term.kind, gen_bound);
  const u64 step = c.parity == IndexParity::Any ? 1 : 2;
  for (u64 x = first_admissible(c, 0); x <= x_max; x += step) {
    values.push_back(term.coeff * generator_value(term.kind, x));
  }
  return values;
}

}  // namespace

std::vector<TermValue> term_values(TermKind kind, u64 bound) {
  std::vector<TermValue> out;
  const u64 x_max = max_generator_index(kind, bound);
  out.reserve(static_cast<std::size_t>(x_max) + 1);
  for (u64 x = 0; x <= x_max; ++x) out.push_back({x, generator_value(kind, x)});
  return out;
}

std::vector<TermValue> term_values(const MixedTerm& term, const VariableConstraint& constraint,
                                   u64 bound) {
  std::vector<TermValue> out;
  if (term.coeff == 0) throw std::invalid_argument("zero coefficient");
  const u64 x_max = max_generator_index(term.kind, bound / term.coeff);
  const u64 step = constraint.parity == IndexParity::Any ? 1 : 2;
  for (u64 x = first_admissible(constraint, 0); x <= x_max; x += step) {
    out.push_back({x, term.coeff * generator_value(term.kind, x)});
  }
  return out;
}

std::optional<Representation> find_representation(const MixedForm& form, u64 n) {
  validate_form(form);
  Search search(form);
  if (!search.run(form.terms.size() - 1, n)) return std::nullopt;
  Representation rep{std::move(search.idx), n};
  // Soundness gate on every return.
  if (evaluate(form, rep.indices) != n || !satisfies_constraints(form, rep.indices)) {
    throw std::logic_error("find_representation produced an invalid witness");
  }
  return rep;
}

u64 count_representations(const MixedForm& form, u64 n, bool ordered) {
  validate_form(form);
  Counter counter(form, ordered);
  counter.run(form.terms.size() - 1, n);
  return counter.count;
}

u64 ewell_t2(u64 n) {
  const u64 arg = checked_add(checked_mul(4, n), 1);
  const u64 d1 = divisor_count_mod4(arg, 1);
  const u64 d3 = divisor_count_mod4(arg, 3);
  if (d1 < d3) throw std::logic_error("d_1(4n+1) < d_3(4n+1)");
  return d1 - d3;
}

ExceptionReport exception_set(const MixedForm& form, u64 bound, const ScanOptions& opts) {
  validate_form(form);
  if (bound > opts.bound_ceiling) {
    throw std::length_error("scan bound exceeds the configured ceiling");
  }
  if (form.has_cross_variable_constraints()) {
    throw std::invalid_argument("exception_set cannot honor cross-variable constraints");
  }

  const std::size_t words = static_cast<std::size_t>(bound / 64) + 1;
  const std::size_t k = form.terms.size();

  // Partial sums of every term but the last.
  Words partial(words, 0);
  partial[0] = 1;  // the empty sum
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Words next(words, 0);
    for (u64 v : constrained_values(form.terms[i], form.constraints[i], bound)) {
      or_shifted(next, partial, v, 0, words);
    }
    partial.swap(next);
  }

  // Probe with the last term, partitioned over disjoint word ranges. The OR
  // merge is order-independent, so the result matches a sequential scan.
  Words reach(words, 0);
  const std::vector<u64> last =
      constrained_values(form.terms[k - 1], form.constraints[k - 1], bound);
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || words < 2 * threads) {
    for (u64 v : last) or_shifted(reach, partial, v, 0, words);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (words + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(words, t * chunk);
      const std::size_t hi = std::min(words, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (u64 v : last) or_shifted(reach, partial, v, lo, hi);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  ExceptionReport report{form, bound, {}};
  for (u64 n = 0; n <= bound; ++n) {
    if ((reach[static_cast<std::size_t>(n / 64)] >> (n % 64) & 1) == 0) {
      report.exceptions.push_back(n);
    }
  }
  return report;
}

std::string to_string(UniversalityStatus status) {
  switch (status) {
    case UniversalityStatus::Universal:
      return "universal";
    case UniversalityStatus::NotUniversal:
      return "not-universal";
    case UniversalityStatus::AlmostUniversal:
      return "almost-universal";
    case UniversalityStatus::AsymptoticallyUniversal:
      return "asymptotically-universal";
    case UniversalityStatus::NotAsymptoticallyUniversal:
      return "not-asymptotically-universal";
    case UniversalityStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

UniversalityVerdict finite_target_check(const MixedForm& form, const std::vector<u64>& targets) {
  UniversalityVerdict verdict;
  bool all = true;
  for (u64 target : targets) {
    FiniteCheck check{target, find_representation(form, target)};
    all = all && check.witness.has_value();
    verdict.finite_checks.push_back(std::move(check));
  }
  verdict.status = all ? UniversalityStatus::Universal : UniversalityStatus::NotUniversal;
  return verdict;
}

void validate_coeffs(const std::vector<u64>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  if (coeffs.size() > kMaxArity) throw std::invalid_argument("more than 8 coefficients");
  for (u64 c : coeffs) {
    if (c == 0) throw std::invalid_argument("zero coefficient");
  }
}

}  // namespace

UniversalityVerdict kane_triangular_universal(const std::vector<u64>& coeffs) {
  validate_coeffs(coeffs);
  MixedForm form;
  for (u64 c : coeffs) form.terms.push_back({c, TermKind::Triangular});
  form.constraints.resize(form.terms.size());
  return finite_target_check(form, {1, 2, 4, 5, 8});
}

UniversalityVerdict kane_odd_square_check(const std::vector<u64>& coeffs) {
  validate_coeffs(coeffs);
  MixedForm form;
  u64 s = 0;
  for (u64 c : coeffs) {
    form.terms.push_back({c, TermKind::Square});
    s = checked_add(s, c);
  }
  form.constraints.resize(form.terms.size());
  for (VariableConstraint& c : form.constraints) c.parity = IndexParity::Odd;
  std::vector<u64> targets;
  for (u64 offset : {8, 16, 32, 40, 64}) targets.push_back(checked_add(s, offset));
  return finite_target_check(form, targets);
}

UniversalityVerdict asymptotically_universal(const MixedForm& form) {
  validate_form(form);
  if (form.arity() != 3) {
    throw std::invalid_argument("asymptotic-universality criteria require a ternary form");
  }
  const MixedForm canon = canonicalize(form);
  const std::string pattern = canon.kind_pattern();
  if (pattern == "sss") {
    throw std::invalid_argument("no criterion covers three squares");
  }
  if (canon.coeff_gcd() != 1) {
    throw std::invalid_argument("criteria require gcd(a, b, c) = 1");
  }
  const u64 a = canon.terms[0].coeff;
  const u64 b = canon.terms[1].coeff;
  const u64 c = canon.terms[2].coeff;

  auto neg = [](u64 v) {
    if (v > static_cast<u64>(std::numeric_limits<i64>::max())) {
      throw std::overflow_error("coefficient product exceeds the signed range");
    }
    return -static_cast<i64>(v);
  };
  auto v2 = [](u64 v) { return two_adic_split(v).order; };

  UniversalityVerdict verdict;
  auto relate = [&](const std::string& label, i64 value, u64 modulus) {
    verdict.residue_checks.push_back({label, value, modulus, residue_rel(value, modulus)});
  };

  if (pattern == "ttt") {
    relate("-bc R a'", neg(checked_mul(b, c)), odd_part(a));
    relate("-ac R b'", neg(checked_mul(a, c)), odd_part(b));
    relate("-ab R c'", neg(checked_mul(a, b)), odd_part(c));
  } else if (pattern == "stt") {
    relate("-bc R a'", neg(checked_mul(b, c)), odd_part(a));
    relate("-2ac R b'", neg(checked_mul(2, checked_mul(a, c))), odd_part(b));
    relate("-2ab R c'", neg(checked_mul(2, checked_mul(a, b))), odd_part(c));
    verdict.side_conditions.push_back(
        {"b % 4 != 0 or c % 4 != 0", b % 4 != 0 || c % 4 != 0});
  } else {  // sst
    relate("-2bc R a'", neg(checked_mul(2, checked_mul(b, c))), odd_part(a));
    relate("-2ac R b'", neg(checked_mul(2, checked_mul(a, c))), odd_part(b));
    relate("-ab R c'", neg(checked_mul(a, b)), odd_part(c));
    const bool holds = c % 4 != 0 || (v2(c) == 2 && v2(checked_mul(a, b)) == 1);
    verdict.side_conditions.push_back(
        {"c % 4 != 0, or v2(c) = 2 and v2(ab) = 1", holds});
  }

  bool all = true;
  for (const ResidueCheck& rc : verdict.residue_checks) all = all && rc.holds;
  for (const SideCondition& sc : verdict.side_conditions) all = all && sc.holds;
  verdict.status = all ? UniversalityStatus::AsymptoticallyUniversal
                       : UniversalityStatus::NotAsymptoticallyUniversal;
  return verdict;
}

}  // namespace trisq

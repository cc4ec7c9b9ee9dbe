#include "trisq/form.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace trisq {

bool VariableConstraint::admits(u64 index) const {
  if (index < min_index) return false;
  switch (parity) {
    case IndexParity::Any:
      return true;
    case IndexParity::Even:
      return index % 2 == 0;
    case IndexParity::Odd:
      return index % 2 == 1;
  }
  return false;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

std::string MixedForm::kind_pattern() const {
  std::string pattern;
  pattern.reserve(terms.size());
  for (const MixedTerm& t : terms) {
    pattern.push_back(t.kind == TermKind::Square ? 's' : 't');
  }
  return pattern;
}

u64 MixedForm::coeff_gcd() const {
  u64 g = 0;
  for (const MixedTerm& t : terms) g = std::gcd(g, t.coeff);
  return g;
}

bool MixedForm::has_cross_variable_constraints() const {
  for (const VariableConstraint& c : constraints) {
    if (c.predicate || c.order) return true;
  }
  return false;
}

MixedForm parse_form(std::string_view text) {
  MixedForm form;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (!expect_term) {
      if (text[i] != '+') {
        throw ParseError(std::string("expected '+' before '") + text[i] + "'", i);
      }
      ++i;
      expect_term = true;
      continue;
    }
    const std::size_t term_start = i;
    u64 coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = checked_add(checked_mul(coeff, 10), static_cast<u64>(text[i] - '0'));
        if (coeff > kMaxInput) throw ParseError("coefficient exceeds 2^62", term_start);
        ++i;
      }
      if (coeff == 0) throw ParseError("zero coefficient", term_start);
    }
    skip_ws();
    if (i == text.size()) throw ParseError("term is missing its generator letter", i);
    const char kind_char = text[i];
    TermKind kind;
    if (kind_char == 's') {
      kind = TermKind::Square;
    } else if (kind_char == 't') {
      kind = TermKind::Triangular;
    } else {
      throw ParseError(std::string("expected 's' or 't', found '") + kind_char + "'", i);
    }
    ++i;
    form.terms.push_back({coeff, kind});
    if (form.terms.size() > kMaxArity) {
      throw ParseError("form exceeds " + std::to_string(kMaxArity) + " terms", term_start);
    }
    expect_term = false;
  }
  if (expect_term) {
    throw ParseError(form.terms.empty() ? "empty form" : "trailing '+' without a term",
                     text.size());
  }
  form.constraints.resize(form.terms.size());
  return form;
}

std::string render_form(const MixedForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    if (i > 0) out.push_back('+');
    if (form.terms[i].coeff != 1) out += std::to_string(form.terms[i].coeff);
    out.push_back(form.terms[i].kind == TermKind::Square ? 's' : 't');
  }
  return out;
}

MixedForm canonicalize(MixedForm form) {
  const std::size_t k = form.terms.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const MixedTerm& ta = form.terms[a];
    const MixedTerm& tb = form.terms[b];
    if (ta.kind != tb.kind) return ta.kind == TermKind::Square;
    return ta.coeff < tb.coeff;
  });
  std::vector<std::size_t> new_slot(k);
  for (std::size_t pos = 0; pos < k; ++pos) new_slot[order[pos]] = pos;

  MixedForm out;
  out.terms.reserve(k);
  out.constraints.reserve(k);
  for (std::size_t pos = 0; pos < k; ++pos) {
    out.terms.push_back(form.terms[order[pos]]);
    VariableConstraint c = form.constraints[order[pos]];
    if (c.predicate) c.predicate->second = new_slot[c.predicate->second];
    if (c.order) c.order->partner = new_slot[c.order->partner];
    out.constraints.push_back(std::move(c));
  }
  return out;
}

u64 generator_value(TermKind kind, u64 index) {
  return kind == TermKind::Square ? square(index) : triangular(index);
}

u64 max_generator_index(TermKind kind, u64 bound) {
  if (kind == TermKind::Square) return isqrt(bound);
  u64 k = static_cast<u64>((std::sqrt(8.0 * static_cast<double>(bound) + 1.0) - 1.0) / 2.0);
  while (k > 0 && triangular(k) > bound) --k;
  while (triangular(k + 1) <= bound) ++k;
  return k;
}

u64 evaluate(const MixedForm& form, const std::vector<u64>& indices) {
  if (indices.size() != form.terms.size()) {
    throw std::invalid_argument("evaluate: one index per term required");
  }
  u64 sum = 0;
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    sum = checked_add(sum,
                      checked_mul(form.terms[i].coeff,
                                  generator_value(form.terms[i].kind, indices[i])));
  }
  return sum;
}

bool satisfies_constraints(const MixedForm& form, const std::vector<u64>& indices) {
  if (indices.size() != form.terms.size()) return false;
  for (std::size_t i = 0; i < form.constraints.size(); ++i) {
    const VariableConstraint& c = form.constraints[i];
    if (!c.admits(indices[i])) return false;
    if (c.order) {
      const u64 partner = indices[c.order->partner];
      if (indices[i] < partner || indices[i] - partner < c.order->min_gap) return false;
    }
    if (c.predicate) {
      const u64 x = indices[i];
      const u64 y = indices[c.predicate->second];
      switch (c.predicate->first) {
        case PairPredicate::DistinctParityOrEqualPositive:
          if (!((x % 2) != (y % 2) || (x == y && x > 0))) return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace trisq

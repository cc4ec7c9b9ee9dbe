#include "trisq/three_squares.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <vector>

#include "trisq/solver.hpp"

namespace trisq {

namespace {

using u128 = unsigned __int128;

std::string describe(u64 n, unsigned pow4, u64 m) {
  return std::to_string(n) + " = 4^" + std::to_string(pow4) + " * (8*" + std::to_string(m) +
         " + 7) is not a sum of three or fewer squares";
}

MixedForm make_form(std::initializer_list<MixedTerm> terms) {
  MixedForm f;
  f.terms = terms;
  f.constraints.resize(f.terms.size());
  return f;
}

constexpr TermKind S = TermKind::Square;
constexpr TermKind T = TermKind::Triangular;

// One residue-class pattern: solve m - solve_offset against the form, then
// map the indices to square roots of the core. Cheaper patterns come first.
struct Pattern {
  const char* tag;
  MixedForm form;
  u64 solve_offset;
  std::function<std::array<u64, 3>(const std::vector<u64>&)> roots;
};

const std::vector<Pattern>& patterns_for(unsigned r) {
  // n1 = 8m + 1
  static const std::vector<Pattern> r1 = [] {
    std::vector<Pattern> p;
    p.push_back({"8m+1: t_x + 2s_y", make_form({{1, T}, {2, S}}), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 4 * i[1], 0};
                 }});
    MixedForm two_squares = make_form({{1, T}, {2, S}, {2, S}});
    two_squares.constraints[1].order = OrderBond{2, 0};  // y >= z
    two_squares.constraints[1].min_index = 1;
    two_squares.constraints[2].min_index = 1;
    p.push_back({"8m+1: t_x + 2s_y + 2s_z", std::move(two_squares), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 4 * i[1], 4 * i[2]};
                 }});
    // s_z + s_{z+1} = 4 t_z + 1, so this pattern solves m - 1 = t + 4t + 4t.
    MixedForm adjacent = make_form({{1, T}, {4, T}, {4, T}});
    adjacent.constraints[1].order = OrderBond{2, 0};  // y >= z
    p.push_back({"8m+1: t_x + 4t_y + s_z + s_{z+1}", std::move(adjacent), 1,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * (2 * i[1] + 1), 2 * (2 * i[2] + 1)};
                 }});
    return p;
  }();
  // n1 = 8m + 2
  static const std::vector<Pattern> r2 = [] {
    std::vector<Pattern> p;
    MixedForm pair = make_form({{1, T}, {1, T}});
    pair.constraints[1].order = OrderBond{0, 0};  // x <= y
    p.push_back({"8m+2: t_x + t_y", std::move(pair), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * i[1] + 1, 0};
                 }});
    MixedForm sq = make_form({{2, S}, {1, T}});
    sq.constraints[0].min_index = 1;
    p.push_back({"8m+2: 2s_x + t_y", std::move(sq), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {4 * i[0], 2 * i[1] + 1, 1};
                 }});
    MixedForm triple = make_form({{1, T}, {1, T}, {2, S}});
    triple.constraints[0].min_index = 1;
    triple.constraints[1].min_index = 1;
    triple.constraints[1].order = OrderBond{0, 0};  // x <= y
    triple.constraints[2].min_index = 1;
    p.push_back({"8m+2: t_x + t_y + 2s_z", std::move(triple), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * i[1] + 1, 4 * i[2]};
                 }});
    return p;
  }();
  // n1 = 8m + 3
  static const std::vector<Pattern> r3 = [] {
    std::vector<Pattern> p;
    p.push_back({"8m+3: t_x + t_y + t_z", make_form({{1, T}, {1, T}, {1, T}}), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * i[1] + 1, 2 * i[2] + 1};
                 }});
    return p;
  }();
  // n1 = 8m + 5
  static const std::vector<Pattern> r5 = [] {
    std::vector<Pattern> p;
    p.push_back({"8m+5: t_x + 4t_z", make_form({{1, T}, {4, T}}), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * (2 * i[1] + 1), 0};
                 }});
    MixedForm mid = make_form({{1, T}, {2, S}, {4, T}});
    mid.constraints[1].order = OrderBond{2, 1};  // y >= z + 1
    p.push_back({"8m+5: t_x + 2s_y + 4t_z", std::move(mid), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 4 * i[1], 2 * (2 * i[2] + 1)};
                 }});
    MixedForm last = make_form({{1, T}, {4, T}, {2, S}});
    last.constraints[1].min_index = 1;
    last.constraints[1].order = OrderBond{2, 0};  // y >= z
    last.constraints[2].min_index = 1;
    p.push_back({"8m+5: t_x + 4t_y + 2s_z", std::move(last), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 4 * i[1] + 2, 4 * i[2]};
                 }});
    return p;
  }();
  // n1 = 8m + 6
  static const std::vector<Pattern> r6 = [] {
    std::vector<Pattern> p;
    p.push_back({"8m+6: 4t_x + t_y", make_form({{4, T}, {1, T}}), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {4 * i[0] + 2, 2 * i[1] + 1, 1};
                 }});
    MixedForm pair = make_form({{1, T}, {1, T}});
    pair.constraints[0].min_index = 1;
    pair.constraints[1].min_index = 1;
    pair.constraints[1].order = OrderBond{0, 0};  // x <= y
    p.push_back({"8m+6: t_x + t_y", std::move(pair), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {2 * i[0] + 1, 2 * i[1] + 1, 2};
                 }});
    MixedForm triple = make_form({{4, T}, {1, T}, {1, T}});
    triple.constraints[1].min_index = 1;
    triple.constraints[1].order = OrderBond{2, 0};  // y >= z
    triple.constraints[2].min_index = 1;
    p.push_back({"8m+6: 4t_x + t_y + t_z", std::move(triple), 0,
                 [](const std::vector<u64>& i) -> std::array<u64, 3> {
                   return {4 * i[0] + 2, 2 * i[1] + 1, 2 * i[2] + 1};
                 }});
    return p;
  }();

  switch (r) {
    case 1:
      return r1;
    case 2:
      return r2;
    case 3:
      return r3;
    case 5:
      return r5;
    case 6:
      return r6;
    default:
      throw std::logic_error("no pattern table for residue " + std::to_string(r));
  }
}

// Direct bounded search over x >= y >= z, used only when the pattern table
// misses.
std::optional<std::array<u64, 3>> direct_search(u64 n) {
  for (u64 x = isqrt(n);; --x) {
    const u64 x2 = x * x;
    if (3 * x2 < n) break;
    const u64 rem = n - x2;
    for (u64 y = std::min(x, isqrt(rem));; --y) {
      const u64 y2 = y * y;
      if (2 * y2 < rem) break;
      if (std::optional<u64> z = is_square(rem - y2); z && *z <= y) {
        return std::array<u64, 3>{x, y, *z};
      }
      if (y == 0) break;
    }
    if (x == 0) break;
  }
  return std::nullopt;
}

}  // namespace

IneligibleNumberError::IneligibleNumberError(u64 n, unsigned pow4, u64 m)
    : std::domain_error(describe(n, pow4, m)), n_(n), pow4_(pow4), m_(m) {}

bool is_eligible(u64 n) {
  if (n == 0) return true;
  return four_adic_split(n).core % 8 != 7;
}

ThreeSquareDecomp decompose(u64 n) {
  if (n == 0) return {0, {0, 0, 0}, "zero"};
  const FourAdicSplit split = four_adic_split(n);
  if (split.core % 8 == 7) {
    throw IneligibleNumberError(n, split.exponent, (split.core - 7) / 8);
  }
  const u64 m = split.core / 8;
  const unsigned r = static_cast<unsigned>(split.core % 8);

  std::array<u64, 3> roots{};
  std::string tag;
  for (const Pattern& pattern : patterns_for(r)) {
    if (m < pattern.solve_offset) continue;
    if (std::optional<Representation> rep =
            find_representation(pattern.form, m - pattern.solve_offset)) {
      roots = pattern.roots(rep->indices);
      tag = pattern.tag;
      break;
    }
  }
  if (tag.empty()) {
    // The residue-class theorems guarantee a match; reaching this point means
    // a constraint was transcribed wrong somewhere.
    std::cerr << "decompose: pattern table missed core " << split.core << " (n = " << n
              << "), falling back to direct search\n";
    std::optional<std::array<u64, 3>> found = direct_search(split.core);
    if (!found) throw std::logic_error("direct search failed on an eligible number");
    roots = *found;
    tag = "oracle-fallback";
  }

  const u64 scale = u64{1} << split.exponent;
  for (u64& root : roots) root = checked_mul(root, scale);
  std::sort(roots.rbegin(), roots.rend());

  if (u128{roots[0]} * roots[0] + u128{roots[1]} * roots[1] + u128{roots[2]} * roots[2] != n) {
    throw std::logic_error("decompose produced a triple that does not sum to n");
  }
  return {n, roots, std::move(tag)};
}

u64 r3_count(u64 n) {
  if (n > kMaxInput) throw std::out_of_range("r3_count: input exceeds 2^62");
  u64 count = 0;
  for (u64 x = 0; x * x <= n; ++x) {
    const u64 rem_x = n - x * x;
    for (u64 y = 0; y * y <= rem_x; ++y) {
      if (is_square(rem_x - y * y)) ++count;
    }
  }
  return count;
}

u64 p3_count(u64 n, bool allow_zero) {
  if (n > kMaxInput) throw std::out_of_range("p3_count: input exceeds 2^62");
  u64 count = 0;
  const u64 z0 = allow_zero ? 0 : 1;
  for (u64 z = z0; 3 * z * z <= n; ++z) {
    const u64 rem_z = n - z * z;
    for (u64 y = z; 2 * y * y <= rem_z; ++y) {
      if (std::optional<u64> x = is_square(rem_z - y * y); x && *x >= y) ++count;
    }
  }
  return count;
}

}  // namespace trisq

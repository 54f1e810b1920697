#pragma once

// Pattern-avoidance descriptions of pushall sortability on restricted families.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace pushall {

struct PatternBasis {
  std::string name;
  std::vector<Permutation> patterns;
};

namespace detail {

inline PatternBasis make_basis(std::string name, std::initializer_list<const char*> texts) {
  PatternBasis b{std::move(name), {}};
  for (const char* t : texts) b.patterns.push_back(parse(t));
  return b;
}

}  // namespace detail

// Obstructions among direct-sum-decomposable permutations.
inline const PatternBasis& basis_plus() {
  static const PatternBasis b = detail::make_basis(
      "B+", {"132465",  "135246",  "142536",  "142635",  "143625",  "153624",  "213546",  "214365",
             "214635",  "215364",  "241365",  "314265",  "315246",  "315426",  "351426",  "1354627",
             "1365724", "1436527", "1473526", "1546273", "1573246", "1624357", "1627354", "1632547",
             "1632574", "1642573", "1657243", "2465137", "2631547", "2635147", "3541627", "4621357",
             "4652137", "5136427", "5162437", "21687435", "54613287"});
  return b;
}

// Direct sums whose first and last blocks are both nontrivial.
inline const PatternBasis& basis_b1() {
  static const PatternBasis b = detail::make_basis(
      "B1", {"132465", "213546", "214365", "214635", "215364", "241365", "314265", "1657243", "4652137", "21687435",
             "54613287"});
  return b;
}

// sigma such that 1 (+) sigma is sortable.
inline const PatternBasis& basis_b2() {
  static const PatternBasis b = detail::make_basis(
      "B2", {"21354", "24135", "31425", "31524", "32514", "42513", "243516", "254613", "325416", "362415", "435162",
             "462135", "513246", "516243", "521436", "521463", "531462", "546132", "4652137"});
  return b;
}

// sigma such that sigma (+) 1 is sortable.
inline const PatternBasis& basis_b3() {
  static const PatternBasis b = detail::make_basis(
      "B3", {"13524", "14253", "21354", "31524", "31542", "35142", "135462", "143652", "162435", "163254", "246513",
             "263154", "263514", "354162", "462135", "465213", "513642", "516243", "1657243"});
  return b;
}

// Basis of the sortable separable permutations.
inline const PatternBasis& basis_separable() {
  static const PatternBasis b = detail::make_basis(
      "B", {"132465", "213546", "214365", "1354627", "1436527", "1624357", "1632547", "1657243", "4652137",
            "21687435", "54613287"});
  return b;
}

// Minimal permutations containing both 132 and 213.
inline const PatternBasis& basis_132_213() {
  static const PatternBasis b =
      detail::make_basis("132-213", {"1324", "2143", "2413", "3142", "465213", "546132"});
  return b;
}

inline std::vector<const PatternBasis*> all_bases() {
  return {&basis_plus(), &basis_b1(), &basis_b2(), &basis_b3(), &basis_separable(), &basis_132_213()};
}

inline bool is_separable(const Permutation& sigma) { return avoids(sigma, {parse("2413"), parse("3142")}); }

inline std::optional<bool> pushall_by_patterns_plus(const Permutation& sigma) {
  if (!is_plus_decomposable(sigma)) return std::nullopt;
  return avoids(sigma, basis_plus().patterns);
}

inline std::optional<bool> pushall_by_patterns_separable(const Permutation& sigma) {
  if (!is_separable(sigma)) return std::nullopt;
  return avoids(sigma, basis_separable().patterns);
}

// sigma = alpha (+) beta with alpha in Av(first), beta in Av(second); the
// split may be trivial on either side.
inline bool in_plus_of_avoiders(const Permutation& sigma, const Permutation& first, const Permutation& second) {
  const auto& v = sigma.values();
  const std::size_t n = v.size();
  int hi = 0;
  for (std::size_t cut = 0; cut <= n; ++cut) {
    if (cut > 0) hi = std::max(hi, v[cut - 1]);
    if (static_cast<std::size_t>(hi) != cut) continue;
    const Permutation left = Permutation::normalize({v.begin(), v.begin() + cut});
    const Permutation right = Permutation::normalize({v.begin() + cut, v.end()});
    if (!contains_pattern(left, first) && !contains_pattern(right, second)) return true;
  }
  return false;
}

inline bool sufficient_pushall_cs(const Permutation& sigma) {
  const Permutation p132 = parse("132"), p213 = parse("213");
  return in_plus_of_avoiders(sigma, p132, p213) || in_plus_of_avoiders(sigma, p213, p132);
}

}  // namespace pushall

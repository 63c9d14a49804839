#pragma once

/**
 * @file numsg.hpp
 * @brief Numerical semigroups: membership, Frobenius number, Apery sets,
 * pseudo-Frobenius numbers and symmetry.
 *
 * Membership is decided by the Apery set for the multiplicity a_1, computed
 * once at construction as shortest paths over the residues mod a_1: x is a
 * member iff x >= Ape(a_1)[x mod a_1].
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "error.hpp"

namespace ngcurves {

/// Largest accepted generator.
inline constexpr Int kMaxGenerator = 1'000'000;

/// Largest lazily grown membership table.
inline constexpr std::size_t kMaxSieveSize = std::size_t{1} << 27;

/// Apery set of S with respect to a nonzero element s.
///
/// elements[r] is the least member of S congruent to r mod s, except that
/// the class-0 representative is s itself rather than 0.
struct AperySet1D {
  Int base = 0;
  std::vector<Int> elements;

  std::vector<Int> sorted() const {
    std::vector<Int> out = elements;
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

inline void validate_increasing_coprime(std::span<const Int> values, std::size_t min_len) {
  if (values.size() < min_len) {
    throw Error(Errc::too_short, "need at least " + std::to_string(min_len) + " values");
  }
  for (Int v : values) {
    if (v <= 0) throw Error(Errc::non_positive, "values must be positive");
    if (v > kMaxGenerator) {
      throw Error(Errc::input_too_large, "values must not exceed " + std::to_string(kMaxGenerator));
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      throw Error(Errc::not_strictly_increasing, "values must be strictly increasing");
    }
  }
  if (gcd_of(values) != 1) throw Error(Errc::gcd_not_one, "gcd must be 1");
}

/// For each residue r mod m, the least sum of generators congruent to r,
/// paired with the fewest generators reaching that least sum. Dijkstra on
/// the residues with lexicographic (value, parts) weights: every prefix of a
/// representation of a least sum is itself least in its class.
inline std::vector<std::pair<Int, Int>> least_residues(std::span<const Int> gens, Int m) {
  constexpr Int kInf = std::numeric_limits<Int>::max();
  using Entry = std::pair<std::pair<Int, Int>, Int>;  // ((value, parts), residue)
  std::vector<std::pair<Int, Int>> best(static_cast<std::size_t>(m), {kInf, kInf});
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  best[0] = {0, 0};
  queue.push({{0, 0}, 0});
  while (!queue.empty()) {
    const auto [dist, r] = queue.top();
    queue.pop();
    if (dist != best[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const std::pair<Int, Int> next{checked_add(dist.first, g), dist.second + 1};
      const auto slot = static_cast<std::size_t>((r + g) % m);
      if (next < best[slot]) {
        best[slot] = next;
        queue.push({next, static_cast<Int>(slot)});
      }
    }
  }
  return best;
}

}  // namespace detail

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> generators) : gens_(std::move(generators)) {
    detail::validate_increasing_coprime(gens_, 1);
    for (const auto& [value, parts] : detail::least_residues(gens_, gens_.front())) ape_.push_back(value);
    conductor_ = *std::max_element(ape_.begin(), ape_.end()) - gens_.front() + 1;
  }

  const std::vector<Int>& generators() const noexcept { return gens_; }
  Int multiplicity() const noexcept { return gens_.front(); }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    return n >= ape_[static_cast<std::size_t>(n % gens_.front())];
  }

  /// Largest integer outside S, or -1 when S is all of N.
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int conductor() const noexcept { return conductor_; }

  AperySet1D apery(Int s) const {
    if (s <= 0 || !contains(s)) {
      throw Error(Errc::base_not_in_semigroup, "Apery base must be a nonzero element of S");
    }
    AperySet1D out{s, {}};
    out.elements.reserve(static_cast<std::size_t>(s));
    for (const auto& [value, parts] : detail::least_residues(gens_, s)) out.elements.push_back(value);
    out.elements[0] = s;
    return out;
  }

  /// Gaps x with x + a_i in S for every generator a_i.
  std::vector<Int> pseudo_frobenius() const {
    std::vector<Int> out;
    for (Int x = 1; x < conductor_; ++x) {
      if (contains(x)) continue;
      bool all = std::all_of(gens_.begin(), gens_.end(), [&](Int g) { return contains(x + g); });
      if (all) out.push_back(x);
    }
    return out;
  }

  /// Half of the integers below the conductor are members.
  bool is_symmetric() const noexcept {
    Int below = 0;
    for (Int i = 0; i < conductor_; ++i) below += contains(i) ? 1 : 0;
    return 2 * below == conductor_;
  }

 private:
  std::vector<Int> gens_;
  std::vector<Int> ape_;  // least member per residue mod a_1
  Int conductor_ = 0;
};

inline NumericalSemigroup make_numerical_semigroup(std::vector<Int> gens) {
  return NumericalSemigroup(std::move(gens));
}

}  // namespace ngcurves

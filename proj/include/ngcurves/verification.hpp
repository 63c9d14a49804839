#pragma once

/**
 * @file verification.hpp
 * @brief Brute-force cross-checks for the production algorithms.
 *
 * Nothing here touches Curve::contains or CanonicalModule: membership is
 * recomputed from per-degree reachable sets or raw multiset enumeration, and
 * the canonical module is tested against its definition as -(C_1 cap C_2).
 * These routines are exponential or quadratic in places and are only meant
 * for small inputs.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "classify.hpp"
#include "curve.hpp"
#include "error.hpp"
#include "numsg.hpp"

namespace ngcurves::verification {

inline constexpr Int kMaxOracleDegree = 8;
inline constexpr Int kMaxLayeredAn = 15;
inline constexpr Int kMaxPfFrobenius = 10'000;

/// Enumerates every multiset of exactly deg(p) curve generators.
inline bool brute_curve_contains(const Curve& c, Point p) {
  const Int n = c.an();
  if (detail::mod(p.x + p.y, n) != 0) return false;
  const Int d = detail::floor_div(p.x + p.y, n);
  if (d < 0) return false;
  if (d > kMaxOracleDegree) throw Error(Errc::degree_too_large_for_oracle, "oracle handles degree <= 8 only");
  const auto gens = c.generators();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    Point sum{0, 0};
    for (std::size_t i : idx) sum = sum + gens[i];
    if (sum == p) return true;
    // next non-decreasing index tuple
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) return false;
    const std::size_t v = idx[k - 1] + 1;
    for (std::size_t j = k - 1; j < idx.size(); ++j) idx[j] = v;
  }
}

/// Membership in S_a via the sets of first coordinates reachable with exactly
/// d summands from {0, a_1, ..., a_n}.
class LayeredMembership {
 public:
  explicit LayeredMembership(const Sequence& seq) : steps_{0} {
    steps_.insert(steps_.end(), seq.values().begin(), seq.values().end());
    an_ = seq.back();
    layers_.push_back({1});
  }

  bool contains(Point p) {
    if (p.x < 0 || p.y < 0) return false;
    if ((p.x + p.y) % an_ != 0) return false;
    const Int d = (p.x + p.y) / an_;
    if (d > 100'000) throw Error(Errc::oracle_range_exceeded, "layered membership degree too large");
    while (static_cast<Int>(layers_.size()) <= d) extend();
    return layers_[static_cast<std::size_t>(d)][static_cast<std::size_t>(p.x)] != 0;
  }

 private:
  void extend() {
    const auto& prev = layers_.back();
    std::vector<std::uint8_t> next(prev.size() + static_cast<std::size_t>(an_), 0);
    for (std::size_t x = 0; x < prev.size(); ++x) {
      if (!prev[x]) continue;
      for (Int s : steps_) next[x + static_cast<std::size_t>(s)] = 1;
    }
    layers_.push_back(std::move(next));
  }

  std::vector<Int> steps_;
  Int an_ = 1;
  std::vector<std::vector<std::uint8_t>> layers_;
};

inline void require_cm(const Curve& c) {
  if (!c.is_cm()) throw Error(Errc::not_cohen_macaulay, "S_a is not Cohen-Macaulay");
}

/// Shift count after which -w + m f_i has settled for both axis directions.
inline Int default_shift_bound(const Curve& c, Point w) {
  const Int n = c.an();
  const Int f1 = c.s1().frobenius();
  const Int f2 = c.s2().frobenius();
  const Int g2 = c.s2().multiplicity();
  const Int deg = detail::floor_div(w.x + w.y, n);
  const Int base = (f1 + f2) / n + std::abs(deg) + 2;
  // slack for Apery elements needing many small summands and for far-off points
  const Int slack = (f1 + n) / c.sequence().front() + (f2 + n) / g2 + (std::abs(w.x) + std::abs(w.y)) / n + 2;
  return base + slack;
}

/// -w lies in C_1 cap C_2: no shift of -w by a multiple of either axis
/// generator, up to m_bound, enters S_a.
inline bool omega_contains_definitional(const Curve& c, Point w, std::optional<Int> m_bound,
                                        LayeredMembership& mem) {
  require_cm(c);
  if (!c.lattice_contains(w)) return false;
  const Int bound = m_bound.value_or(default_shift_bound(c, w));
  const Point neg = -w;
  for (Int m = 0; m <= bound; ++m) {
    if (mem.contains(neg + m * c.horizontal())) return false;
    if (mem.contains(neg + m * c.vertical())) return false;
  }
  return true;
}

inline bool omega_contains_definitional(const Curve& c, Point w, std::optional<Int> m_bound = std::nullopt) {
  LayeredMembership mem(c.sequence());
  return omega_contains_definitional(c, w, m_bound, mem);
}

/// Minimal generators of the canonical module found layer by layer: a member
/// of degree d is generated when it is a member of degree d-1 plus a curve
/// generator. Runs through degree 4 and requires the last two layers to be
/// fully generated.
inline std::set<Point> canonical_generators_layered(const Curve& c) {
  require_cm(c);
  const Int n = c.an();
  if (n > kMaxLayeredAn) throw Error(Errc::oracle_range_exceeded, "layered oracle handles a_n <= 15 only");
  const Int f1 = c.s1().frobenius();
  const Int f2 = c.s2().frobenius();
  const Int dmin = -detail::floor_div(f1 + f2, n);  // ceil(-(f1 + f2) / n)
  const Int dmax = 4;
  LayeredMembership mem(c.sequence());

  std::set<Point> prev;
  std::set<Point> out;
  for (Int d = dmin; d <= dmax; ++d) {
    std::set<Point> layer;
    // x >= -f1 and y >= -f2 for any member
    for (Int x = -f1; x <= d * n + f2; ++x) {
      const Point w{x, d * n - x};
      if (omega_contains_definitional(c, w, std::nullopt, mem)) layer.insert(w);
    }
    for (Point w : layer) {
      bool generated = false;
      for (Point g : c.generators()) {
        if (prev.count(w - g)) {
          generated = true;
          break;
        }
      }
      if (generated) continue;
      if (d >= dmax - 1) {
        throw Error(Errc::oracle_range_exceeded, "new canonical generator at degree " + std::to_string(d));
      }
      out.insert(w);
    }
    prev = std::move(layer);
  }
  return out;
}

/// Pseudo-Frobenius numbers straight from the definition.
inline std::vector<Int> pf_brute(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  if (f > kMaxPfFrobenius) throw Error(Errc::oracle_range_exceeded, "pf_brute handles F(S) <= 10^4 only");
  std::vector<Int> out;
  for (Int x = 1; x <= f; ++x) {
    if (s.contains(x)) continue;
    bool pf = true;
    for (Int t = 1; t <= s.conductor() && pf; ++t)
      if (s.contains(t) && !s.contains(x + t)) pf = false;
    if (pf) out.push_back(x);
  }
  return out;
}

/// Cross-checks a classification record against the oracles. Returns one
/// message per mismatch; empty means everything agreed.
inline std::vector<std::string> verify(const Curve& c, const ClassificationRecord& r) {
  std::vector<std::string> bad;
  const Int n = c.an();
  LayeredMembership mem(c.sequence());

  const Int max_deg = std::min<Int>(4, kMaxOracleDegree);
  for (Int d = 0; d <= max_deg; ++d) {
    for (Int x = 0; x <= d * n; ++x) {
      const Point p{x, d * n - x};
      const bool prod = c.contains(p);
      if (prod != brute_curve_contains(c, p)) bad.push_back("membership mismatch at " + to_string(p));
      if (prod != mem.contains(p)) bad.push_back("layered membership mismatch at " + to_string(p));
    }
  }

  if (!r.cm) {
    if (r.witness) {
      const Point w = *r.witness;
      if (mem.contains(w) || !mem.contains(w + c.vertical()) || !mem.contains(w + c.horizontal()))
        bad.push_back("witness " + to_string(w) + " does not certify non-Cohen-Macaulayness");
    }
    return bad;
  }

  const CanonicalModule omega(c);
  const Int f1 = c.s1().frobenius();
  const Int f2 = c.s2().frobenius();
  for (Int x = -f1; x <= n; ++x) {
    for (Int y = -f2; y <= n; ++y) {
      const Point w{x, y};
      if (!c.lattice_contains(w)) continue;
      if (omega.contains(w) != omega_contains_definitional(c, w, std::nullopt, mem))
        bad.push_back("canonical module membership mismatch at " + to_string(w));
    }
  }
  if (n <= kMaxLayeredAn) {
    const auto layered = canonical_generators_layered(c);
    const std::set<Point> box(omega.data().gens.begin(), omega.data().gens.end());
    if (layered != box) bad.push_back("canonical generators disagree with layered oracle");
  }
  if (static_cast<Int>(omega.data().gens.size()) != c.cm_type())
    bad.push_back("number of canonical generators differs from Cohen-Macaulay type");
  if (c.is_gorenstein_symmetry() != (c.cm_type() == 1))
    bad.push_back("Apery symmetry test disagrees with type 1");
  if (r.nearly_gorenstein.value_or(false) != omega.is_nearly_gorenstein())
    bad.push_back("movement existence disagrees with nearly Gorenstein criterion");

  const auto dr = analyze(dual(c.sequence()));
  if (dr.cm != r.cm || dr.cm_type != r.cm_type || dr.nearly_gorenstein != r.nearly_gorenstein ||
      dr.level != r.level)
    bad.push_back("dual sequence " + to_string(dr.seq) + " has different invariants");
  return bad;
}

}  // namespace ngcurves::verification

#pragma once

/**
 * @file curve.hpp
 * @brief The homogeneous affine semigroup S_a of a projective monomial curve.
 *
 * For a = a_1 < ... < a_n with gcd 1, S_a is generated by (0, a_n),
 * (a_i, a_n - a_i) and (a_n, 0). Every generator has coordinate sum a_n,
 * so the grading is deg(x, y) = (x + y) / a_n.
 *
 * A point (x, y) of degree d lies in S_a iff x is a sum of at most d values
 * from {a_1, ..., a_n}: pad with copies of (0, a_n) to reach exactly d
 * summands. Membership therefore reduces to the fewest-parts table of the
 * first projection, which Curve grows on demand.
 */

#include <algorithm>
#include <compare>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "numsg.hpp"

namespace ngcurves {

struct Point {
  Int x = 0;
  Int y = 0;

  friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) noexcept { return {-a.x, -a.y}; }
  friend constexpr Point operator*(Int k, Point a) noexcept { return {k * a.x, k * a.y}; }
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// A strictly increasing sequence of at least two positive integers with gcd 1.
class Sequence {
 public:
  explicit Sequence(std::vector<Int> values) : values_(std::move(values)) {
    detail::validate_increasing_coprime(values_, 2);
  }

  const std::vector<Int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Int front() const noexcept { return values_.front(); }
  Int back() const noexcept { return values_.back(); }
  Int operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t codimension() const noexcept { return values_.size() - 1; }

  friend auto operator<=>(const Sequence&, const Sequence&) = default;
  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Int> values_;
};

inline std::string to_string(const Sequence& s, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

/// a' = (a_n - a_{n-1}, ..., a_n - a_1, a_n).
inline Sequence dual(const Sequence& seq) {
  const Int an = seq.back();
  std::vector<Int> out;
  out.reserve(seq.size());
  for (std::size_t i = seq.size() - 1; i-- > 0;) out.push_back(an - seq[i]);
  out.push_back(an);
  return Sequence(std::move(out));
}

/// Apery set of S_a with respect to the axis generators.
struct AperyTable {
  /// b_0 = (0, a_n), then the a_n - 1 inner points by ascending first
  /// coordinate, then b_{a_n} = (a_n, 0).
  std::vector<Point> points;
  bool good = false;
  /// Maximal inner points: b with b + b_i outside the table for every b_i.
  /// Only filled in when the table is good.
  std::vector<Point> b_tilde;

  std::span<const Point> inner() const noexcept {
    return std::span<const Point>(points).subspan(1, points.size() - 2);
  }
};

class Curve {
 public:
  explicit Curve(Sequence seq)
      : seq_(std::move(seq)),
        s1_(seq_.values()),
        s2_(second_projection_generators(seq_)),
        memo_(std::make_unique<Memo>()) {
    const Int an = seq_.back();
    gens_.push_back({0, an});
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) gens_.push_back({seq_[i], an - seq_[i]});
    gens_.push_back({an, 0});
  }

  Curve(Curve&&) noexcept = default;
  Curve& operator=(Curve&&) noexcept = default;

  const Sequence& sequence() const noexcept { return seq_; }
  Int an() const noexcept { return seq_.back(); }

  /// (0, a_n), (a_1, a_n - a_1), ..., (a_{n-1}, a_n - a_{n-1}), (a_n, 0).
  std::span<const Point> generators() const noexcept { return gens_; }
  Point vertical() const noexcept { return gens_.front(); }
  Point horizontal() const noexcept { return gens_.back(); }

  const NumericalSemigroup& s1() const noexcept { return s1_; }
  const NumericalSemigroup& s2() const noexcept { return s2_; }

  /// (x + y) / a_n, or nullopt when the point is not homogeneous of integral degree.
  std::optional<Int> degree(Point p) const noexcept {
    const Int sum = p.x + p.y;
    if (detail::mod(sum, an()) != 0) return std::nullopt;
    return detail::floor_div(sum, an());
  }

  /// Membership in the group generated by S_a: x + y = 0 mod a_n.
  bool lattice_contains(Point p) const noexcept { return detail::mod(p.x + p.y, an()) == 0; }

  bool contains(Point p) const {
    if (p.x < 0 || p.y < 0) return false;
    auto d = degree(p);
    if (!d) return false;
    return min_parts(p.x) <= *d;
  }

  /// Fewest summands from {a_1, ..., a_n} adding up to x (x >= 0), or
  /// kUnreachable when x is not in S_1.
  Int min_parts(Int x) const {
    std::lock_guard lock(memo_->mutex);
    grow_parts(x);
    return memo_->parts[static_cast<std::size_t>(x)];
  }

  static constexpr Int kUnreachable = std::numeric_limits<Int>::max() / 4;

  const AperyTable& apery_table() const {
    std::call_once(memo_->apery_once, [this] { memo_->apery = compute_apery(); });
    return memo_->apery;
  }

  bool is_cm() const { return apery_table().good; }

  Int cm_type() const {
    require_cm();
    return static_cast<Int>(apery_table().b_tilde.size());
  }

  /// With inner points b_1..b_{a_n-1} ordered by first coordinate, checks
  /// b_{a_n-1} = b_i + b_{a_n-1-i} for i = 1..a_n-2.
  bool is_gorenstein_symmetry() const {
    require_cm();
    auto inner = apery_table().inner();
    const std::size_t m = inner.size();  // a_n - 1
    if (m == 0) return true;
    const Point top = inner[m - 1];
    // 1-based b_i is inner[i - 1]; b_{a_n-1-i} is inner[m - 1 - i]
    for (std::size_t i = 1; i < m; ++i) {
      if (top != inner[i - 1] + inner[m - 1 - i]) return false;
    }
    return true;
  }

  /// Searches points w of Z S_a outside S_a with w + (0,a_n) and w + (a_n,0)
  /// both in S_a. Enumerates p in S_a by degree up to degree_bound and tests
  /// w = p - (0, a_n). Absence is inconclusive.
  std::optional<Point> find_non_cm_witness(Int degree_bound) const {
    const Int n = an();
    if (degree_bound < 1) return std::nullopt;
    // p = (x, d a_n - x) in S_a and w = p - (0, a_n) outside S_a mean x needs
    // exactly d parts; w + (a_n, 0) in S_a needs x + a_n in at most d, and
    // w must have y >= 0. So each x has one candidate degree, parts(x), and a
    // single ascending pass finds the least (degree, x).
    std::lock_guard lock(memo_->mutex);
    Int best_d = degree_bound + 1;
    Int best_x = -1;
    for (Int x = 0; x + n <= detail::checked_mul(best_d - 1, n); ++x) {
      grow_parts(x + n);
      const auto& parts = memo_->parts;
      const Int d = parts[static_cast<std::size_t>(x)];
      if (d < best_d && x + n <= d * n && parts[static_cast<std::size_t>(x + n)] <= d) {
        best_d = d;
        best_x = x;
      }
    }
    if (best_x < 0) return std::nullopt;
    return Point{best_x, (best_d - 1) * n - best_x};
  }

  /// max(ceil(2 (F(S_1) + F(S_2) + 2 a_n) / a_n), a_n - n + 1). The second
  /// term covers the regularity bound for curves of degree a_n in P^n: the
  /// first alone is too small when S_1 or S_2 is all of N, e.g. (1,6,7).
  Int default_witness_degree_bound() const noexcept {
    const Int num = 2 * (s1_.frobenius() + s2_.frobenius() + 2 * an());
    const Int classic = (num + an() - 1) / an();
    return std::max<Int>(classic, an() - static_cast<Int>(seq_.size()) + 1);
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<Int> parts{0};
    std::once_flag apery_once;
    AperyTable apery;
  };

  static std::vector<Int> second_projection_generators(const Sequence& seq) {
    const Int an = seq.back();
    std::vector<Int> out;
    for (std::size_t i = seq.size() - 1; i-- > 0;) out.push_back(an - seq[i]);
    out.push_back(an);
    return out;
  }

  void require_cm() const {
    if (!is_cm()) throw Error(Errc::not_cohen_macaulay, "S_a is not Cohen-Macaulay");
  }

  // caller holds memo_->mutex
  void grow_parts(Int x) const {
    auto& parts = memo_->parts;
    if (static_cast<std::size_t>(x) < parts.size()) return;
    if (static_cast<std::size_t>(x) >= kMaxSieveSize) {
      throw Error(Errc::resource_limit, "membership table exceeds size limit");
    }
    const std::size_t target = std::max<std::size_t>(static_cast<std::size_t>(x) + 1, 2 * parts.size());
    const auto& a = seq_.values();
    for (std::size_t i = parts.size(); i < target; ++i) {
      Int best = kUnreachable;
      for (Int g : a) {
        if (static_cast<std::size_t>(g) > i) break;
        best = std::min(best, parts[i - static_cast<std::size_t>(g)] + 1);
      }
      parts.push_back(best);
    }
  }

  AperyTable compute_apery() const {
    const Int n = an();
    AperyTable t;
    // (nu, fewest parts of nu) for the nonzero classes of Ape(a_n, S_1)
    auto least = detail::least_residues(seq_.values(), n);
    least.erase(least.begin());  // class 0 (= a_n) is the horizontal axis point
    std::sort(least.begin(), least.end());

    t.points.reserve(static_cast<std::size_t>(n) + 1);
    t.points.push_back(vertical());
    std::vector<Int> mus;
    for (const auto& [nu, parts] : least) {
      // smallest degree d with (nu, d a_n - nu) in S_a
      const Int d = std::max(parts, (nu + n - 1) / n);
      if (d > (nu + seq_.front() - 1) / seq_.front()) {
        throw Error(Errc::apery_bound_exceeded, "no second coordinate found for nu=" + std::to_string(nu));
      }
      const Int mu = detail::checked_mul(d, n) - nu;
      t.points.push_back({nu, mu});
      mus.push_back(mu);
    }
    t.points.push_back(horizontal());

    mus.push_back(n);
    std::sort(mus.begin(), mus.end());
    t.good = (mus == s2_.apery(n).sorted());
    if (!t.good) return t;  // the type is only defined for Cohen-Macaulay curves

    // class representative lookup: inner points are indexed by x mod a_n
    std::vector<std::optional<Point>> by_class(static_cast<std::size_t>(n));
    for (Point b : t.inner()) by_class[static_cast<std::size_t>(detail::mod(b.x, n))] = b;
    auto in_table = [&](Point p) {
      if (p == vertical() || p == horizontal()) return true;
      const auto& rep = by_class[static_cast<std::size_t>(detail::mod(p.x, n))];
      return rep && *rep == p;
    };
    // The table is downward closed and holds every curve generator, so
    // testing b + g for generators g is the same as testing b + b_i.
    for (Point b : t.inner()) {
      bool maximal = std::none_of(gens_.begin(), gens_.end(), [&](Point g) { return in_table(b + g); });
      if (maximal) t.b_tilde.push_back(b);
    }
    return t;
  }

  Sequence seq_;
  NumericalSemigroup s1_;
  NumericalSemigroup s2_;
  std::vector<Point> gens_;
  std::unique_ptr<Memo> memo_;
};

inline Curve make_curve(Sequence seq) { return Curve(std::move(seq)); }

}  // namespace ngcurves

#pragma once

/**
 * @file canonical.hpp
 * @brief Canonical module of a Cohen-Macaulay curve semigroup, its minimal
 * generators, levelness, and the nearly Gorenstein test with movements.
 *
 * The canonical module is -(C_1 cap C_2), where C_i are the lattice points
 * that never enter S_a under shifts by the axis generator F_i. Shifting by
 * (a_n, 0) leaves the second coordinate fixed, and every member of S_2 lifts
 * to a point of S_a with any large enough first coordinate in the right
 * residue class. Hence w lies in the canonical module iff -x is outside S_1
 * and -y is outside S_2.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curve.hpp"
#include "error.hpp"

namespace ngcurves {

struct CanonicalData {
  /// Minimal generators V(S), ascending by first coordinate.
  std::vector<Point> gens;
  /// degrees[i] is the degree of gens[i].
  std::vector<Int> degrees;
  /// Generators of minimal degree.
  std::vector<Point> vmin;
  bool level = false;
};

struct Translate {
  Point u;
  /// First coordinates of V_min + u, ascending.
  std::vector<Int> covered;
};

/// A nearly Gorenstein movement: translates of V_min covering every curve generator.
struct MovementChain {
  /// Ascending by the first coordinate of u.
  std::vector<Translate> translates;
  bool covers_all = false;

  std::vector<Int> movement() const {
    std::vector<Int> out;
    for (const auto& t : translates) out.push_back(t.u.x);
    return out;
  }
};

/// Canonical module of a Cohen-Macaulay curve. Holds a reference to the curve,
/// which must outlive it.
class CanonicalModule {
 public:
  explicit CanonicalModule(const Curve& curve) : curve_(&curve) {
    if (!curve.is_cm()) throw Error(Errc::not_cohen_macaulay, "S_a is not Cohen-Macaulay");
    data_ = compute_generators();
  }

  const Curve& curve() const noexcept { return *curve_; }
  const CanonicalData& data() const noexcept { return data_; }

  bool contains(Point w) const noexcept {
    return curve_->lattice_contains(w) && !curve_->s1().contains(-w.x) && !curve_->s2().contains(-w.y);
  }

  bool is_level() const noexcept { return data_.level; }

  /// u in Z S_a with u + v in S_a for every minimal generator v.
  bool in_s_minus_v(Point u) const {
    if (!curve_->lattice_contains(u)) return false;
    return std::all_of(data_.gens.begin(), data_.gens.end(),
                       [&](Point v) { return curve_->contains(u + v); });
  }

  /// Every curve generator g splits as u + v with v in V_min and u in S - V(S).
  bool is_nearly_gorenstein() const {
    const auto gens = curve_->generators();
    return std::all_of(gens.begin(), gens.end(), [&](Point g) {
      return std::any_of(data_.vmin.begin(), data_.vmin.end(),
                         [&](Point v) { return in_s_minus_v(g - v); });
    });
  }

  /// Minimum-cardinality movement; ties go to the lexicographically smallest
  /// list of first coordinates. nullopt iff the curve is not nearly Gorenstein.
  std::optional<MovementChain> find_movement() const {
    const auto gens = curve_->generators();
    const std::size_t universe = gens.size();

    std::set<Point> candidates;
    for (Point g : gens)
      for (Point v : data_.vmin)
        if (in_s_minus_v(g - v)) candidates.insert(g - v);

    struct Option {
      Translate t;
      std::uint64_t mask = 0;
    };
    std::vector<Option> options;
    for (Point u : candidates) {
      Option o{{u, {}}, 0};
      for (Point v : data_.vmin) {
        const Point p = u + v;
        auto it = std::find(gens.begin(), gens.end(), p);
        if (it == gens.end()) {
          // translate of V_min leaving degree 1; cannot take part in a cover
          o.mask = 0;
          break;
        }
        o.mask |= std::uint64_t{1} << static_cast<unsigned>(it - gens.begin());
        o.t.covered.push_back(p.x);
      }
      if (o.mask == 0) continue;
      std::sort(o.t.covered.begin(), o.t.covered.end());
      options.push_back(std::move(o));
    }

    const std::uint64_t full = universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    std::uint64_t reachable = 0;
    for (const auto& o : options) reachable |= o.mask;
    if (reachable != full) return std::nullopt;

    // Combinations in lexicographic index order; options are sorted by u.x,
    // so the first cover found at each size is the lexicographically smallest.
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= options.size(); ++size) {
      pick.resize(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        std::uint64_t m = 0;
        for (std::size_t i : pick) m |= options[i].mask;
        if (m == full) {
          MovementChain chain;
          for (std::size_t i : pick) chain.translates.push_back(options[i].t);
          chain.covers_all = true;
          return chain;
        }
        if (!next_combination(pick, options.size())) break;
      }
    }
    return std::nullopt;
  }

 private:
  static bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
      if (pick[i] < n - k + i) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  // Minimal generators lie in the box [-F(S_1), a_n] x [-F(S_2), a_n]. Being
  // minimal against (a_n, 0) and (0, a_n) leaves one candidate per residue r
  // of x mod a_n: x = a_n - A_1(-r), y = a_n - A_2(r), with A_i the Apery set
  // of S_i for a_n and A_i(0) = 0. Only the middle generators remain to test.
  CanonicalData compute_generators() const {
    const Curve& c = *curve_;
    const Int n = c.an();
    auto a1 = c.s1().apery(n).elements;
    auto a2 = c.s2().apery(n).elements;
    a1[0] = a2[0] = 0;
    const auto gens = c.generators();
    const auto middle = gens.subspan(1, gens.size() - 2);
    CanonicalData out;
    for (Int r = 0; r < n; ++r) {
      const Point w{n - a1[static_cast<std::size_t>(detail::mod(-r, n))], n - a2[static_cast<std::size_t>(r)]};
      if (std::none_of(middle.begin(), middle.end(), [&](Point g) { return contains(w - g); }))
        out.gens.push_back(w);
    }
    std::sort(out.gens.begin(), out.gens.end());
    for (Point g : out.gens) out.degrees.push_back(*c.degree(g));
    const Int dmin = *std::min_element(out.degrees.begin(), out.degrees.end());
    for (std::size_t i = 0; i < out.gens.size(); ++i)
      if (out.degrees[i] == dmin) out.vmin.push_back(out.gens[i]);
    out.level = out.vmin.size() == out.gens.size();
    return out;
  }

  const Curve* curve_;
  CanonicalData data_;
};

inline bool omega_contains(const Curve& c, Point w) { return CanonicalModule(c).contains(w); }
inline CanonicalData canonical_generators(const Curve& c) { return CanonicalModule(c).data(); }
inline bool is_level(const Curve& c) { return CanonicalModule(c).is_level(); }
inline bool in_s_minus_v(const Curve& c, Point u) { return CanonicalModule(c).in_s_minus_v(u); }
inline bool is_nearly_gorenstein(const Curve& c) { return CanonicalModule(c).is_nearly_gorenstein(); }
inline std::optional<MovementChain> find_movement(const Curve& c) { return CanonicalModule(c).find_movement(); }

/// Renders "[0,6],7,13 --(+7)--> 0,6,[7,13]": one segment per translate,
/// covered entries of 0,a_1,...,a_n bracketed as maximal runs.
inline std::string render_movement(const MovementChain& chain, const Sequence& seq) {
  std::vector<Int> entries{0};
  entries.insert(entries.end(), seq.values().begin(), seq.values().end());

  std::string out;
  for (std::size_t t = 0; t < chain.translates.size(); ++t) {
    const auto& tr = chain.translates[t];
    if (t > 0) {
      const Int d = tr.u.x - chain.translates[t - 1].u.x;
      out += " --(";
      out += (d >= 0 ? "+" : "");
      out += std::to_string(d) + ")--> ";
    }
    bool open = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const bool cov = std::binary_search(tr.covered.begin(), tr.covered.end(), entries[i]);
      if (i > 0) {
        if (open && !cov) out += "]";
        out += ",";
      }
      if (cov && !open) out += "[";
      out += std::to_string(entries[i]);
      open = cov;
    }
    if (open) out += "]";
  }
  return out;
}

}  // namespace ngcurves

#pragma once

/**
 * @file classify.hpp
 * @brief Per-sequence classification records, the parametric curve families,
 * the expected nearly Gorenstein sets, and the exhaustive scanner.
 */

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "curve.hpp"
#include "error.hpp"

namespace ngcurves {

/// Ring-theoretic verdicts for one sequence. Every optional field is present
/// iff the curve is Cohen-Macaulay, except witness, which may only be present
/// when it is not.
struct ClassificationRecord {
  explicit ClassificationRecord(Sequence s) : seq(std::move(s)) {}

  Sequence seq;
  bool cm = false;
  std::optional<bool> gorenstein;
  std::optional<bool> nearly_gorenstein;
  std::optional<bool> level;
  std::optional<Int> cm_type;
  std::optional<std::vector<Point>> canonical_gens;
  std::optional<std::vector<Int>> canonical_degrees;
  std::optional<Int> vmin_size;
  std::optional<MovementChain> movement;
  std::optional<Point> witness;

  bool ng_non_gorenstein() const noexcept {
    return cm && nearly_gorenstein.value_or(false) && !gorenstein.value_or(true);
  }
};

inline ClassificationRecord analyze(const Curve& curve) {
  ClassificationRecord r{curve.sequence()};
  r.cm = curve.is_cm();
  if (!r.cm) {
    r.witness = curve.find_non_cm_witness(curve.default_witness_degree_bound());
    return r;
  }
  const CanonicalModule omega(curve);
  const auto& data = omega.data();
  r.cm_type = curve.cm_type();
  r.gorenstein = (*r.cm_type == 1);
  r.level = data.level;
  r.canonical_gens = data.gens;
  r.canonical_degrees = data.degrees;
  r.vmin_size = static_cast<Int>(data.vmin.size());
  r.movement = omega.find_movement();
  r.nearly_gorenstein = r.movement.has_value();
  return r;
}

inline ClassificationRecord analyze(const Sequence& seq) { return analyze(Curve(seq)); }

// ---------------------------------------------------------------------------
// Families

enum class Family { alpha, i_a, i_b, ii_d, iv_b, v_d };

/// Families parameterized by a coprime pair (a, b) instead of k.
enum class PairFamily {
  i_c,   ///< (a, b, a+b, a+2b), b >= a+3
  ii_e,  ///< (a, b, a+b, 2a+b), b >= a+2
  iii,   ///< (a, b, a+b, 2b), a < b, (a, b) != (1, 2)
};

inline std::optional<Family> family_from_name(const std::string& s) {
  if (s == "alpha") return Family::alpha;
  if (s == "i_a") return Family::i_a;
  if (s == "i_b") return Family::i_b;
  if (s == "ii_d") return Family::ii_d;
  if (s == "iv_b") return Family::iv_b;
  if (s == "v_d") return Family::v_d;
  return std::nullopt;
}

inline std::optional<PairFamily> pair_family_from_name(const std::string& s) {
  if (s == "i_c") return PairFamily::i_c;
  if (s == "ii_e") return PairFamily::ii_e;
  if (s == "iii") return PairFamily::iii;
  return std::nullopt;
}

inline Sequence family(Family f, Int k) {
  using detail::checked_add;
  using detail::checked_mul;
  const Int min_k = (f == Family::ii_d || f == Family::v_d) ? 2 : 1;
  if (k < min_k) {
    throw Error(Errc::out_of_family_range, "family needs k >= " + std::to_string(min_k));
  }
  const Int k2 = checked_mul(2, k);
  const Int k3 = checked_mul(3, k);
  const Int k4 = checked_mul(4, k);
  const Int k6 = checked_mul(6, k);
  switch (f) {
    case Family::alpha: return Sequence({k, k + 1, checked_add(k2, 1)});
    case Family::i_a: return Sequence({k, k + 1, checked_add(k2, 1), checked_add(k3, 2)});
    case Family::i_b: return Sequence({k2 - 1, k2 + 1, k4, checked_add(k6, 1)});
    case Family::ii_d: return Sequence({k, k + 1, checked_add(k2, 1), checked_add(k3, 1)});
    case Family::iv_b: return Sequence({k2 + 1, k4, checked_add(k4, 2), checked_add(k6, 1)});
    case Family::v_d: return Sequence({k, k2, checked_add(k2, 1), checked_add(k3, 1)});
  }
  throw Error(Errc::out_of_family_range, "unknown family");
}

inline bool pair_in_range(PairFamily f, Int a, Int b) {
  if (a <= 0 || b <= a || std::gcd(a, b) != 1) return false;
  switch (f) {
    case PairFamily::i_c: return b >= a + 3;
    case PairFamily::ii_e: return b >= a + 2;
    case PairFamily::iii: return !(a == 1 && b == 2);
  }
  return false;
}

inline Sequence family(PairFamily f, Int a, Int b) {
  if (!pair_in_range(f, a, b)) throw Error(Errc::out_of_family_range, "(a, b) outside the family's range");
  switch (f) {
    case PairFamily::i_c: return Sequence({a, b, a + b, a + 2 * b});
    case PairFamily::ii_e: return Sequence({a, b, a + b, 2 * a + b});
    case PairFamily::iii: return Sequence({a, b, a + b, 2 * b});
  }
  throw Error(Errc::out_of_family_range, "unknown family");
}

/// Explicit non-Cohen-Macaulay witness for the pair families.
inline Point family_witness(PairFamily f, Int a, Int b) {
  if (!pair_in_range(f, a, b)) throw Error(Errc::out_of_family_range, "(a, b) outside the family's range");
  switch (f) {
    case PairFamily::i_c: return {a * (b - 1), 2 * b * b - a - 4 * b};
    case PairFamily::ii_e: return {a * (b - 1), b * b - 2 * b + a * b - 3 * a};
    case PairFamily::iii: return {2 * a, 2 * b - 2 * a};
  }
  throw Error(Errc::out_of_family_range, "unknown family");
}

/// The non-Gorenstein nearly Gorenstein sequences of length n with a_n <= max_an,
/// closed under duality.
inline std::set<Sequence> expected_ng(int n, Int max_an) {
  std::set<Sequence> out;
  if (n == 3) {
    for (Int k = 1; 2 * k + 1 <= max_an; ++k) out.insert(family(Family::alpha, k));
  } else if (n == 4) {
    if (max_an >= 4) out.insert(Sequence({1, 2, 3, 4}));
    for (Int k = 1; 6 * k + 1 <= max_an; ++k) {
      out.insert(family(Family::i_b, k));
      out.insert(family(Family::iv_b, k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scanner

struct ScanReport {
  int n = 0;
  Int max_an = 0;
  std::vector<ClassificationRecord> records;
  std::set<Sequence> ng_found;
  std::set<Sequence> ng_expected;
  bool verdict = false;
};

inline constexpr Int kDefaultScanCap = 200;

/// Every strictly increasing gcd-1 sequence of length n with a_n <= max_an,
/// ordered lexicographically.
inline std::vector<Sequence> enumerate_sequences(int n, Int max_an) {
  std::vector<Sequence> out;
  if (n < 2) return out;
  std::vector<Int> cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t pos, Int lo) -> void {
    if (pos == cur.size()) {
      if (detail::gcd_of(cur) == 1) out.emplace_back(cur);
      return;
    }
    const Int remaining = static_cast<Int>(cur.size() - pos) - 1;
    for (Int v = lo; v + remaining <= max_an; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

struct ScanOptions {
  Int cap = kDefaultScanCap;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

inline ScanReport scan(int n, Int max_an, const ScanOptions& opt = {}) {
  if (n < 2 || n > 4) throw Error(Errc::cap_exceeded, "scan supports n in {2,3,4}");
  if (max_an > opt.cap) {
    throw Error(Errc::cap_exceeded, "max a_n " + std::to_string(max_an) + " exceeds cap " + std::to_string(opt.cap));
  }
  ScanReport rep;
  rep.n = n;
  rep.max_an = max_an;
  const auto seqs = enumerate_sequences(n, max_an);

  std::vector<std::optional<ClassificationRecord>> slots(seqs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < seqs.size();) slots[i] = analyze(seqs[i]);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = seqs.size();
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, seqs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  rep.records.reserve(seqs.size());
  for (auto& s : slots) rep.records.push_back(std::move(*s));
  for (const auto& r : rep.records)
    if (r.ng_non_gorenstein()) rep.ng_found.insert(r.seq);
  rep.ng_expected = expected_ng(n, max_an);
  rep.verdict = rep.ng_found == rep.ng_expected;
  return rep;
}

}  // namespace ngcurves

#pragma once

// Unit interval orders on {1..n}, stored as a predecessor-count vector:
// pred[j] = #{i : i < j in the order}, and i < j iff i <= pred[j]. The two
// characterizing properties (x < y implies x < y as integers; relations
// propagate to x' <= x and y' >= y) are exactly 0 <= pred[j] <= j-1 and pred
// weakly increasing.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"

namespace uiozeta {

using Rational = boost::rational<std::int64_t>;

class UnitIntervalOrder {
 public:
  UnitIntervalOrder() = default;

  explicit UnitIntervalOrder(std::vector<int> pred) : pred_(std::move(pred)) {
    if (auto why = violation(pred_)) throw ValidationError(*why);
  }

  static std::optional<std::string> violation(std::span<const int> pred) {
    for (std::size_t k = 0; k < pred.size(); ++k) {
      const int j = static_cast<int>(k) + 1;
      if (pred[k] < 0 || pred[k] > j - 1) {
        return "unit interval order: pred[" + std::to_string(j) + "] = " +
               std::to_string(pred[k]) + " outside 0.." + std::to_string(j - 1) +
               " (index " + std::to_string(j) + ")";
      }
      if (k > 0 && pred[k] < pred[k - 1]) {
        return "unit interval order: pred is not weakly increasing at index " +
               std::to_string(j);
      }
    }
    return std::nullopt;
  }

  static UnitIntervalOrder chain(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return UnitIntervalOrder(std::move(p));
  }

  static UnitIntervalOrder antichain(int n) {
    return UnitIntervalOrder(std::vector<int>(n, 0));
  }

  int size() const { return static_cast<int>(pred_.size()); }
  std::span<const int> pred() const { return pred_; }
  const std::vector<int>& vec() const { return pred_; }

  /// Number of elements below j (1-based).
  int pred_of(int j) const { return pred_[j - 1]; }

  /// i < j in the order (1-based elements).
  bool precedes(int i, int j) const { return i < j && i <= pred_[j - 1]; }

  friend bool operator==(const UnitIntervalOrder&, const UnitIntervalOrder&) = default;
  friend auto operator<=>(const UnitIntervalOrder&, const UnitIntervalOrder&) = default;

 private:
  std::vector<int> pred_;
};

/// Left endpoints of unit intervals, numbered left to right.
class IntervalConfiguration {
 public:
  IntervalConfiguration() = default;

  explicit IntervalConfiguration(std::vector<Rational> lefts) : lefts_(std::move(lefts)) {
    for (std::size_t k = 1; k < lefts_.size(); ++k) {
      if (lefts_[k] < lefts_[k - 1]) {
        throw ValidationError("intervals: left endpoints not sorted at index " +
                              std::to_string(k + 1));
      }
    }
  }

  /// Sorts the endpoints; ties keep their input order.
  static IntervalConfiguration normalized(std::vector<Rational> lefts) {
    std::stable_sort(lefts.begin(), lefts.end());
    return IntervalConfiguration(std::move(lefts));
  }

  int size() const { return static_cast<int>(lefts_.size()); }
  std::span<const Rational> lefts() const { return lefts_; }

 private:
  std::vector<Rational> lefts_;
};

enum class Relation { Below, Above, Incomparable };

using LevelProfile = std::vector<int>;

inline UnitIntervalOrder uio_from_intervals(const IntervalConfiguration& c) {
  const auto lefts = c.lefts();
  std::vector<int> pred(lefts.size(), 0);
  int below = 0;
  for (std::size_t j = 0; j < lefts.size(); ++j) {
    while (lefts[below] + 1 < lefts[j]) ++below;
    pred[j] = below;
  }
  return UnitIntervalOrder(std::move(pred));
}

/// A configuration realizing `u`; left endpoints are strictly increasing.
/// Interval n is placed to meet exactly the intervals pred[n]+1 .. n-1.
inline IntervalConfiguration realize_intervals(const UnitIntervalOrder& u) {
  std::vector<Rational> lefts;
  lefts.reserve(u.size());
  for (int j = 1; j <= u.size(); ++j) {
    if (j == 1) {
      lefts.emplace_back(0);
      continue;
    }
    const int k = u.pred_of(j);
    const Rational prev = lefts.back();
    if (k == j - 1) {
      lefts.push_back(prev + 2);
      continue;
    }
    Rational lo = prev;
    if (k > 0) lo = std::max(lo, lefts[k - 1] + 1);
    const Rational hi = lefts[k] + 1;  // must not lie strictly right of I_{k+1}
    lefts.push_back((lo + hi) / 2);
  }
  return IntervalConfiguration(std::move(lefts));
}

inline Relation relation(const UnitIntervalOrder& u, int i, int j) {
  const int n = u.size();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw PreconditionError("relation: element out of range 1.." + std::to_string(n));
  }
  if (i == j) throw PreconditionError("relation: elements must differ");
  if (u.precedes(i, j)) return Relation::Below;
  if (u.precedes(j, i)) return Relation::Above;
  return Relation::Incomparable;
}

/// l(j) = 0 for minimal j, else 1 + l(pred[j]).
inline LevelProfile levels(const UnitIntervalOrder& u) {
  LevelProfile l(u.size(), 0);
  for (int j = 1; j <= u.size(); ++j) {
    const int k = u.pred_of(j);
    l[j - 1] = k == 0 ? 0 : 1 + l[k - 1];
  }
  return l;
}

/// Area set = incomparable pairs (x,y), x < y; a_j = j - 1 - pred[j].
inline DyckWord a_map(const UnitIntervalOrder& u) {
  std::vector<int> a(u.size());
  for (int j = 1; j <= u.size(); ++j) a[j - 1] = j - 1 - u.pred_of(j);
  return word_from_area_sequence(AreaSequence(std::move(a)));
}

inline UnitIntervalOrder a_inverse(const DyckWord& d) {
  const auto a = area_sequence_from_word(d);
  std::vector<int> pred(a.size());
  for (int j = 1; j <= a.size(); ++j) pred[j - 1] = j - 1 - a[j - 1];
  return UnitIntervalOrder(std::move(pred));
}

/// Adds an (n+1)-st interval to the right with exactly k elements below it.
inline UnitIntervalOrder extend(const UnitIntervalOrder& u, int k) {
  const int n = u.size();
  const int lo = n == 0 ? 0 : u.pred_of(n);
  if (k < lo || k > n) {
    throw PreconditionError("extend: k = " + std::to_string(k) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(n));
  }
  std::vector<int> pred = u.vec();
  pred.push_back(k);
  return UnitIntervalOrder(std::move(pred));
}

/// Streams U_n in lexicographic order of pred vectors, from the antichain
/// (0,...,0) to the chain (0,1,...,n-1).
class UioEnumerator {
 public:
  explicit UioEnumerator(int n) : current_(n < 0 ? 0 : n, 0) {
    if (n < 0) throw PreconditionError("enumerate_uio: negative n");
  }

  std::optional<UnitIntervalOrder> next() {
    if (done_) return std::nullopt;
    UnitIntervalOrder out(current_);
    done_ = !advance();
    return out;
  }

 private:
  bool advance() {
    for (auto k = current_.size(); k-- > 0;) {
      if (current_[k] < static_cast<int>(k)) {
        ++current_[k];
        std::fill(current_.begin() + k + 1, current_.end(), current_[k]);
        return true;
      }
    }
    return false;
  }

  std::vector<int> current_;
  bool done_ = false;
};

inline UioEnumerator enumerate_uio(int n) { return UioEnumerator(n); }

inline std::vector<UnitIntervalOrder> all_unit_interval_orders(int n) {
  std::vector<UnitIntervalOrder> out;
  UioEnumerator e(n);
  while (auto u = e.next()) out.push_back(std::move(*u));
  return out;
}

}  // namespace uiozeta

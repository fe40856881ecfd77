#pragma once

// Part listings and their posets.
//
// A part listing w = (w_1..w_n) of non-negative integers defines P(w):
// i < j iff w_j - w_i >= 2, or w_j - w_i = 1 and i < j. The insertion
// procedure below builds, for a unit interval order U, the unique listing
// that is both an area sequence and a listing for a poset isomorphic to U.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"
#include "uiozeta/uio.hpp"

namespace uiozeta {

class PartListing {
 public:
  PartListing() = default;

  explicit PartListing(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k] < 0) {
        throw ValidationError("part listing: entry at index " + std::to_string(k + 1) +
                              " is negative");
      }
    }
  }

  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }
  int operator[](std::size_t k) const { return entries_[k]; }
  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  friend bool operator==(const PartListing&, const PartListing&) = default;

 private:
  std::vector<int> entries_;
};

/// Strict partial order on {1..n} as a dense relation matrix.
class Poset {
 public:
  Poset() = default;

  /// below[(i-1)*n + (j-1)] != 0 iff i < j. Checks all three order axioms.
  Poset(int n, std::vector<std::uint8_t> below) : n_(n), below_(std::move(below)) {
    if (n_ < 0 || below_.size() != static_cast<std::size_t>(n_) * n_)
      throw ValidationError("poset: relation matrix has the wrong shape");
    for (int i = 1; i <= n_; ++i) {
      if (less(i, i))
        throw ValidationError("poset: not irreflexive at element " + std::to_string(i));
      for (int j = 1; j <= n_; ++j) {
        if (less(i, j) && less(j, i)) {
          throw ValidationError("poset: not antisymmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
        if (!less(i, j)) continue;
        for (int k = 1; k <= n_; ++k) {
          if (less(j, k) && !less(i, k)) {
            throw ValidationError("poset: not transitive at (" + std::to_string(i) +
                                  "," + std::to_string(j) + "," + std::to_string(k) +
                                  ")");
          }
        }
      }
    }
  }

  static Poset from_order(const UnitIntervalOrder& u) {
    const int n = u.size();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= u.pred_of(j); ++i) m[(i - 1) * n + (j - 1)] = 1;
    return Poset(n, std::move(m));
  }

  int size() const { return n_; }

  bool less(int i, int j) const { return below_[(i - 1) * n_ + (j - 1)] != 0; }

  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  /// All pairs (i,j) with i < j in the order, sorted.
  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (less(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Covering pairs: i < j with no k strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : relations()) {
      bool covered = true;
      for (int k = 1; k <= n_ && covered; ++k)
        if (less(i, k) && less(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> below_;
};

/// The labelled unit interval order equal to `p`, if its labelling has the
/// two characterizing properties.
inline std::optional<UnitIntervalOrder> as_unit_interval_order(const Poset& p) {
  const int n = p.size();
  std::vector<int> pred(n, 0);
  for (int j = 1; j <= n; ++j) {
    int count = 0;
    while (count < j - 1 && p.less(count + 1, j)) ++count;
    for (int i = count + 1; i <= n; ++i)
      if (p.less(i, j)) return std::nullopt;
    pred[j - 1] = count;
  }
  if (UnitIntervalOrder::violation(pred)) return std::nullopt;
  UnitIntervalOrder u(std::move(pred));
  if (!(Poset::from_order(u) == p)) return std::nullopt;
  return u;
}

inline Poset poset_of(const PartListing& w) {
  const int n = w.size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int diff = w[j - 1] - w[i - 1];
      if (diff >= 2 || (diff == 1 && i < j)) m[(i - 1) * n + (j - 1)] = 1;
    }
  }
  return Poset(n, std::move(m));
}

/// Record of the insertion procedure; index k describes element k+1.
struct InsertionTrace {
  LevelProfile levels;
  std::vector<int> c;                   // C_i
  std::vector<PartListing> words;       // q_1 .. q_n
  std::vector<std::size_t> positions;   // 0-based index where l(i) landed in q_i
};

struct QMapResult {
  PartListing listing;
  InsertionTrace trace;
};

/// Where `level` goes: after the c-th letter level-1 (start of word when c = 0),
/// then past the contiguous run of letters equal to `level` found there.
inline std::size_t insertion_position(std::span<const int> q_prev, int level, int c) {
  if (level < 0 || c < 0) throw PreconditionError("q_step: negative level or C");
  if (level == 0 && c != 0) throw PreconditionError("q_step: level 0 requires C = 0");
  std::size_t pos = 0;
  if (c > 0) {
    int seen = 0;
    bool found = false;
    for (std::size_t k = 0; k < q_prev.size(); ++k) {
      if (q_prev[k] == level - 1 && ++seen == c) {
        pos = k + 1;
        found = true;
        break;
      }
    }
    if (!found) {
      throw PreconditionError("q_step: fewer than " + std::to_string(c) +
                              " occurrences of letter " + std::to_string(level - 1));
    }
  }
  while (pos < q_prev.size() && q_prev[pos] == level) ++pos;
  return pos;
}

inline PartListing q_step(const PartListing& q_prev, int level, int c) {
  const auto pos = insertion_position(q_prev.entries(), level, c);
  std::vector<int> next = q_prev.vec();
  next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), level);
  return PartListing(std::move(next));
}

inline QMapResult q_map(const UnitIntervalOrder& u) {
  const int n = u.size();
  InsertionTrace trace;
  trace.levels = levels(u);
  const auto& lv = trace.levels;
  std::vector<int> q;
  for (int i = 1; i <= n; ++i) {
    const int level = lv[i - 1];
    int c = 0;
    if (level > 0) {
      for (int j = 1; j <= u.pred_of(i); ++j)
        if (lv[j - 1] == level - 1) ++c;
    }
    const auto pos = insertion_position(q, level, c);
    q.insert(q.begin() + static_cast<std::ptrdiff_t>(pos), level);
    trace.c.push_back(c);
    trace.positions.push_back(pos);
    trace.words.emplace_back(q);
  }
  return {PartListing(std::move(q)), std::move(trace)};
}

inline AreaSequence q_area_sequence(const UnitIntervalOrder& u) {
  return AreaSequence(q_map(u).listing.vec());
}

inline DyckWord p_map(const UnitIntervalOrder& u) {
  return word_from_area_sequence(q_area_sequence(u));
}

/// f(i): positions numbered by increasing entry, ties left to right. 1-based values.
inline std::vector<int> f_permutation(const PartListing& w) {
  const int n = w.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return w[x] < w[y]; });
  std::vector<int> f(n);
  for (int rank = 0; rank < n; ++rank) f[order[rank]] = rank + 1;
  return f;
}

/// i <_f j iff f^{-1}(i) < f^{-1}(j) in P(w).
inline Poset relabeled_poset(const PartListing& w) {
  const int n = w.size();
  const Poset base = poset_of(w);
  const auto f = f_permutation(w);
  std::vector<int> finv(n + 1);
  for (int pos = 1; pos <= n; ++pos) finv[f[pos - 1]] = pos;
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (base.less(finv[i], finv[j])) m[(i - 1) * n + (j - 1)] = 1;
  return Poset(n, std::move(m));
}

namespace detail {

struct IsoSearch {
  const Poset& a;
  const Poset& b;
  std::vector<std::pair<int, int>> sig_a, sig_b;  // (#below, #above)
  std::vector<int> map;                           // a-element -> b-element
  std::vector<bool> used;

  bool extend(int x) {
    const int n = a.size();
    if (x > n) return true;
    for (int y = 1; y <= n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (int z = 1; z < x && ok; ++z) {
        ok = a.less(z, x) == b.less(map[z], y) && a.less(x, z) == b.less(y, map[z]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

inline std::vector<std::pair<int, int>> degree_signature(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> sig(n + 1, {0, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.less(i, j)) {
        ++sig[j].first;
        ++sig[i].second;
      }
  return sig;
}

}  // namespace detail

/// Brute-force isomorphism test: backtracking over bijections, pruned by
/// (down-degree, up-degree). Meant for small ground sets.
inline bool is_isomorphic(const Poset& p1, const Poset& p2) {
  if (p1.size() != p2.size()) return false;
  detail::IsoSearch s{p1, p2, detail::degree_signature(p1), detail::degree_signature(p2),
                      std::vector<int>(p1.size() + 1, 0),
                      std::vector<bool>(p1.size() + 1, false)};
  auto sorted_a = s.sig_a;
  auto sorted_b = s.sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  return s.extend(1);
}

/// Graded reverse lexicographic order: smaller sum first; on equal sums the
/// sequence with the LARGER entry at the first difference is smaller.
inline std::strong_ordering grevlex_compare(std::span<const int> w1, std::span<const int> w2) {
  if (w1.size() != w2.size())
    throw PreconditionError("grevlex_compare: listings have different lengths");
  const long s1 = std::accumulate(w1.begin(), w1.end(), 0L);
  const long s2 = std::accumulate(w2.begin(), w2.end(), 0L);
  if (s1 != s2) return s1 <=> s2;
  for (std::size_t k = 0; k < w1.size(); ++k)
    if (w1[k] != w2[k]) return w2[k] <=> w1[k];
  return std::strong_ordering::equal;
}

inline std::strong_ordering grevlex_compare(const PartListing& w1, const PartListing& w2) {
  return grevlex_compare(w1.entries(), w2.entries());
}

namespace detail {

// Calls fn on every length-n sequence of non-negative integers summing to s.
inline void for_each_weak_composition(int n, int s,
                                      const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> buf(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      buf[k] = left;
      fn(buf);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      buf[k] = v;
      rec(k + 1, left - v);
    }
  };
  if (n == 0) {
    if (s == 0) fn(buf);
    return;
  }
  rec(0, s);
}

}  // namespace detail

inline constexpr int kDefaultGrevlexGuard = 6;

/// Exhaustive search for the grevlex-minimal listing w with P(w) isomorphic
/// to u. Sum levels are scanned upward; the first level holding any match
/// contains the minimum. Independent of the insertion procedure.
inline PartListing grevlex_min_search(const UnitIntervalOrder& u,
                                      int n_max_guard = kDefaultGrevlexGuard) {
  const int n = u.size();
  if (n > n_max_guard) {
    throw CapabilityError("grevlex_min_search: n = " + std::to_string(n) +
                          " exceeds the exhaustive-search guard " +
                          std::to_string(n_max_guard));
  }
  const Poset target = Poset::from_order(u);
  const auto target_rel = target.relations().size();
  const int sum_cap = std::max(0, n * (n - 1));
  for (int s = 0; s <= sum_cap; ++s) {
    std::optional<std::vector<int>> best;
    detail::for_each_weak_composition(n, s, [&](std::span<const int> w) {
      if (best && grevlex_compare(w, *best) != std::strong_ordering::less) return;
      const Poset p = poset_of(PartListing(std::vector<int>(w.begin(), w.end())));
      if (p.relations().size() != target_rel) return;
      if (is_isomorphic(p, target)) best = std::vector<int>(w.begin(), w.end());
    });
    if (best) return PartListing(std::move(*best));
  }
  throw CapabilityError("grevlex_min_search: no listing with sum <= " +
                        std::to_string(sum_cap));
}

}  // namespace uiozeta

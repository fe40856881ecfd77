#pragma once

// Dyck paths: words, area sequences, area sets, peaks, enumeration.
//
// Geometry. A Dyck word of size n is a sequence of n UP steps (0,1) and n
// RIGHT steps (1,0) from (0,0) to (n,n) that never passes below y = x. The
// box (i,j), 1 <= i < j <= n, is the unit square [i-1,i] x [j-1,j]. Row j
// of the area set holds the boxes (j - a_j, j) ... (j - 1, j), so the UP
// step of row j sits at x = j - 1 - a_j.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uiozeta/errors.hpp"

namespace uiozeta {

enum class Step : std::uint8_t { Up = 0, Right = 1 };

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Sequence of UP/RIGHT steps; always a valid Dyck path once constructed.
/// Ordering is lexicographic with UP < RIGHT.
class DyckWord {
 public:
  DyckWord() = default;

  explicit DyckWord(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (auto why = violation(steps_)) throw ValidationError(*why);
  }

  /// Describes the first violated invariant, or nullopt for a valid word.
  static std::optional<std::string> violation(std::span<const Step> steps) {
    long balance = 0;
    long ups = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (steps[k] == Step::Up) {
        ++balance;
        ++ups;
      } else if (--balance < 0) {
        return "dyck word: prefix ending at step " + std::to_string(k + 1) +
               " has more RIGHT than UP steps (path passes below the diagonal)";
      }
    }
    if (balance != 0) {
      return "dyck word: " + std::to_string(ups) + " UP steps but " +
             std::to_string(static_cast<long>(steps.size()) - ups) +
             " RIGHT steps";
    }
    return std::nullopt;
  }

  int size() const { return static_cast<int>(steps_.size() / 2); }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t k) const { return steps_[k]; }
  std::span<const Step> steps() const { return steps_; }

  /// Textual form over {a,b}: a = UP, b = RIGHT.
  std::string str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Up ? 'a' : 'b');
    return out;
  }

  /// The 2n+1 lattice points visited, starting at (0,0).
  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point p;
    out.push_back(p);
    for (Step s : steps_) {
      if (s == Step::Up)
        ++p.y;
      else
        ++p.x;
      out.push_back(p);
    }
    return out;
  }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::vector<Step> steps_;
};

/// (a_1, ..., a_n) with a_1 = 0 and a_i <= a_{i-1} + 1.
class AreaSequence {
 public:
  AreaSequence() = default;

  explicit AreaSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (auto why = violation(entries_)) throw ValidationError(*why);
  }

  static std::optional<std::string> violation(std::span<const int> a) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] < 0) {
        return "area sequence: entry at index " + std::to_string(k + 1) +
               " is negative";
      }
    }
    if (!a.empty() && a[0] != 0) {
      return "area sequence: a_1 must be 0 (index 1 is " + std::to_string(a[0]) +
             ")";
    }
    for (std::size_t k = 1; k < a.size(); ++k) {
      if (a[k] > a[k - 1] + 1) {
        return "area sequence: a_" + std::to_string(k + 1) + " = " +
               std::to_string(a[k]) + " exceeds a_" + std::to_string(k) +
               " + 1 (index " + std::to_string(k + 1) + ")";
      }
    }
    return std::nullopt;
  }

  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }
  /// 0-based access; a_j is at(j - 1).
  int operator[](std::size_t k) const { return entries_[k]; }
  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  friend bool operator==(const AreaSequence&, const AreaSequence&) = default;
  friend auto operator<=>(const AreaSequence&, const AreaSequence&) = default;

 private:
  std::vector<int> entries_;
};

struct Box {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Boxes between a Dyck path and the diagonal, kept sorted by (i, j).
class AreaSet {
 public:
  AreaSet() = default;

  AreaSet(int n, std::vector<Box> boxes) : n_(n), boxes_(std::move(boxes)) {
    if (n_ < 0) throw ValidationError("area set: negative size");
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    for (const Box& b : boxes_) {
      if (!(1 <= b.i && b.i < b.j && b.j <= n_)) {
        throw ValidationError("area set: box (" + std::to_string(b.i) + "," +
                              std::to_string(b.j) + ") is outside 1 <= i < j <= " +
                              std::to_string(n_));
      }
    }
    // Closure under (i,j) -> (i+1,j), (i,j-1) generates the full staircase
    // condition i <= i' < j' <= j.
    for (const Box& b : boxes_) {
      if (b.j - b.i < 2) continue;
      for (Box need : {Box{b.i + 1, b.j}, Box{b.i, b.j - 1}}) {
        if (!contains(need.i, need.j)) {
          throw ValidationError(
              "area set: staircase closure fails, (" + std::to_string(b.i) + "," +
              std::to_string(b.j) + ") present but (" + std::to_string(need.i) +
              "," + std::to_string(need.j) + ") missing");
        }
      }
    }
  }

  int size() const { return n_; }
  std::span<const Box> boxes() const { return boxes_; }
  std::size_t count() const { return boxes_.size(); }

  bool contains(int i, int j) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), Box{i, j});
  }

  friend bool operator==(const AreaSet&, const AreaSet&) = default;

 private:
  int n_ = 0;
  std::vector<Box> boxes_;
};

/// An UP step immediately followed by a RIGHT step.
struct Peak {
  std::size_t word_index = 0;  // 0-based index of the UP step
  Point apex;                  // top end-point of the UP step
  int height = 0;              // apex.y - apex.x

  friend bool operator==(const Peak&, const Peak&) = default;
};

inline DyckWord word_from_area_sequence(const AreaSequence& s) {
  const int n = s.size();
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int x = 0;
  for (int j = 1; j <= n; ++j) {
    const int row_x = j - 1 - s[j - 1];
    for (; x < row_x; ++x) steps.push_back(Step::Right);
    steps.push_back(Step::Up);
  }
  for (; x < n; ++x) steps.push_back(Step::Right);
  return DyckWord(std::move(steps));
}

inline AreaSequence area_sequence_from_word(const DyckWord& d) {
  std::vector<int> a;
  a.reserve(d.size());
  int x = 0;
  for (Step s : d.steps()) {
    if (s == Step::Up) {
      const int row = static_cast<int>(a.size()) + 1;
      a.push_back(row - 1 - x);
    } else {
      ++x;
    }
  }
  return AreaSequence(std::move(a));
}

inline AreaSet area_set_from_area_sequence(const AreaSequence& s) {
  std::vector<Box> boxes;
  for (int j = 1; j <= s.size(); ++j) {
    for (int i = j - s[j - 1]; i < j; ++i) boxes.push_back({i, j});
  }
  return AreaSet(s.size(), std::move(boxes));
}

inline AreaSequence area_sequence_from_area_set(const AreaSet& area) {
  std::vector<int> a(area.size(), 0);
  for (const Box& b : area.boxes()) ++a[b.j - 1];
  return AreaSequence(std::move(a));
}

inline AreaSet area_set_from_word(const DyckWord& d) {
  return area_set_from_area_sequence(area_sequence_from_word(d));
}

inline DyckWord word_from_area_set(const AreaSet& area) {
  return word_from_area_sequence(area_sequence_from_area_set(area));
}

inline std::vector<Peak> peaks(const DyckWord& d) {
  std::vector<Peak> out;
  Point p;
  for (std::size_t k = 0; k < d.length(); ++k) {
    if (d[k] == Step::Up) {
      ++p.y;
      if (k + 1 < d.length() && d[k + 1] == Step::Right)
        out.push_back({k, p, p.y - p.x});
    } else {
      ++p.x;
    }
  }
  return out;
}

inline std::optional<Peak> final_peak(const DyckWord& d) {
  auto all = peaks(d);
  if (all.empty()) return std::nullopt;
  return all.back();
}

/// The last peak attaining the maximal height.
inline std::optional<Peak> final_maximal_peak(const DyckWord& d) {
  auto all = peaks(d);
  if (all.empty()) return std::nullopt;
  auto best = all.front();
  for (const Peak& pk : all)
    if (pk.height >= best.height) best = pk;
  return best;
}

inline int trailing_rights(const DyckWord& d) {
  int t = 0;
  for (auto k = d.length(); k > 0 && d[k - 1] == Step::Right; --k) ++t;
  return t;
}

/// Inserts an UP step followed by exactly `t` existing plus one appended RIGHT
/// step, so the new final peak has apex (n - t, n + 1).
inline DyckWord add_final_peak(const DyckWord& d, int t) {
  if (t < 0 || t > trailing_rights(d)) {
    throw PreconditionError("add_final_peak: t = " + std::to_string(t) +
                            " but the word ends with " +
                            std::to_string(trailing_rights(d)) + " RIGHT steps");
  }
  std::vector<Step> steps(d.steps().begin(), d.steps().end());
  steps.insert(steps.end() - t, Step::Up);
  steps.push_back(Step::Right);
  return DyckWord(std::move(steps));
}

/// Catalan(n) for 0 <= n <= 35 (the largest that fits in 64 bits here).
inline std::uint64_t catalan(int n) {
  if (n < 0) throw PreconditionError("catalan: negative n");
  if (n > 35) throw CapabilityError("catalan: n > 35 overflows 64 bits");
  // Ballot table: row[y] counts path prefixes ending at height y above the
  // diagonal. Prefixes too high to return are dropped, so every entry counts
  // extendable prefixes and none exceeds the result.
  std::vector<std::uint64_t> row(n + 2, 0);
  row[0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::uint64_t> next(n + 2, 0);
    const int cap = std::min(n, 2 * n - step - 1);
    for (int y = 0; y <= n; ++y) {
      if (row[y] == 0) continue;
      if (y + 1 <= cap) next[y + 1] += row[y];
      if (y > 0) next[y - 1] += row[y];
    }
    row = std::move(next);
  }
  return row[0];
}

/// Streams the Dyck words of size n in lexicographic order (UP < RIGHT),
/// starting at a^n b^n and ending at (ab)^n.
class DyckEnumerator {
 public:
  explicit DyckEnumerator(int n) : n_(n) {
    if (n < 0) throw PreconditionError("enumerate_dyck: negative n");
    current_.assign(static_cast<std::size_t>(n), Step::Up);
    current_.resize(2 * static_cast<std::size_t>(n), Step::Right);
  }

  std::optional<DyckWord> next() {
    if (done_) return std::nullopt;
    DyckWord out(current_);
    done_ = !advance();
    return out;
  }

 private:
  // Rightmost UP that can become RIGHT, then the smallest completion.
  bool advance() {
    const auto len = current_.size();
    int ups = 0;
    int rights = 0;
    std::vector<std::pair<int, int>> before(len);
    for (std::size_t k = 0; k < len; ++k) {
      before[k] = {ups, rights};
      (current_[k] == Step::Up ? ups : rights)++;
    }
    for (std::size_t k = len; k-- > 0;) {
      auto [u, r] = before[k];
      if (current_[k] == Step::Up && u >= r + 1) {
        current_[k] = Step::Right;
        const int ups_left = n_ - u;
        std::size_t pos = k + 1;
        for (int q = 0; q < ups_left; ++q) current_[pos++] = Step::Up;
        for (; pos < len; ++pos) current_[pos] = Step::Right;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<Step> current_;
  bool done_ = false;
};

inline DyckEnumerator enumerate_dyck(int n) { return DyckEnumerator(n); }

inline std::vector<DyckWord> all_dyck_words(int n) {
  std::vector<DyckWord> out;
  DyckEnumerator e(n);
  while (auto d = e.next()) out.push_back(std::move(*d));
  return out;
}

}  // namespace uiozeta

#pragma once

// Haglund's zeta map.
//
// Every lattice point of the path except (0,0) gets a label: the top of an
// UP step is 'a', the right end of a RIGHT step is 'b'. Labels are read
// diagonal by diagonal (y = x + t for t = 0, 1, 2, ...), each diagonal from
// bottom-left to top-right. In the resulting string, 'b' is read as an UP
// step and 'a' as a RIGHT step.
//
// Both strings use the letters a/b, so zeta of "a..." is spelled with the
// same alphabet as its input even though the roles of the letters swap
// between labelling and reading. Keep the two dictionaries apart.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"
#include "uiozeta/partlist.hpp"
#include "uiozeta/uio.hpp"

namespace uiozeta {

struct DiagonalLabel {
  char letter = 'a';           // 'a' = end of UP step, 'b' = end of RIGHT step
  std::size_t step_index = 0;  // 0-based index of the step ending here
  Point point;

  friend bool operator==(const DiagonalLabel&, const DiagonalLabel&) = default;
};

class DiagonalDecomposition {
 public:
  DiagonalDecomposition() = default;
  explicit DiagonalDecomposition(std::vector<std::vector<DiagonalLabel>> lines)
      : lines_(std::move(lines)) {}

  /// Number of diagonals y = x + t that carry at least one label.
  std::size_t line_count() const { return lines_.size(); }
  const std::vector<DiagonalLabel>& line(std::size_t t) const { return lines_.at(t); }

  std::string letters(std::size_t t) const {
    std::string out;
    for (const auto& l : lines_.at(t)) out.push_back(l.letter);
    return out;
  }

  std::size_t label_count() const {
    std::size_t c = 0;
    for (const auto& l : lines_) c += l.size();
    return c;
  }

  /// Steps crossing the strip between y = x + t - 1 and y = x + t, in path
  /// order: UP steps end on line t ('a'), RIGHT steps end on line t-1 ('b').
  std::string strip(std::size_t t) const {
    if (t == 0 || t > lines_.size()) return {};
    std::vector<DiagonalLabel> crossing;
    if (t < lines_.size())
      for (const auto& l : lines_[t])
        if (l.letter == 'a') crossing.push_back(l);
    for (const auto& l : lines_[t - 1])
      if (l.letter == 'b') crossing.push_back(l);
    std::sort(crossing.begin(), crossing.end(),
              [](const auto& x, const auto& y) { return x.step_index < y.step_index; });
    std::string out;
    for (const auto& l : crossing) out.push_back(l.letter);
    return out;
  }

  /// The strip reads a b a b ... a b.
  bool strip_alternates(std::size_t t) const {
    const auto s = strip(t);
    if (s.size() % 2 != 0) return false;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != (k % 2 == 0 ? 'a' : 'b')) return false;
    return true;
  }

 private:
  std::vector<std::vector<DiagonalLabel>> lines_;
};

inline DiagonalDecomposition diagonal_decomposition(const DyckWord& d) {
  std::vector<std::vector<DiagonalLabel>> lines;
  Point p;
  for (std::size_t k = 0; k < d.length(); ++k) {
    const bool up = d[k] == Step::Up;
    if (up)
      ++p.y;
    else
      ++p.x;
    const auto t = static_cast<std::size_t>(p.y - p.x);
    if (lines.size() <= t) lines.resize(t + 1);
    // Points on one diagonal are met in increasing x along the path.
    lines[t].push_back({up ? 'a' : 'b', k, p});
  }
  return DiagonalDecomposition(std::move(lines));
}

inline DyckWord zeta(const DyckWord& d) {
  const auto dec = diagonal_decomposition(d);
  std::vector<Step> out;
  out.reserve(d.length());
  for (std::size_t t = 0; t < dec.line_count(); ++t)
    for (const auto& l : dec.line(t)) out.push_back(l.letter == 'b' ? Step::Up : Step::Right);
  return DyckWord(std::move(out));
}

/// Rebuilds the diagonals from zeta(d), then walks them. Diagonal 0 is the
/// leading run of b's; diagonal t >= 1 starts with an 'a', holds as many a's
/// as diagonal t-1 holds b's, and runs on through the b's that follow its
/// last 'a'. Between two consecutive visits to a diagonal the path stays on
/// one side of it, and the label of the later visit says which side.
inline DyckWord zeta_inverse(const DyckWord& e) {
  const std::size_t len = e.length();
  std::vector<char> labels(len);
  for (std::size_t k = 0; k < len; ++k) labels[k] = e[k] == Step::Up ? 'b' : 'a';

  auto broken = [&](const char* what) {
    return std::logic_error(std::string("zeta_inverse: ") + what + " for " + e.str());
  };

  std::vector<std::vector<char>> lines(1);
  std::size_t pos = 0;
  while (pos < len && labels[pos] == 'b') lines[0].push_back(labels[pos++]);
  std::size_t expect_a = lines[0].size();
  while (pos < len) {
    if (expect_a == 0) throw broken("diagonal without a starting label");
    std::vector<char> line;
    std::size_t as = 0;
    while (pos < len && (as < expect_a || labels[pos] == 'b')) {
      if (labels[pos] == 'a') ++as;
      line.push_back(labels[pos++]);
    }
    if (as != expect_a) throw broken("unbalanced diagonals");
    expect_a = static_cast<std::size_t>(std::count(line.begin(), line.end(), 'b'));
    lines.push_back(std::move(line));
  }

  std::vector<std::size_t> cursor(lines.size(), 0);
  std::vector<Step> steps;
  steps.reserve(len);
  std::size_t h = 0;
  while (steps.size() < len) {
    const bool more_here = cursor[h] < lines[h].size();
    if (!more_here && h == 0) break;
    const bool up = more_here && lines[h][cursor[h]] == 'b';
    if (up) {
      ++h;
      if (h >= lines.size() || cursor[h] >= lines[h].size() || lines[h][cursor[h]] != 'a')
        throw broken("inconsistent UP step");
      steps.push_back(Step::Up);
    } else {
      --h;
      if (cursor[h] >= lines[h].size() || lines[h][cursor[h]] != 'b')
        throw broken("inconsistent RIGHT step");
      steps.push_back(Step::Right);
    }
    ++cursor[h];
  }
  if (steps.size() != len) throw broken("labels left over");
  return DyckWord(std::move(steps));
}

/// Quantities describing how the extension by one interval changes each side
/// of a(U) = zeta(p(U)).
struct AddedPeak {
  int r = 0;                       // trailing-step count on the zeta(p) side
  int s = 0;                       // elements of U' incomparable to n+1
  int level = 0;                   // level of the new element
  std::size_t inserted_index = 0;  // 0-based position of the new letter in q(U')
};

inline AddedPeak added_peak_parameters(const UnitIntervalOrder& u, int k) {
  const auto bigger = extend(u, k);
  const auto q_small = q_map(u).listing;
  const auto q_big = q_map(bigger);
  AddedPeak out;
  out.level = q_big.trace.levels.back();
  out.inserted_index = q_big.trace.positions.back();
  const auto small = q_small.entries();
  const auto big = q_big.listing.entries();
  out.r = static_cast<int>(std::count(small.begin(), small.end(), out.level)) +
          static_cast<int>(std::count(big.begin() + static_cast<std::ptrdiff_t>(out.inserted_index) + 1,
                                      big.end(), out.level - 1));
  out.s = u.size() - k;
  return out;
}

}  // namespace uiozeta

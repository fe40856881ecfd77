#pragma once

// Textual encodings.
//
//   Dyck word       "aaabbabb"; also U/R or 1/0 for UP/RIGHT
//   integer lists   "0,1,2,1" (area sequence, part listing, pred vector)
//   area set        "4:1,2;1,3;2,3;3,4"  (size, then sorted i,j pairs)
//   intervals       JSON [{"num":0,"den":1}, ...] of left endpoints
//   poset           JSON [[i,j], ...] of relations or covering relations

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"
#include "uiozeta/partlist.hpp"
#include "uiozeta/uio.hpp"

namespace uiozeta {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline DyckWord parse_dyck_word(std::string_view text) {
  text = detail::trim(text);
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'a': case 'U': case 'u': case '1':
        steps.push_back(Step::Up);
        break;
      case 'b': case 'R': case 'r': case '0':
        steps.push_back(Step::Right);
        break;
      default:
        throw ValidationError("dyck word: unexpected character '" + std::string(1, text[k]) +
                              "' at position " + std::to_string(k + 1));
    }
  }
  return DyckWord(std::move(steps));
}

/// Comma-separated integers; surrounding brackets and spaces are ignored.
inline std::vector<int> parse_int_list(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) text.remove_prefix(1);
  if (!text.empty() && (text.back() == ')' || text.back() == ']')) text.remove_suffix(1);
  text = detail::trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ValidationError("integer list: bad entry '" + std::string(piece) + "' at index " +
                            std::to_string(out.size() + 1));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string format_int_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

inline AreaSequence parse_area_sequence(std::string_view text) {
  return AreaSequence(parse_int_list(text));
}

inline PartListing parse_part_listing(std::string_view text) {
  return PartListing(parse_int_list(text));
}

inline UnitIntervalOrder parse_pred(std::string_view text) {
  return UnitIntervalOrder(parse_int_list(text));
}

inline AreaSet parse_area_set(std::string_view text) {
  text = detail::trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ValidationError("area set: expected 'n:i,j;i,j;...'");
  const auto head = parse_int_list(text.substr(0, colon));
  if (head.size() != 1) throw ValidationError("area set: bad size prefix");
  std::vector<Box> boxes;
  auto rest = detail::trim(text.substr(colon + 1));
  while (!rest.empty()) {
    auto cut = rest.find_first_of("; ");
    const auto pair = detail::trim(rest.substr(0, cut));
    if (!pair.empty()) {
      const auto ij = parse_int_list(pair);
      if (ij.size() != 2) throw ValidationError("area set: bad pair '" + std::string(pair) + "'");
      boxes.push_back({ij[0], ij[1]});
    }
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + 1);
  }
  return AreaSet(head[0], std::move(boxes));
}

inline std::string format_area_set(const AreaSet& s) {
  std::string out = std::to_string(s.size()) + ":";
  bool first = true;
  for (const Box& b : s.boxes()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(b.i) + "," + std::to_string(b.j);
  }
  return out;
}

/// Rejects unsorted input unless `normalize` is set.
inline IntervalConfiguration parse_intervals(std::string_view text, bool normalize = false) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("intervals: not JSON: ") + ex.what());
  }
  if (!doc.is_array()) throw ValidationError("intervals: expected a JSON array");
  std::vector<Rational> lefts;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& e = doc[k];
    if (!e.is_object() || !e.contains("num") || !e["num"].is_number_integer() ||
        (e.contains("den") && !e["den"].is_number_integer())) {
      throw ValidationError("intervals: entry " + std::to_string(k + 1) +
                            " must be {\"num\": int, \"den\": int}");
    }
    const auto num = e["num"].get<std::int64_t>();
    const auto den = e.value("den", std::int64_t{1});
    if (den == 0) throw ValidationError("intervals: zero denominator at entry " + std::to_string(k + 1));
    lefts.emplace_back(num, den);
  }
  return normalize ? IntervalConfiguration::normalized(std::move(lefts))
                   : IntervalConfiguration(std::move(lefts));
}

inline std::string format_intervals(const IntervalConfiguration& c) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : c.lefts()) doc.push_back({{"num", r.numerator()}, {"den", r.denominator()}});
  return doc.dump();
}

inline std::string format_poset(const Poset& p, bool covers_only) {
  nlohmann::json doc = nlohmann::json::array();
  for (auto [i, j] : covers_only ? p.covers() : p.relations()) doc.push_back({i, j});
  return doc.dump();
}

}  // namespace uiozeta

#pragma once

// Command-line front end. Kept in a header so tests can drive run() with
// string streams instead of spawning processes.
//
// Exit status: 0 success / verification passed, 1 verification found
// failures, 2 usage or validation error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uiozeta/uiozeta.hpp"

namespace uiozeta::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailures = 1;
inline constexpr int kUsage = 2;

namespace detail {

// Positional objects, or one object per non-empty stdin line.
inline std::vector<std::string> objects(const std::vector<std::string>& given, std::istream& in) {
  if (!given.empty()) return given;
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

inline DyckWord read_as_word(const std::string& from, const std::string& text, bool normalize) {
  if (from == "word") return parse_dyck_word(text);
  if (from == "areaseq") return word_from_area_sequence(parse_area_sequence(text));
  if (from == "areaset") return word_from_area_set(parse_area_set(text));
  if (from == "pred") return a_map(parse_pred(text));
  return a_map(uio_from_intervals(parse_intervals(text, normalize)));
}

inline std::string write_from_word(const std::string& to, const DyckWord& d) {
  if (to == "word") return d.str();
  if (to == "areaseq") return format_int_list(area_sequence_from_word(d).vec());
  if (to == "areaset") return format_area_set(area_set_from_word(d));
  if (to == "pred") return format_int_list(a_inverse(d).vec());
  return format_intervals(realize_intervals(a_inverse(d)));
}

inline std::string apply_map(const std::string& name, const std::string& text, bool covers) {
  if (name == "a") return a_map(parse_pred(text)).str();
  if (name == "p") return p_map(parse_pred(text)).str();
  if (name == "q") return format_int_list(q_map(parse_pred(text)).listing.vec());
  if (name == "levels") return format_int_list(levels(parse_pred(text)));
  if (name == "zeta") return zeta(parse_dyck_word(text)).str();
  if (name == "unzeta") return zeta_inverse(parse_dyck_word(text)).str();
  if (name == "a-inverse") return format_int_list(a_inverse(parse_dyck_word(text)).vec());
  if (name == "poset") return format_poset(poset_of(parse_part_listing(text)), covers);
  if (name == "relabel") return format_poset(relabeled_poset(parse_part_listing(text)), covers);
  return format_int_list(grevlex_min_search(parse_pred(text)).vec());  // grevlex-min
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("UIOZETA_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace detail

using CheckRunner = std::function<VerificationReport(const std::string&, int, const HarnessOptions&)>;

/// `runner` defaults to the standard maps; tests pass a fault-injected one.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err, const CheckRunner& runner = {}) {
  CLI::App app{"Unit interval orders, Dyck paths and the zeta map"};
  app.require_subcommand(1);

  const std::vector<std::string> encodings = {"word", "areaseq", "areaset", "pred", "intervals"};
  std::string from, to;
  bool normalize = false;
  auto* convert = app.add_subcommand("convert", "Lossless conversion between encodings");
  convert->add_option("--from", from, "Input encoding")->required()->check(CLI::IsMember(encodings));
  convert->add_option("--to", to, "Output encoding")->required()->check(CLI::IsMember(encodings));
  convert->add_flag("--normalize", normalize, "Sort unsorted interval endpoints instead of rejecting");
  // Objects are taken as leftover arguments so that "[0,1]" and JSON stay whole
  // instead of being split as CLI11 vector syntax.
  convert->allow_extras();
  convert->footer("Objects: positional arguments, or one per stdin line.");

  std::string map_name;
  bool covers = false;
  auto* map = app.add_subcommand("map", "Apply a map to objects");
  map->add_option("--name", map_name, "Map name")
      ->required()
      ->check(CLI::IsMember({"a", "p", "q", "zeta", "unzeta", "a-inverse", "levels", "poset",
                             "relabel", "grevlex-min"}));
  map->add_flag("--covers", covers, "Poset output lists covering relations only");
  map->allow_extras();
  map->footer("Objects: positional arguments, or one per stdin line.");

  std::string check;
  int verify_n = 0;
  unsigned jobs = detail::default_jobs();
  bool json = false;
  int ceiling = -1;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification");
  verify->add_option("--check", check, "Check name")
      ->required()
      ->check(CLI::IsMember({"theorem", "induction", "bijections", "grevlex", "relabel",
                             "diagonals", "unzeta"}));
  verify->add_option("--n", verify_n, "Size")->required();
  verify->add_option("--jobs", jobs, "Worker threads (env UIOZETA_JOBS)")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Emit the JSON report");
  verify->add_option("--ceiling", ceiling, "Override the default size ceiling");

  std::string kind;
  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Stream all objects of size n");
  enumerate->add_option("--kind", kind, "dyck or uio")->required()->check(CLI::IsMember({"dyck", "uio"}));
  enumerate->add_option("--n", enum_n, "Size")->required()->check(CLI::NonNegativeNumber);

  std::string render_word, format = "ascii";
  bool diagonals = false;
  auto* render = app.add_subcommand("render", "Draw a Dyck path");
  render->add_option("word", render_word, "Dyck word")->required();
  render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_flag("--diagonals", diagonals, "SVG: draw the lines y = x + t");

  std::vector<const char*> argv;
  argv.push_back("uiozeta");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*convert) {
      for (const auto& obj : detail::objects(convert->remaining(), in))
        out << detail::write_from_word(to, detail::read_as_word(from, obj, normalize)) << "\n";
      return kOk;
    }
    if (*map) {
      for (const auto& obj : detail::objects(map->remaining(), in))
        out << detail::apply_map(map_name, obj, covers) << "\n";
      return kOk;
    }
    if (*verify) {
      const int limit = ceiling >= 0 ? ceiling : default_ceiling(check);
      if (verify_n > limit) {
        err << "error: n = " << verify_n << " exceeds the ceiling " << limit << " for " << check
            << " (override with --ceiling)\n";
        return kUsage;
      }
      HarnessOptions opt;
      opt.jobs = jobs;
      if (check == "grevlex") opt.grevlex_guard = limit;
      const auto rep = runner ? runner(check, verify_n, opt) : run_check(check, verify_n, opt);
      out << (json ? rep.json().dump(2) + "\n" : rep.text());
      return rep.passed() ? kOk : kFailures;
    }
    if (*enumerate) {
      if (kind == "dyck") {
        DyckEnumerator e(enum_n);
        while (auto d = e.next()) out << d->str() << "\n";
      } else {
        UioEnumerator e(enum_n);
        while (auto u = e.next()) out << format_int_list(u->vec()) << "\n";
      }
      return kOk;
    }
    const auto d = parse_dyck_word(render_word);
    out << (format == "svg" ? render_svg(d, diagonals) : render_ascii(d));
    return kOk;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
}

}  // namespace uiozeta::cli

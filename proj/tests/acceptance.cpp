// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "uiozeta/uiozeta.hpp"

using namespace uiozeta;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

std::string join(const std::vector<int>& v) { return format_int_list(v); }

Outcome insertion_trace() {
  const auto res = q_map(UnitIntervalOrder({0, 0, 1, 1, 3}));
  const std::vector<std::vector<int>> want_words{{0}, {0, 0}, {0, 1, 0}, {0, 1, 1, 0}, {0, 1, 2, 1, 0}};
  std::vector<std::vector<int>> words;
  for (const auto& w : res.trace.words) words.push_back(w.vec());
  const bool ok = words == want_words && res.trace.c == std::vector<int>{0, 0, 1, 1, 1} &&
                  res.trace.levels == LevelProfile{0, 0, 1, 1, 2};
  return {ok, "q=" + join(res.listing.vec()) + " C=" + join(res.trace.c) + " levels=" + join(res.trace.levels)};
}

Outcome zeta_example() {
  const auto z = zeta(parse_dyck_word("aaabababbbab")).str();
  return {z == "aababbaaabbb", "zeta(aaabababbbab)=" + z};
}

Outcome added_peak_chain() {
  const UnitIntervalOrder u({0, 1, 1, 2});
  const auto v = extend(u, 2);
  const auto p = p_map(u).str();
  const auto zp = zeta(p_map(u)).str();
  const auto qv = q_map(v).listing.vec();
  const auto zpv = zeta(p_map(v)).str();
  const bool ok = p == "aaabbabb" && zp == "abaababb" && qv == std::vector<int>{0, 1, 2, 2, 1} &&
                  zpv == "abaabaabbb";
  return {ok, "p=" + p + " zeta(p)=" + zp + " q'=" + join(qv) + " zeta(p')=" + zpv};
}

// Runs a check for n = lo..hi and folds the reports.
template <class Check, class Extra>
Outcome sweep(int lo, int hi, Check check, Extra extra) {
  std::ostringstream os;
  bool ok = true;
  std::chrono::milliseconds total{0};
  for (int n = lo; n <= hi; ++n) {
    const VerificationReport rep = check(n);
    total += rep.elapsed;
    const bool good = rep.passed() && rep.instances_checked == rep.expected_instances && extra(rep);
    if (!good) {
      ok = false;
      os << "[n=" << n << " failed] " << rep.text();
    }
    if (n == hi) os << "n=" << n << ": " << rep.instances_checked << " instances, " << rep.failures.size() << " failures";
  }
  os << ", " << total.count() << " ms total";
  return {ok, os.str()};
}

auto always = [](const VerificationReport&) { return true; };

Outcome theorem_sweep() {
  std::chrono::milliseconds at_top{0};
  auto out = sweep(1, 11, [](int n) { return check_theorem(n); }, [&](const VerificationReport& r) {
    if (r.n == 11) at_top = r.elapsed;
    return r.n != 11 || r.instances_checked == 58786;
  });
  if (at_top > std::chrono::seconds(60)) {
    out.ok = false;
    out.detail += " (n=11 exceeded 60 s)";
  }
  return out;
}

Outcome induction_sweep() {
  return sweep(1, 9, [](int n) { return check_induction_step(n); },
               [](const VerificationReport& r) { return r.metric("r_s_mismatches") == 0u; });
}

Outcome bijection_sweep() {
  return sweep(1, 10, [](int n) { return check_bijections(n); }, [](const VerificationReport& r) {
    const auto c = static_cast<std::uint64_t>(catalan(r.n));
    return r.metric("a_images") == c && r.metric("q_images") == c && r.metric("zeta_images") == c;
  });
}

Outcome relabel_sweep() {
  return sweep(1, 9, [](int n) { return check_relabeling(n); }, always);
}

Outcome diagonal_sweep() {
  return sweep(1, 10, [](int n) { return check_diagonals(n); }, always);
}

Outcome grevlex_five() {
  auto out = sweep(5, 5, [](int n) { return check_grevlex(n); },
                   [](const VerificationReport& r) { return r.instances_checked == 42 && r.elapsed <= std::chrono::seconds(120); });
  return out;
}

Outcome unzeta_sweep() {
  return sweep(1, 10, [](int n) { return check_zeta_inverse(n); }, always);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"insertion trace of the five-element order", insertion_trace},
      {"zeta of aaabababbbab", zeta_example},
      {"added peak on the four-element order", added_peak_chain},
      {"a = zeta o p for n <= 11", theorem_sweep},
      {"induction step for n <= 9 with r = s", induction_sweep},
      {"bijections for n <= 10", bijection_sweep},
      {"relabelling recovers the order for n <= 9", relabel_sweep},
      {"diagonal strips alternate for n <= 10", diagonal_sweep},
      {"grevlex minimum equals q at n = 5", grevlex_five},
      {"zeta_inverse o zeta = id for n <= 10", unzeta_sweep},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

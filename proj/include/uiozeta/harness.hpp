#pragma once

// Exhaustive verification of a(U) = zeta(p(U)) and the facts behind it.
//
// Every check enumerates its whole domain, shards it by enumeration rank
// across worker threads and merges failures sorted by rank, so a report's
// content depends only on n. Maps are taken through a policy object so tests
// can inject broken implementations and watch the checks catch them.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"
#include "uiozeta/partlist.hpp"
#include "uiozeta/text.hpp"
#include "uiozeta/uio.hpp"
#include "uiozeta/zeta.hpp"

namespace uiozeta {

struct Counterexample {
  std::uint64_t rank = 0;  // enumeration rank of the failing instance
  std::uint64_t sub = 0;   // secondary key (extension parameter k, ...)
  std::vector<std::pair<std::string, std::string>> fields;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string check_name;
  int n = 0;
  std::uint64_t instances_checked = 0;
  std::uint64_t expected_instances = 0;
  std::vector<Counterexample> failures;
  std::vector<std::pair<std::string, std::uint64_t>> metrics;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }

  std::optional<std::uint64_t> metric(const std::string& key) const {
    for (const auto& [k, v] : metrics)
      if (k == key) return v;
    return std::nullopt;
  }

  std::string text() const {
    std::ostringstream os;
    os << check_name << " n=" << n << ": " << instances_checked
       << (instances_checked == 1 ? " instance, " : " instances, ") << failures.size()
       << (failures.size() == 1 ? " failure" : " failures") << " (expected "
       << expected_instances << " instances, " << elapsed.count() << " ms)\n";
    for (const auto& [k, v] : metrics) os << "  " << k << ": " << v << "\n";
    for (const auto& f : failures) {
      os << "  FAIL rank " << f.rank;
      if (f.sub != 0) os << "." << f.sub;
      os << "\n";
      for (const auto& [k, v] : f.fields) os << "    " << k << " = " << v << "\n";
    }
    return os.str();
  }

  nlohmann::json json() const {
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& f : failures) {
      nlohmann::json rec = {{"rank", f.rank}, {"sub", f.sub}};
      for (const auto& [k, v] : f.fields) rec[k] = v;
      failures_json.push_back(std::move(rec));
    }
    nlohmann::json metrics_json = nlohmann::json::object();
    for (const auto& [k, v] : metrics) metrics_json[k] = v;
    return {{"check", check_name},
            {"n", n},
            {"instances", instances_checked},
            {"expected_instances", expected_instances},
            {"passed", passed()},
            {"failures", std::move(failures_json)},
            {"metrics", std::move(metrics_json)},
            {"elapsed_ms", elapsed.count()}};
  }
};

struct HarnessOptions {
  unsigned jobs = 1;
  int grevlex_guard = 5;
};

// Default CLI ceilings; the library functions themselves accept any n.
inline constexpr int kTheoremCeiling = 11;
inline constexpr int kBijectionsCeiling = 11;
inline constexpr int kInductionCeiling = 9;
inline constexpr int kGrevlexCeiling = 5;

/// The maps under test.
struct StandardMaps {
  DyckWord a(const UnitIntervalOrder& u) const { return a_map(u); }
  UnitIntervalOrder a_inv(const DyckWord& d) const { return a_inverse(d); }
  PartListing q(const UnitIntervalOrder& u) const { return q_map(u).listing; }
  DyckWord zeta(const DyckWord& d) const { return uiozeta::zeta(d); }
  DyckWord zeta_inv(const DyckWord& d) const { return zeta_inverse(d); }
};

namespace detail {

struct ShardResult {
  std::uint64_t instances = 0;
  std::vector<Counterexample> failures;
};

/// Runs fn(rank, item, shard) over contiguous rank ranges on `jobs` threads
/// and merges the results deterministically.
template <class Item, class Fn>
ShardResult run_sharded(const std::vector<Item>& items, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
  std::vector<ShardResult> shards(jobs);
  auto work = [&](unsigned s) {
    const std::size_t lo = items.size() * s / jobs;
    const std::size_t hi = items.size() * (s + 1) / jobs;
    for (std::size_t r = lo; r < hi; ++r) fn(static_cast<std::uint64_t>(r), items[r], shards[s]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(work, s);
  }
  ShardResult merged;
  for (auto& s : shards) {
    merged.instances += s.instances;
    for (auto& f : s.failures) merged.failures.push_back(std::move(f));
  }
  std::stable_sort(merged.failures.begin(), merged.failures.end(),
                   [](const auto& x, const auto& y) {
                     return std::pair(x.rank, x.sub) < std::pair(y.rank, y.sub);
                   });
  return merged;
}

inline void require_positive(const char* check, int n) {
  if (n < 1) throw PreconditionError(std::string(check) + ": n must be >= 1");
}

template <class Body>
VerificationReport timed(std::string name, int n, std::uint64_t expected, Body body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check_name = std::move(name);
  rep.n = n;
  rep.expected_instances = expected;
  body(rep);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

template <class Maps>
DyckWord p_of(const Maps& maps, const UnitIntervalOrder& u) {
  return word_from_area_sequence(AreaSequence(maps.q(u).vec()));
}

}  // namespace detail

/// a(U) = zeta(p(U)) for every U in U_n.
template <class Maps = StandardMaps>
VerificationReport check_theorem(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_theorem", n);
  return detail::timed("theorem", n, catalan(n), [&](VerificationReport& rep) {
    const auto orders = all_unit_interval_orders(n);
    auto res = detail::run_sharded(orders, opt.jobs, [&](std::uint64_t rank, const UnitIntervalOrder& u,
                                                         detail::ShardResult& out) {
      ++out.instances;
      try {
        const auto q = maps.q(u);
        const auto p = word_from_area_sequence(AreaSequence(q.vec()));
        const auto lhs = maps.a(u);
        const auto rhs = maps.zeta(p);
        if (lhs != rhs) {
          out.failures.push_back({rank, 0,
                                  {{"pred", format_int_list(u.vec())},
                                   {"q", format_int_list(q.vec())},
                                   {"p", p.str()},
                                   {"a", lhs.str()},
                                   {"zeta_p", rhs.str()}}});
        }
      } catch (const std::exception& ex) {
        out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())}, {"error", ex.what()}}});
      }
    });
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
  });
}

/// Names of the failed sub-checks for one extension (u, k), with the
/// intermediate objects recorded in `fields`.
template <class Maps = StandardMaps>
std::vector<std::string> extension_failures(const UnitIntervalOrder& u, int k,
                                            std::vector<std::pair<std::string, std::string>>& fields,
                                            const Maps& maps = {}) {
  std::vector<std::string> failed;
  const auto bigger = extend(u, k);
  const auto params = added_peak_parameters(u, k);
  const auto q_small = maps.q(u);
  const auto q_big = maps.q(bigger);
  fields = {{"pred", format_int_list(u.vec())},
            {"k", std::to_string(k)},
            {"q", format_int_list(q_small.vec())},
            {"q_extended", format_int_list(q_big.vec())},
            {"r", std::to_string(params.r)},
            {"s", std::to_string(params.s)}};

  // (i) one inserted letter, and that letter makes the final maximal peak.
  bool one_letter = q_big.size() == q_small.size() + 1;
  std::size_t at = params.inserted_index;
  if (one_letter) {
    one_letter = at < q_big.vec().size() && q_big[at] == params.level;
    if (one_letter) {
      auto removed = q_big.vec();
      removed.erase(removed.begin() + static_cast<std::ptrdiff_t>(at));
      one_letter = removed == q_small.vec();
    }
  }
  bool final_max = false;
  if (one_letter) {
    const auto p_big = word_from_area_sequence(AreaSequence(q_big.vec()));
    const auto pk = final_maximal_peak(p_big);
    final_max = pk && pk->apex.y == static_cast<int>(at) + 1;
    fields.emplace_back("p_extended", p_big.str());
  }
  if (!one_letter || !final_max) failed.emplace_back("final-maximal-peak");

  // (ii) zeta side.
  const auto zp_small = maps.zeta(detail::p_of(maps, u));
  const auto zp_big = maps.zeta(detail::p_of(maps, bigger));
  fields.emplace_back("zeta_p", zp_small.str());
  fields.emplace_back("zeta_p_extended", zp_big.str());
  if (params.r > trailing_rights(zp_small) || add_final_peak(zp_small, params.r) != zp_big)
    failed.emplace_back("zeta-side-peak");

  // (iii) area side.
  const auto a_small = maps.a(u);
  const auto a_big = maps.a(bigger);
  fields.emplace_back("a", a_small.str());
  fields.emplace_back("a_extended", a_big.str());
  if (params.s > trailing_rights(a_small) || add_final_peak(a_small, params.s) != a_big)
    failed.emplace_back("area-side-peak");

  // (iv)
  if (params.r != params.s) failed.emplace_back("r-equals-s");
  return failed;
}

/// Number of (u, k) extension pairs over U_n: sum of n - pred[n] + 1.
inline std::uint64_t extension_count(int n) {
  std::uint64_t total = 0;
  UioEnumerator e(n);
  while (auto u = e.next()) total += static_cast<std::uint64_t>(n - (n == 0 ? 0 : u->pred_of(n)) + 1);
  return total;
}

/// For every U in U_n and every admissible k, the four facts that carry the
/// induction from n to n+1.
template <class Maps = StandardMaps>
VerificationReport check_induction_step(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_induction_step", n);
  return detail::timed("induction", n, extension_count(n), [&](VerificationReport& rep) {
    const auto orders = all_unit_interval_orders(n);
    std::uint64_t r_eq_s = 0;
    auto res = detail::run_sharded(orders, opt.jobs, [&](std::uint64_t rank, const UnitIntervalOrder& u,
                                                         detail::ShardResult& out) {
      for (int k = u.pred_of(n); k <= n; ++k) {
        ++out.instances;
        std::vector<std::pair<std::string, std::string>> fields;
        try {
          const auto failed = extension_failures(u, k, fields, maps);
          if (!failed.empty()) {
            std::string names;
            for (const auto& f : failed) names += (names.empty() ? "" : ",") + f;
            fields.emplace(fields.begin(), "failed", names);
            out.failures.push_back({rank, static_cast<std::uint64_t>(k), std::move(fields)});
          }
        } catch (const std::exception& ex) {
          fields.emplace(fields.begin(), "error", ex.what());
          out.failures.push_back({rank, static_cast<std::uint64_t>(k), std::move(fields)});
        }
      }
    });
    rep.instances_checked = res.instances;
    for (const auto& f : res.failures) {
      for (const auto& [key, val] : f.fields)
        if (key == "failed" && val.find("r-equals-s") != std::string::npos) ++r_eq_s;
    }
    rep.metrics.emplace_back("r_s_mismatches", r_eq_s);
    rep.failures = std::move(res.failures);
  });
}

/// a, q and zeta are injective on their size-n domains; q lands in area
/// sequences; a_inverse undoes a.
template <class Maps = StandardMaps>
VerificationReport check_bijections(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_bijections", n);
  return detail::timed("bijections", n, catalan(n), [&](VerificationReport& rep) {
    const auto orders = all_unit_interval_orders(n);
    const auto words = all_dyck_words(n);
    std::vector<std::string> a_img(orders.size()), q_img(orders.size()), z_img(words.size());

    auto res = detail::run_sharded(orders, opt.jobs, [&](std::uint64_t rank, const UnitIntervalOrder& u,
                                                         detail::ShardResult& out) {
      ++out.instances;
      try {
        const auto a = maps.a(u);
        a_img[rank] = a.str();
        const auto q = maps.q(u);
        q_img[rank] = format_int_list(q.vec());
        if (auto why = AreaSequence::violation(q.vec())) {
          out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())},
                                            {"q", q_img[rank]}, {"invalid", *why}}});
        }
        const auto back = maps.a_inv(a);
        if (back != u) {
          out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())}, {"a", a.str()},
                                            {"a_inverse", format_int_list(back.vec())}}});
        }
      } catch (const std::exception& ex) {
        out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())}, {"error", ex.what()}}});
      }
    });
    auto zres = detail::run_sharded(words, opt.jobs, [&](std::uint64_t rank, const DyckWord& d,
                                                         detail::ShardResult& out) {
      try {
        z_img[rank] = maps.zeta(d).str();
      } catch (const std::exception& ex) {
        out.failures.push_back({rank, 1, {{"word", d.str()}, {"error", ex.what()}}});
      }
    });

    auto distinct = [](const std::vector<std::string>& v) {
      return static_cast<std::uint64_t>(std::set<std::string>(v.begin(), v.end()).size());
    };
    const auto na = distinct(a_img), nq = distinct(q_img), nz = distinct(z_img);
    rep.metrics = {{"orders", orders.size()}, {"paths", words.size()},
                   {"a_images", na}, {"q_images", nq}, {"zeta_images", nz}};
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
    for (auto& f : zres.failures) rep.failures.push_back(std::move(f));
    const std::uint64_t want = catalan(n);
    const std::pair<const char*, std::uint64_t> images[] = {
        {"a_images", na}, {"q_images", nq}, {"zeta_images", nz}};
    for (auto [name, got] : images) {
      if (got != want) {
        rep.failures.push_back({std::numeric_limits<std::uint64_t>::max(), 0,
                                {{"map", name}, {"distinct", std::to_string(got)},
                                 {"expected", std::to_string(want)}}});
      }
    }
  });
}

/// grevlex_min_search(u) = q(u) for every U in U_n.
template <class Maps = StandardMaps>
VerificationReport check_grevlex(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_grevlex", n);
  if (n > opt.grevlex_guard) {
    throw CapabilityError("check_grevlex: n = " + std::to_string(n) + " exceeds search guard " +
                          std::to_string(opt.grevlex_guard));
  }
  return detail::timed("grevlex", n, catalan(n), [&](VerificationReport& rep) {
    const auto orders = all_unit_interval_orders(n);
    auto res = detail::run_sharded(orders, opt.jobs, [&](std::uint64_t rank, const UnitIntervalOrder& u,
                                                         detail::ShardResult& out) {
      ++out.instances;
      const auto found = grevlex_min_search(u, opt.grevlex_guard);
      const auto q = maps.q(u);
      if (found != q) {
        out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())},
                                          {"grevlex_min", format_int_list(found.vec())},
                                          {"q", format_int_list(q.vec())}}});
      }
    });
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
  });
}

/// Relabelling q(u) by f recovers u exactly (not just up to isomorphism).
template <class Maps = StandardMaps>
VerificationReport check_relabeling(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_relabeling", n);
  return detail::timed("relabel", n, catalan(n), [&](VerificationReport& rep) {
    const auto orders = all_unit_interval_orders(n);
    auto res = detail::run_sharded(orders, opt.jobs, [&](std::uint64_t rank, const UnitIntervalOrder& u,
                                                         detail::ShardResult& out) {
      ++out.instances;
      const auto q = maps.q(u);
      const auto relabeled = relabeled_poset(q);
      const auto as_order = as_unit_interval_order(relabeled);
      if (!as_order || *as_order != u) {
        out.failures.push_back({rank, 0, {{"pred", format_int_list(u.vec())},
                                          {"q", format_int_list(q.vec())},
                                          {"relabeled_pred", as_order ? format_int_list(as_order->vec())
                                                                      : std::string("not a labelled unit interval order")}}});
      }
    });
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
  });
}

/// Every strip between consecutive diagonals reads a b a b ... a b.
inline VerificationReport check_diagonals(int n, const HarnessOptions& opt = {}) {
  detail::require_positive("check_diagonals", n);
  return detail::timed("diagonals", n, catalan(n), [&](VerificationReport& rep) {
    const auto words = all_dyck_words(n);
    auto res = detail::run_sharded(words, opt.jobs, [&](std::uint64_t rank, const DyckWord& d,
                                                        detail::ShardResult& out) {
      ++out.instances;
      const auto dec = diagonal_decomposition(d);
      bool ok = dec.label_count() == d.length();
      for (std::size_t t = 1; t < dec.line_count() && ok; ++t) {
        if (!dec.strip_alternates(t)) {
          ok = false;
          out.failures.push_back({rank, t, {{"word", d.str()}, {"strip", dec.strip(t)}}});
        }
      }
      if (dec.label_count() != d.length())
        out.failures.push_back({rank, 0, {{"word", d.str()}, {"labels", std::to_string(dec.label_count())}}});
    });
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
  });
}

/// zeta_inverse(zeta(d)) = d and zeta(zeta_inverse(d)) = d on all of D_n.
template <class Maps = StandardMaps>
VerificationReport check_zeta_inverse(int n, const HarnessOptions& opt = {}, const Maps& maps = {}) {
  detail::require_positive("check_zeta_inverse", n);
  return detail::timed("unzeta", n, catalan(n), [&](VerificationReport& rep) {
    const auto words = all_dyck_words(n);
    auto res = detail::run_sharded(words, opt.jobs, [&](std::uint64_t rank, const DyckWord& d,
                                                        detail::ShardResult& out) {
      ++out.instances;
      try {
        const auto z = maps.zeta(d);
        const auto back = maps.zeta_inv(z);
        const auto forth = maps.zeta(maps.zeta_inv(d));
        if (back != d || forth != d) {
          out.failures.push_back({rank, 0, {{"word", d.str()}, {"zeta", z.str()},
                                            {"unzeta_zeta", back.str()}, {"zeta_unzeta", forth.str()}}});
        }
      } catch (const std::exception& ex) {
        out.failures.push_back({rank, 0, {{"word", d.str()}, {"error", ex.what()}}});
      }
    });
    rep.instances_checked = res.instances;
    rep.failures = std::move(res.failures);
  });
}

/// Dispatch by check name: theorem, induction, bijections, grevlex, relabel,
/// diagonals, unzeta.
inline VerificationReport run_check(const std::string& name, int n, const HarnessOptions& opt = {}) {
  if (name == "theorem") return check_theorem(n, opt);
  if (name == "induction") return check_induction_step(n, opt);
  if (name == "bijections") return check_bijections(n, opt);
  if (name == "grevlex") return check_grevlex(n, opt);
  if (name == "relabel") return check_relabeling(n, opt);
  if (name == "diagonals") return check_diagonals(n, opt);
  if (name == "unzeta") return check_zeta_inverse(n, opt);
  throw PreconditionError("unknown check: " + name);
}

inline int default_ceiling(const std::string& name) {
  if (name == "theorem") return kTheoremCeiling;
  if (name == "induction") return kInductionCeiling;
  if (name == "grevlex") return kGrevlexCeiling;
  if (name == "relabel") return 9;
  return kBijectionsCeiling;
}

}  // namespace uiozeta

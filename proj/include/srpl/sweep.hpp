#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "srpl/classifier.hpp"
#include "srpl/crosscheck.hpp"
#include "srpl/enumerate.hpp"

namespace srpl {

inline constexpr int kMaxSweepVertices = 7;

/// Outcome of one check on one complex, as two comparable verdict strings.
struct CheckOutcome {
  std::string theorem;  // "holds", "fails" or "oracle_only"
  std::string oracle;   // "holds" or "fails"
};

struct SweepCheck {
  std::string id;
  std::function<bool(const SimplicialComplex&)> applies;
  std::function<CheckOutcome(const SimplicialComplex&, const OracleOptions&)> run;
};

namespace detail {

inline std::string holds(bool b) { return b ? "holds" : "fails"; }

inline bool min_dim(const SimplicialComplex& c, int d) { return !c.is_void() && c.dimension() >= d; }

inline SweepCheck predicate_pair(std::string id, std::function<bool(const SimplicialComplex&)> applies,
                                 std::function<bool(const SimplicialComplex&)> lhs,
                                 std::function<bool(const SimplicialComplex&)> rhs) {
  return {std::move(id), std::move(applies),
          [lhs = std::move(lhs), rhs = std::move(rhs)](const SimplicialComplex& c, const OracleOptions&) {
            return CheckOutcome{holds(lhs(c)), holds(rhs(c))};
          }};
}

/// Classifier verdict at m = 3 against the oracle on the constructed power.
inline SweepCheck classifier_vs_oracle(std::string id, IdealKind ideal, PowerKind power, Property prop,
                                       std::function<bool(const SimplicialComplex&)> applies) {
  return {std::move(id), std::move(applies),
          [=](const SimplicialComplex& c, const OracleOptions& opt) {
            const Query q{c, ideal, power, prop, 3};
            const auto cmp = verify_against_oracle(q, opt);
            return CheckOutcome{to_string(cmp.report.verdict), holds(cmp.oracle_verdict)};
          }};
}

}  // namespace detail

/// Every check the sweep knows, in output order.
inline const std::vector<SweepCheck>& sweep_checks() {
  using detail::min_dim;
  static const std::vector<SweepCheck> checks = [] {
    std::vector<SweepCheck> v;
    const auto any = [](const SimplicialComplex& c) { return !c.is_void(); };
    const auto dim2 = [](const SimplicialComplex& c) { return min_dim(c, 2); };
    const auto dim1 = [](const SimplicialComplex& c) { return min_dim(c, 1); };
    const auto pure_dim2 = [](const SimplicialComplex& c) { return min_dim(c, 2) && c.is_pure(); };
    const auto graph = [](const SimplicialComplex& c) {
      return !c.is_void() && c.dimension() == 1 && c.is_pure();
    };
    v.push_back(detail::predicate_pair("pair-criterion", any, is_matroid_exchange, is_matroid_pair));
    v.push_back(detail::predicate_pair("graph-criterion", graph, is_matroid_exchange, graph_matroid_criterion));
    v.push_back(detail::predicate_pair("local-matroid", dim2, is_matroid_exchange, [](const SimplicialComplex& c) {
      return is_connected(c) && is_locally_matroid(c);
    }));
    v.push_back(detail::predicate_pair("local-matroid-components", pure_dim2, is_locally_matroid,
                                       [](const SimplicialComplex& c) { return matroid_components(c).ok(); }));
    v.push_back(detail::predicate_pair("local-ci", dim2, is_complete_intersection, [](const SimplicialComplex& c) {
      return is_connected(c) && is_locally_ci(c);
    }));
    v.push_back(detail::predicate_pair("matroid-duality", any, is_matroid_exchange, [](const SimplicialComplex& c) {
      return is_matroid_exchange(complement_complex(c));
    }));
    using detail::classifier_vs_oracle;
    const auto sr = IdealKind::stanley_reisner;
    v.push_back(classifier_vs_oracle("symbolic-cm-m3", sr, PowerKind::symbolic, Property::cm, dim1));
    v.push_back(classifier_vs_oracle("symbolic-s2-m3", sr, PowerKind::symbolic, Property::s2, dim2));
    v.push_back(classifier_vs_oracle("ordinary-cm-m3", sr, PowerKind::ordinary, Property::cm, dim1));
    v.push_back(classifier_vs_oracle("ordinary-s2-m3", sr, PowerKind::ordinary, Property::s2, dim1));
    v.push_back(classifier_vs_oracle("symbolic-gcm-m3", sr, PowerKind::symbolic, Property::gcm, dim1));
    v.push_back(classifier_vs_oracle("ordinary-gcm-m3", sr, PowerKind::ordinary, Property::gcm, dim1));
    v.push_back(classifier_vs_oracle("cover-cm-m3", IdealKind::cover, PowerKind::symbolic, Property::cm, dim1));
    v.push_back(classifier_vs_oracle("facet-cm-m3", IdealKind::facet, PowerKind::symbolic, Property::cm,
                                     [](const SimplicialComplex& c) {
                                       return !c.is_void() && c.is_pure() &&
                                              (c.dimension() == 1 || c.dimension() == 2);
                                     }));
    v.push_back({"hochster-degree-complex", any, [](const SimplicialComplex& c, const OracleOptions&) {
                   const auto bad = hochster_degree_complex_mismatch(c);
                   return CheckOutcome{"holds", detail::holds(!bad)};
                 }});
    v.push_back({"reisner", any, [](const SimplicialComplex& c, const OracleOptions& opt) {
                   return CheckOutcome{detail::holds(reisner_is_cm(c, opt.field)),
                                       detail::holds(is_cm(sr_ideal(c), opt))};
                 }});
    return v;
  }();
  return checks;
}

inline const SweepCheck& find_check(const std::string& id) {
  for (const auto& c : sweep_checks())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown check \"" + id + "\"");
}

struct DimFilter {
  int min = INT_MIN;
  int max = INT_MAX;

  bool accepts(int d) const { return d >= min && d <= max; }

  /// "any", "d", ">=d" or "<=d".
  static DimFilter parse(const std::string& s) {
    auto number = [&](const std::string& t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || t.empty()) throw std::invalid_argument("bad dimension filter \"" + s + "\"");
      return v;
    };
    if (s.empty() || s == "any") return {};
    if (s.rfind(">=", 0) == 0) return {number(s.substr(2)), INT_MAX};
    if (s.rfind("<=", 0) == 0) return {INT_MIN, number(s.substr(2))};
    const int d = number(s);
    return {d, d};
  }
};

struct SweepOptions {
  int n_max = 5;
  DimFilter dims;
  std::vector<std::string> checks;  // empty: all
  double budget_seconds = 0;        // 0: unlimited
  unsigned parallel = 1;
  std::size_t resume_from = 0;
  std::size_t random_count = 200;   // complexes drawn on 7 vertices
  std::uint64_t seed = 20240607;
  Field field = Field::rationals();
};

struct SweepRow {
  std::size_t complex_index;
  std::string signature;
  std::string check_id;
  CheckOutcome outcome;
  double seconds;

  bool disagrees() const { return outcome.theorem != "oracle_only" && outcome.theorem != outcome.oracle; }
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t total = 0;      // complexes in the family
  std::size_t completed = 0;  // complexes finished, counted from the start of the family
  /// Index to pass as resume_from when the budget ran out.
  std::optional<std::size_t> resume_token;

  std::size_t disagreements() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.disagrees(); }));
  }
};

/// Exact isomorphism classes on up to 6 vertices, plus a fixed random sample
/// on 7 vertices when n_max = 7, filtered by dimension.
inline std::vector<SimplicialComplex> sweep_family(const SweepOptions& opt) {
  if (opt.n_max < 1 || opt.n_max > kMaxSweepVertices)
    throw std::invalid_argument("sweep needs 1 <= n <= " + std::to_string(kMaxSweepVertices));
  auto all = complex_classes_up_to(std::min(opt.n_max, kMaxEnumerated));
  if (opt.n_max == kMaxSweepVertices) {
    auto extra = random_complexes(kMaxSweepVertices, opt.random_count, opt.seed);
    all.insert(all.end(), extra.begin(), extra.end());
  }
  std::vector<SimplicialComplex> out;
  for (auto& c : all)
    if (opt.dims.accepts(c.dimension())) out.push_back(std::move(c));
  return out;
}

inline SweepResult run_sweep(const SweepOptions& opt) {
  std::vector<const SweepCheck*> checks;
  if (opt.checks.empty()) {
    for (const auto& c : sweep_checks()) checks.push_back(&c);
  } else {
    for (const auto& id : opt.checks) checks.push_back(&find_check(id));
  }
  const auto family = sweep_family(opt);
  SweepResult result;
  result.total = family.size();
  if (opt.resume_from > family.size()) throw std::invalid_argument("resume token beyond the family size");

  OracleOptions oracle{opt.field, {}};
  if (opt.budget_seconds > 0) oracle.deadline = Deadline::after_seconds(opt.budget_seconds);

  const std::size_t count = family.size() - opt.resume_from;
  std::vector<std::vector<SweepRow>> rows(count);
  std::vector<char> done(count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (!stop) {
      const std::size_t k = next++;
      if (k >= count) return;
      const std::size_t index = opt.resume_from + k;
      const auto& c = family[index];
      try {
        if (oracle.deadline.expired()) throw BudgetExceeded("time budget exceeded");
        const std::string sig = signature(c);
        for (const SweepCheck* check : checks) {
          if (!check->applies(c)) continue;
          const auto start = std::chrono::steady_clock::now();
          CheckOutcome out = check->run(c, oracle);
          const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          rows[k].push_back({index, sig, check->id, std::move(out), secs});
        }
        done[k] = 1;
      } catch (const BudgetExceeded&) {
        stop = true;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };

  const unsigned threads = std::max(1u, opt.parallel);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // keep the finished prefix so a resumed run neither skips nor repeats work
  std::size_t prefix = 0;
  while (prefix < count && done[prefix]) ++prefix;
  for (std::size_t k = 0; k < prefix; ++k)
    for (auto& r : rows[k]) result.rows.push_back(std::move(r));
  result.completed = opt.resume_from + prefix;
  if (prefix < count) result.resume_token = result.completed;
  return result;
}

inline std::string to_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "complex_signature,check_id,theorem_verdict,oracle_verdict,seconds\n";
  for (const auto& row : r.rows) {
    out << '"' << row.signature << "\"," << row.check_id << ',' << row.outcome.theorem << ','
        << row.outcome.oracle << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", row.seconds);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace srpl

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "treebialg/free_module.hpp"

namespace treebialg {

struct Counterexample {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one exhaustive law check. The counterexample, if any, is the
/// one with the smallest instance string, so the report does not depend on
/// evaluation order or worker count.
struct LawReport {
  std::string law;
  int max_vertices = 0;
  std::size_t instances = 0;
  std::size_t zero_instances = 0;  // instances where both sides vanish
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
  nlohmann::json to_json() const;
};

struct CaseResult {
  std::optional<Counterexample> failure;
  bool both_zero = false;
};

inline CaseResult compare_sides(const std::string& instance, const TensorElement& lhs, const TensorElement& rhs) {
  CaseResult r;
  r.both_zero = lhs.is_zero() && rhs.is_zero();
  if (lhs != rhs) r.failure = Counterexample{instance, render(lhs), render(rhs)};
  return r;
}

/// Runs `check(i)` for every i < count on `jobs` worker threads.
template <class Check>
LawReport run_law(std::string law, int max_vertices, std::size_t count, int jobs, Check&& check) {
  jobs = std::max(1, jobs);
  struct Partial {
    std::size_t zero = 0;
    std::optional<Counterexample> worst;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(jobs));
  auto work = [&](std::size_t w) {
    Partial& p = partial[w];
    for (std::size_t i = w; i < count; i += static_cast<std::size_t>(jobs)) {
      CaseResult r = check(i);
      if (r.both_zero) ++p.zero;
      if (r.failure && (!p.worst || r.failure->instance < p.worst->instance)) p.worst = std::move(r.failure);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < static_cast<std::size_t>(jobs); ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  LawReport report;
  report.law = std::move(law);
  report.max_vertices = max_vertices;
  report.instances = count;
  for (auto& p : partial) {
    report.zero_instances += p.zero;
    if (p.worst && (!report.counterexample || p.worst->instance < report.counterexample->instance))
      report.counterexample = std::move(p.worst);
  }
  return report;
}

}  // namespace treebialg

#include "treebialg/law_report.hpp"

namespace treebialg {

nlohmann::json LawReport::to_json() const {
  nlohmann::json j{{"law", law},
                   {"max_vertices", max_vertices},
                   {"instances", instances},
                   {"zero_instances", zero_instances},
                   {"status", passed() ? "pass" : "fail"}};
  if (counterexample) {
    j["counterexample"] = {{"instance", counterexample->instance},
                           {"lhs", counterexample->lhs},
                           {"rhs", counterexample->rhs}};
  }
  return j;
}

}  // namespace treebialg

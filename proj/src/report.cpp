#include "ringlab/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ringlab {

using nlohmann::json;

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  if (a.failed_clause != b.failed_clause) return a.failed_clause < b.failed_clause;
  return a.vars < b.vars;
}

void TheoremReport::finalize(bool budget_hit) {
  std::sort(counterexamples.begin(), counterexamples.end(), counterexample_less);
  if (budget_hit) {
    status = CheckStatus::kSkipped;
    skip_reason = "budget";
  } else {
    status = counterexamples.empty() ? CheckStatus::kPass : CheckStatus::kFail;
    skip_reason.clear();
  }
}

std::string status_string(const TheoremReport& r) {
  switch (r.status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped(" + r.skip_reason + ")";
  }
  return "?";
}

std::string TheoremReport::to_json() const {
  json j;
  j["theorem"] = theorem;
  j["ring"] = ring;
  j["tuples_scanned"] = tuples_scanned;
  json cxs = json::array();
  for (const auto& cx : counterexamples) {
    json e;
    json vars;
    for (const auto& [k, v] : cx.vars) vars[k] = v;
    e["vars"] = std::move(vars);
    e["failed_clause"] = cx.failed_clause;
    cxs.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cxs);
  j["status"] = status_string(*this);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

TheoremReport TheoremReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  TheoremReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.ring = j.at("ring").get<std::string>();
  r.tuples_scanned = j.at("tuples_scanned").get<std::int64_t>();
  for (const auto& e : j.at("counterexamples")) {
    Counterexample cx;
    for (const auto& [k, v] : e.at("vars").items())
      cx.vars.emplace_back(k, v.get<std::string>());
    cx.failed_clause = e.at("failed_clause").get<std::string>();
    r.counterexamples.push_back(std::move(cx));
  }
  const std::string s = j.at("status").get<std::string>();
  if (s == "pass") {
    r.status = CheckStatus::kPass;
  } else if (s == "fail") {
    r.status = CheckStatus::kFail;
  } else {
    r.status = CheckStatus::kSkipped;
    if (s.size() > 9 && s.rfind("skipped(", 0) == 0)
      r.skip_reason = s.substr(8, s.size() - 9);
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

std::string markdown_summary(const std::vector<TheoremReport>& reports) {
  std::map<std::string, std::vector<const TheoremReport*>> by_ring;
  for (const auto& r : reports) by_ring[r.ring].push_back(&r);

  std::ostringstream os;
  os << "# Verification summary\n";
  for (const auto& [ring, list] : by_ring) {
    os << "\n## " << ring << "\n\n";
    os << "| theorem | status | tuples | counterexamples | ms |\n";
    os << "|---|---|---:|---:|---:|\n";
    for (const auto* r : list) {
      os << "| " << r->theorem << " | " << status_string(*r) << " | "
         << r->tuples_scanned << " | " << r->counterexamples.size() << " | "
         << r->elapsed_ms << " |\n";
    }
  }
  std::size_t fails = 0, skips = 0;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::kFail) ++fails;
    if (r.status == CheckStatus::kSkipped) ++skips;
  }
  os << "\nTotal: " << reports.size() << " reports, " << fails << " failed, "
     << skips << " skipped.\n";
  return os.str();
}

Counterexample violation_to_counterexample(const Violation& v) {
  return Counterexample{v.vars, v.clause};
}

}  // namespace ringlab

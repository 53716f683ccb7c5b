#include "quantcat/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace quantcat {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (CheckResult c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (const auto& n : other.notices) notices.push_back(prefix.empty() ? n : prefix + n);
  for (const auto& t : other.timings) timings.emplace_back(prefix + t.first, t.second);
}

Check::Check(std::string name, bool sampled) {
  result_.name = std::move(name);
  result_.sampled = sampled;
}

bool Check::record(bool ok, const std::function<Json()>& witness) {
  ++result_.cases;
  if (!ok) {
    if (result_.failures == 0) result_.witness = witness ? witness() : Json::object();
    ++result_.failures;
  }
  return ok;
}

void Check::skip(std::string reason) {
  skipped_ = true;
  result_.note = std::move(reason);
}

CheckResult Check::finish() const {
  CheckResult r = result_;
  if (r.failures > 0) {
    r.verdict = Verdict::fail;
    if (r.witness.is_null()) r.witness = Json::object();
  } else if (skipped_ || r.cases == 0) {
    r.verdict = Verdict::skipped;
    if (r.note.empty()) r.note = "no cases in corpus";
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

Json to_json_value(const Report& report) {
  Json out = Json::object();
  if (!report.title.empty()) out["title"] = report.title;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["verdict"] = std::string(to_string(c.verdict));
    if (c.sampled) j["sampled"] = true;
    j["cases"] = c.cases;
    if (c.failures > 0) j["failures"] = c.failures;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.verdict == Verdict::fail) j["witness"] = c.witness.is_null() ? Json::object() : c.witness;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  if (!report.notices.empty()) out["notices"] = report.notices;
  return out;
}

std::string to_json(const Report& report) { return to_json_value(report).dump(2) + "\n"; }

std::string to_table(const Report& report) {
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  if (!report.title.empty()) os << report.title << "\n";
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("check", width) << "  " << pad("verdict", 8) << "  " << pad("cases", 10) << "  note\n";
  os << std::string(width, '-') << "  " << std::string(8, '-') << "  " << std::string(10, '-') << "  ----\n";
  for (const auto& c : report.checks) {
    std::string note = c.note;
    if (c.sampled) note = note.empty() ? "sampled" : "sampled; " + note;
    os << pad(c.name, width) << "  " << pad(std::string(to_string(c.verdict)), 8) << "  "
       << pad(std::to_string(c.cases), 10) << "  " << note << "\n";
    if (c.verdict == Verdict::fail) os << "    witness: " << c.witness.dump() << "\n";
  }
  for (const auto& n : report.notices) os << "notice: " << n << "\n";
  for (const auto& [section, seconds] : report.timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", seconds);
    os << "time: " << section << " " << buf << "\n";
  }
  os << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
  return os.str();
}

}  // namespace quantcat

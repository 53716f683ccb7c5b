#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace quantcat {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict v) noexcept;

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::pass;
  bool sampled = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string note;
  Json witness;  // null unless the check failed
};

/// Outcome of a suite run: one entry per law plus notices about caps.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<std::string> notices;
  /// Wall-clock seconds per section; shown in the table, never serialized to JSON.
  std::vector<std::pair<std::string, double>> timings;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
  void notice(std::string text) { notices.push_back(std::move(text)); }
  /// Appends every check and notice of `other`, prefixing check names.
  void append(const Report& other, const std::string& prefix = {});
};

/// Accumulates the cases of one law, keeping the first counterexample.
class Check {
 public:
  explicit Check(std::string name, bool sampled = false);

  /// Records a case; `witness` is only invoked for the first failure.
  bool record(bool ok, const std::function<Json()>& witness);
  void set_sampled(bool sampled = true) { result_.sampled = sampled; }
  void note(std::string text) { result_.note = std::move(text); }
  void skip(std::string reason);
  std::uint64_t cases() const { return result_.cases; }
  std::uint64_t failures() const { return result_.failures; }
  CheckResult finish() const;

 private:
  CheckResult result_;
  bool skipped_ = false;
};

/// Stable field order; byte-identical for equal reports.
std::string to_json(const Report& report);
Json to_json_value(const Report& report);
/// Fixed-width human-readable table.
std::string to_table(const Report& report);

}  // namespace quantcat

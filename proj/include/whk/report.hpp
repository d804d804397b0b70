#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whk/errors.hpp"
#include "whk/linalg.hpp"
#include "whk/parallel.hpp"

namespace whk {

/// Basis tuple at which an identity failed, with the residual (lhs - rhs).
struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
};

struct CheckResult {
  std::string id;
  std::string anchor;  ///< which axiom or statement the check encodes
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;
  double millis = 0.0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add(std::string id, std::string anchor, bool pass, std::string detail = {});
  /// Appends all checks of other, prefixing ids with "prefix.".
  void merge(const std::string& prefix, const Report& other);

  bool passed() const;
  const CheckResult* find(const std::string& id) const;
  bool passed(const std::string& id) const;
  std::vector<std::string> failures() const;
  std::string summary() const;

  /// Informational key/value findings that do not affect passed().
  void note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }
  std::optional<std::string> note_value(const std::string& key) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

/// Raised when a structure fails validation; carries the failing report.
class AxiomFailure : public Error {
 public:
  explicit AxiomFailure(Report report)
      : Error("axiom failure: " + report.summary()), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

using ResidualFn = std::function<Vec(const std::vector<std::size_t>&)>;

/// Evaluates residual at every tuple of the index box and records the first
/// (lowest flat index) tuple with a nonzero residual. An empty box passes
/// vacuously.
CheckResult check_identity(std::string id, std::string anchor,
                           const std::vector<std::size_t>& extents, const ResidualFn& residual,
                           Exec exec = Exec::parallel);

}  // namespace whk

#include "whk/report.hpp"

#include <chrono>

#include "whk/tensor.hpp"

namespace whk {

void Report::add(std::string id, std::string anchor, bool pass, std::string detail) {
  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.pass = pass;
  r.detail = std::move(detail);
  checks_.push_back(std::move(r));
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (auto c : other.checks_) {
    c.id = prefix.empty() ? c.id : prefix + "." + c.id;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.notes_) notes_.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
}

std::optional<std::string> Report::note_value(const std::string& key) const {
  for (const auto& [k, v] : notes_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool Report::passed(const std::string& id) const {
  const CheckResult* c = find(id);
  return c != nullptr && c->pass;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (!c.pass) out.push_back(c.id);
  }
  return out;
}

std::string Report::summary() const {
  std::string s = subject_ + ":";
  for (const auto& c : checks_) {
    s += "\n  [" + std::string(c.pass ? "pass" : "FAIL") + "] " + c.id;
    if (!c.anchor.empty()) s += " (" + c.anchor + ")";
    if (c.witness) {
      s += " at (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.witness->indices[i]);
      }
      s += ")";
    }
    if (!c.detail.empty()) s += " " + c.detail;
  }
  for (const auto& [k, v] : notes_) s += "\n  note " + k + " = " + v;
  return s;
}

CheckResult check_identity(std::string id, std::string anchor,
                           const std::vector<std::size_t>& extents, const ResidualFn& residual,
                           Exec exec) {
  auto start = std::chrono::steady_clock::now();
  std::size_t total = 1;
  for (auto e : extents) total *= e;

  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  auto first = find_first(total, exec, [&](std::size_t i) {
    return !is_zero(residual(unflatten(i, extents)));
  });
  if (first) {
    auto idx = unflatten(*first, extents);
    r.pass = false;
    r.witness = Witness{idx, residual(idx)};
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

}  // namespace whk

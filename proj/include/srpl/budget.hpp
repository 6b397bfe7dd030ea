#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace srpl {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wall-clock budget shared by long scans. A default-constructed deadline never expires.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.end_ = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const { return end_ && clock::now() >= *end_; }

  void check(const char* what) const {
    if (expired()) throw BudgetExceeded(std::string("time budget exceeded during ") + what);
  }

 private:
  std::optional<clock::time_point> end_;
};

}  // namespace srpl

#pragma once

#include <chrono>
#include <optional>

namespace treewqo {

// Searches have three outcomes: a witness, a proof of absence, or an aborted
// run because the wall-clock deadline passed.  Callers must treat `deadline`
// as "unknown", never as "absent".
enum class SearchStatus { found, absent, deadline };

class Deadline {
 public:
  Deadline() = default;

  static Deadline never() { return Deadline(); }

  static Deadline after_seconds(double s) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s));
    return d;
  }

  bool expired() const {
    return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace treewqo

#ifndef OMEGATT_CHECK_HPP
#define OMEGATT_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

namespace omegatt {

// Outcome of a judgement check. On failure, `trace` holds the stack of
// sub-judgements from the outermost frame down to the one that failed.
struct Check {
  bool ok = true;
  std::vector<std::string> trace;

  explicit operator bool() const { return ok; }

  static Check pass() { return {}; }

  static Check fail(std::string why) {
    Check c;
    c.ok = false;
    c.trace.push_back(std::move(why));
    return c;
  }

  // Wraps a failing result in an enclosing judgement frame.
  Check under(std::string frame) && {
    if (!ok) trace.insert(trace.begin(), std::move(frame));
    return std::move(*this);
  }

  std::string message() const {
    if (ok) return "ok";
    std::string out;
    for (size_t i = 0; i < trace.size(); ++i) {
      if (i) out += "\n";
      out += std::string(2 * i, ' ') + trace[i];
    }
    return out;
  }
};

}  // namespace omegatt

#endif

#pragma once

#include <string>

namespace nestcond {

// Condition morphisms come in two flavours; the mode decides which side the
// shifters act on and how composites chain, so it is part of the data.
enum class Mode { forward, backward };

inline const char* mode_name(Mode m) {
  return m == Mode::forward ? "forward" : "backward";
}

// checker verdict with a human-readable reason pinpointing the first failure
struct Validity {
  bool ok = true;
  std::string message;

  static Validity good() { return {true, ""}; }
  static Validity bad(std::string why) { return {false, std::move(why)}; }
};

// soft cap on morphism-search work; exceeding it raises ResourceError
struct SearchBudget {
  long long max_steps = 1'000'000;
};

}  // namespace nestcond

// decision.hpp -- the three-valued outcome shared by every decider

#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

// Yes answers always carry a certificate that re-checks exactly; No answers
// are only returned by complete arguments; Unknown records the exhausted
// bound. Bounded semi-deciders never answer No.
enum class Verdict { Yes, No, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

// A configured resource bound would be exceeded. This is a refusal, not a
// wrong answer, and maps to its own process exit status in the CLI.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitkit

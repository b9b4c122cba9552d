#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nefcone {

/// A violated precondition of one of the inference rules. `rule()` names the
/// rule the precondition comes from so the CLI can report it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::string rule)
      : std::invalid_argument(what), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

class GenusMismatch : public PreconditionError {
 public:
  GenusMismatch(std::int64_t lhs, std::int64_t rhs)
      : PreconditionError("genus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs),
                          "classes pair only on the same surface") {}
};

}  // namespace nefcone

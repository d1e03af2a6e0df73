#pragma once

#include <stdexcept>
#include <string>

namespace fanaut {

// Base for every typed failure. name() is the stable identifier printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define FANAUT_ERROR(Type)                                                  \
  class Type : public Error {                                               \
   public:                                                                  \
    explicit Type(const std::string& message) : Error(#Type, message) {}   \
  };

FANAUT_ERROR(ParseError)
FANAUT_ERROR(InvalidData)
FANAUT_ERROR(PreconditionFailed)
FANAUT_ERROR(NotStrictlyConvex)
FANAUT_ERROR(Unbounded)
FANAUT_ERROR(BoundTooSmall)
FANAUT_ERROR(NotMovable)
FANAUT_ERROR(DecompositionFails)
FANAUT_ERROR(FiberNotComplete)
FANAUT_ERROR(UnboundedSearch)

#undef FANAUT_ERROR

}  // namespace fanaut

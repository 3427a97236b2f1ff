#ifndef FIFWAVE_ERRORS_HPP
#define FIFWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fif {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments or preconditions violated by the caller.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Requested computation exceeds a memory/enumeration budget.
class ResourceError : public Error {
  public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Result would fall outside a declared accuracy guard (e.g. scale too
// small for the signal grid); the value is not silently returned.
class AccuracyError : public Error {
  public:
    explicit AccuracyError(const std::string& msg) : Error(msg) {}
};

}  // namespace fif

#endif

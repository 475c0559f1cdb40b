#pragma once

#include <stdexcept>
#include <string>

namespace lincor {

enum class ErrorKind {
    Domain,     // valid request, no valid answer (e.g. no appropriate corrector)
    Usage,      // caller broke a precondition
    Io,         // file system / stream failure
    Integrity,  // data file inconsistent with its own invariants
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace lincor

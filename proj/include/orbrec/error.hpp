#pragma once

#include <stdexcept>
#include <string>

namespace orbrec {

// Raised when an input is outside a routine's domain (bad germ, malformed
// model, inconsistent orders).  The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbrec

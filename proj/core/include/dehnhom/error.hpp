#pragma once

#include <stdexcept>
#include <string>

namespace dehnhom {

// Raised for violated preconditions and malformed input. The CLI maps it to
// exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dehnhom

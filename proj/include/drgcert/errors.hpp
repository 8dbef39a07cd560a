#pragma once

#include <stdexcept>
#include <string>

namespace drg {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drg

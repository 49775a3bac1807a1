#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcog {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse failure in a certificate or graph file. `position` is a 0-based byte
/// offset for certificates and a 1-based line number for graph files; the
/// message spells out which.
struct ParseError : Error {
  ParseError(std::size_t position, const std::string& message)
      : Error(message), position(position) {}
  std::size_t position;
};

}  // namespace pcog

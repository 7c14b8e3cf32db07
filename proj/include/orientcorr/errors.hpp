#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orientcorr {

/// Malformed textual input (graph6 records, edge lists). Carries the byte
/// offset (graph6) or line number (edge list) where decoding failed.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Exhaustive enumeration refused because 2^m exceeds the configured cap.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(std::size_t edges, unsigned cap)
      : std::runtime_error("graph has " + std::to_string(edges) +
                           " edges, above the enumeration cap of " +
                           std::to_string(cap) +
                           " bits; raise --cap or use the mc subcommand"),
        edges_(edges), cap_(cap) {}

  std::size_t edges() const noexcept { return edges_; }
  unsigned cap() const noexcept { return cap_; }

private:
  std::size_t edges_;
  unsigned cap_;
};

} // namespace orientcorr

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekr {

// Malformed or out-of-contract input (non-forest edge sets, bad labels, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size guard (enumeration cap, inclusion-exclusion cap, graph
// build cap) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::uint64_t limit, std::uint64_t requested)
      : std::runtime_error(cap + " exceeded: requested " + std::to_string(requested) +
                           ", limit " + std::to_string(limit)),
        cap_(std::move(cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const noexcept { return cap_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

}  // namespace ekr

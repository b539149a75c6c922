#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmsym {

/// Malformed or out-of-contract input (bad vertex, empty facet list, mixed ideal, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive loop would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap, std::size_t requested)
      : std::runtime_error(cap_name + " cap exceeded: " + std::to_string(requested) +
                           " > " + std::to_string(cap)),
        cap_name_(std::move(cap_name)),
        cap_(cap),
        requested_(requested) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
  std::size_t requested_;
};

/// Two decision routes that must agree did not. Always a bug, never a verdict.
class RouteDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmsym

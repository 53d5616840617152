#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uenergy {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// n outside the range a graph family accepts
class invalid_order : public error {
public:
  using error::error;
};

class invalid_parameters : public error {
public:
  using error::error;
};

// input outside the mathematical domain of an operation (non-forest to
// matching_count, zero polynomial to root isolation, even t, ...)
class domain_error : public error {
public:
  using error::error;
};

class unsupported_size : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// An iterative method stopped before meeting its tolerance. The best
// estimate reached so far is carried along.
class convergence_error : public error {
public:
  convergence_error(const std::string& what, double estimate, double achieved_error)
      : error(what), estimate_(estimate), achieved_error_(achieved_error) {}

  double estimate() const noexcept { return estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

private:
  double estimate_;
  double achieved_error_;
};

} // namespace uenergy

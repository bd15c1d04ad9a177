#ifndef FINORB_ERRORS_HPP
#define FINORB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finorb {

// Error taxonomy mirrors the CLI exit codes: input problems exit 2,
// resource/budget exhaustion exits 3, sound negative verdicts exit 1.

class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class parse_error : public input_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// p divides a coefficient denominator; a different prime must be chosen.
class prime_divides_denominator : public input_error {
public:
  using input_error::input_error;
};

class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class budget_exceeded : public resource_error {
public:
  using resource_error::resource_error;
};

// Negative but sound outcomes: the Nullstellensatz hypothesis fails, no
// prime certifies the map, or a map in a system fails certification.

class common_zero_exists : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class no_admissible_prime : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class map_not_certified : public std::runtime_error {
public:
  map_not_certified(std::size_t map_index, const std::string& what)
      : std::runtime_error(what), map_index_(map_index) {}
  std::size_t map_index() const noexcept { return map_index_; }

private:
  std::size_t map_index_;
};

}  // namespace finorb

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rackqm {

/// Base of everything the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad text, wrong shapes, unmet preconditions.
class input_error : public error {
 public:
  using error::error;
};

class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computed check failed: the input is well formed but violates a
/// mathematical invariant.
class invariant_violation : public error {
 public:
  using error::error;
};

enum class rack_axiom { self_distributivity, right_invertibility, idempotence };

inline const char* axiom_name(rack_axiom a) {
  switch (a) {
    case rack_axiom::self_distributivity: return "rack identity";
    case rack_axiom::right_invertibility: return "right invertibility";
    case rack_axiom::idempotence: return "idempotence";
  }
  return "?";
}

/// First violated rack axiom with the element indices that witness it:
/// (i, j, k) for the rack identity, (i, j, y) for a column y with
/// i◁y = j◁y, and (i) for i◁i != i.
class axiom_violation : public invariant_violation {
 public:
  axiom_violation(rack_axiom axiom, std::vector<std::size_t> witness, const std::string& detail)
      : invariant_violation(std::string(axiom_name(axiom)) + " violated: " + detail),
        axiom_(axiom),
        witness_(std::move(witness)) {}

  rack_axiom axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  rack_axiom axiom_;
  std::vector<std::size_t> witness_;
};

}  // namespace rackqm

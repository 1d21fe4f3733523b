#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// Shared primitives: exact integer arithmetic that refuses to overflow,
// the error taxonomy, a portable deterministic RNG, and search budgets.

namespace cck {

using Int = std::int64_t;
using Idx = std::size_t;

// ---------------------------------------------------------------- errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration / input problems (CLI exit code 3).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Search-budget exhaustion (CLI exit code 4).
class BudgetError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("integer overflow in exact arithmetic") {}
};

class NotReducedError : public Error {
 public:
  explicit NotReducedError(std::size_t pos)
      : Error("word is not reduced: failure at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;  // 1-based position of the first non-positive beta
};

class ExplosionGuardError : public BudgetError {
 public:
  explicit ExplosionGuardError(std::size_t cap)
      : BudgetError("reduced-word closure exceeded node cap " + std::to_string(cap)) {}
};

class NoSuchWordError : public Error {
 public:
  explicit NoSuchWordError(const std::string& label)
      : Error("no reduced word of this element ends in " + label) {}
};

class NotDominantError : public Error {
 public:
  NotDominantError() : Error("weight is not dominant") {}
};

class NonIntegralCorootError : public Error {
 public:
  NonIntegralCorootError() : Error("coroot pairing is not integral; malformed Cartan datum") {}
};

class WrongModeError : public Error {
 public:
  WrongModeError() : Error("host word is not a longest-element word of a finite-type datum") {}
};

class NotInBInftyError : public Error {
 public:
  NotInBInftyError() : Error("element is not in the highest-weight closure") {}
};

class CapExceededError : public BudgetError {
 public:
  explicit CapExceededError(std::size_t cap)
      : BudgetError("enumeration exceeded size cap " + std::to_string(cap)) {}
};

class StarNotAvailableError : public Error {
 public:
  explicit StarNotAvailableError(const std::string& label)
      : Error("star operator unavailable: no reduced word ends in " + label) {}
};

class TransportConflictError : public Error {
 public:
  explicit TransportConflictError(const std::string& detail)
      : Error("transport conflict: " + detail) {}
};

class NotSameElementError : public Error {
 public:
  NotSameElementError() : Error("words do not represent the same Weyl group element") {}
};

class PathSearchExhaustedError : public BudgetError {
 public:
  explicit PathSearchExhaustedError(std::size_t budget)
      : BudgetError("path search exhausted node budget " + std::to_string(budget)) {}
};

class BudgetExhaustedError : public BudgetError {
 public:
  explicit BudgetExhaustedError(std::size_t budget)
      : BudgetError("step budget " + std::to_string(budget) + " exhausted") {}
};

// ------------------------------------------------------ checked arithmetic

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// ------------------------------------------------------------------- rng

// SplitMix64. Hand-rolled so that sampled suites are byte-identical across
// platforms; <random> distributions are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi], inclusive.
  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(next() % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

// --------------------------------------------------------------- budgets

struct SearchBudget {
  std::size_t word_closure_cap = 1'000'000;  // reduced-word BFS node cap
  std::size_t path_nodes = 100'000;          // transport path search
  std::size_t grow_steps = 1'000'000;        // isomorphism growth
};

}  // namespace cck

#pragma once

#include <stdexcept>
#include <string>

namespace bott {

// Input data outside what the model supports (mixed fixed sets in the
// wrong dimension, degenerate blow-ups, ...).
struct UnsupportedDataError : std::runtime_error {
  explicit UnsupportedDataError(const std::string& what)
      : std::runtime_error(what) {}
};

// Fixed-point data that no circle action can realize.
struct RealizabilityError : std::runtime_error {
  explicit RealizabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A surgery was attempted whose hypotheses fail.
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& what)
      : std::runtime_error(what) {}
};

// Polynomial evaluation hit a monomial with no assigned value.
struct UnknownValueError : std::runtime_error {
  explicit UnknownValueError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bott

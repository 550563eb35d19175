#pragma once

#include <stdexcept>
#include <string>

namespace tesim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input bytes (bad JSON, bad line syntax). Message carries the
// byte offset or line number where available.
struct ParseError : Error {
  using Error::Error;
};

// A structurally sound record that violates a field invariant. Message
// names every offending field.
struct ValidationError : Error {
  using Error::Error;
};

struct OntologyError : Error {
  using Error::Error;
};

struct ExtractionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct EvalError : Error {
  using Error::Error;
};

}  // namespace tesim

#pragma once

#include <stdexcept>
#include <string>

namespace liecurrent {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_arith
struct InsufficientOrder : Error {
  using Error::Error;
};
struct NonUnitConstantTerm : Error {
  using Error::Error;
};

// lie_core
struct UnsupportedType : Error {
  using Error::Error;
};
struct BadLeg : Error {
  using Error::Error;
};
struct ExtensionFailure : Error {
  using Error::Error;
};

// trace_ext
struct DepthExceeded : Error {
  using Error::Error;
};
struct ObstructionNonzero : Error {
  using Error::Error;
};

// loop_double
struct DegenerateParameters : Error {
  using Error::Error;
};
struct WindowTooSmall : Error {
  using Error::Error;
};
struct BadDegree : Error {
  using Error::Error;
};
struct BadConstantTerm : Error {
  using Error::Error;
};
struct MismatchWitness : Error {
  using Error::Error;
};

// rmatrix
struct SingularGram : Error {
  using Error::Error;
};

// orders_bd
struct RankTooLarge : Error {
  using Error::Error;
};

}  // namespace liecurrent

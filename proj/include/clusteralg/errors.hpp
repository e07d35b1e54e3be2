#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clusteralg {

/// Base of every error raised by the engine.
class ClusterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's contract
/// (rank mismatch, bad index, malformed text, violated precondition).
class InvalidArgument : public ClusterError {
 public:
  using ClusterError::ClusterError;
};

class RankMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IndexOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class PreconditionViolated : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotSkewSymmetrizable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroPolynomial : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnknownVariable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Fixed-width exponent or matrix arithmetic left its range.
class OverflowError : public ClusterError {
 public:
  using ClusterError::ClusterError;
};

/// The divisor does not divide the dividend in the Laurent ring.
class InexactDivision : public ClusterError {
 public:
  using ClusterError::ClusterError;
};

/// A query that needs the whole exchange graph got a truncated one.
class TruncatedGraph : public ClusterError {
 public:
  using ClusterError::ClusterError;
};

/// An internal assertion backed by a theorem failed. Never expected on
/// valid input; always indicates a bug (or a counterexample).
class TheoremViolation : public ClusterError {
 public:
  using ClusterError::ClusterError;
};

class MalformedExpansion : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class NonUnimodular : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class SingularBlock : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class NotFound : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class MultipleFound : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

namespace checked {

template <typename T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <typename T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <typename T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <typename T>
T neg(T a) {
  return sub(T{0}, a);
}

template <typename To, typename From>
To narrow(From v) {
  To r = static_cast<To>(v);
  if (static_cast<From>(r) != v || ((r < To{}) != (v < From{})))
    throw OverflowError("integer does not fit target width");
  return r;
}

}  // namespace checked

}  // namespace clusteralg

#ifndef MFDECOMP_ERRORS_HPP
#define MFDECOMP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: group specs, polynomial text, override files.
class ParseError : public Error {
  public:
    using Error::Error;
};

class InvalidGroup : public Error {
  public:
    using Error::Error;
};

/// The operation is not defined for this congruence group.
class UnsupportedGroup : public Error {
  public:
    using Error::Error;
};

/// Weight-1 cusp form dimension is neither forced to vanish nor tabulated.
class Weight1Unavailable : public Error {
  public:
    using Error::Error;
};

/// A decomposition sequence has a negative entry or violates one of its
/// defining identities.
class DecompositionInvalid : public Error {
  public:
    using Error::Error;
};

class NegativeMultiplicity : public Error {
  public:
    explicit NegativeMultiplicity(int shift)
        : Error("negative multiplicity at shift " + std::to_string(shift)), shift_(shift) {}
    int shift() const { return shift_; }

  private:
    int shift_;
};

class ResidualMismatch : public Error {
  public:
    explicit ResidualMismatch(int degree)
        : Error("convolution residual nonzero in degree " + std::to_string(degree)), degree_(degree) {}
    int degree() const { return degree_; }

  private:
    int degree_;
};

class InhomogeneousInput : public Error {
  public:
    using Error::Error;
};

class NotPrime : public Error {
  public:
    using Error::Error;
};

class OrderTooSmall : public Error {
  public:
    using Error::Error;
};

/// q-expansion coefficients left Z_(2)[zeta]; indicates a bug, never data.
class IntegralityFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace mfd

#endif

#ifndef HURWITZ_ERRORS_HPP
#define HURWITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hurwitz {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (lattice files, rationals, decimals).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A basis that does not span, a non-positive Gram matrix, and similar.
struct DegenerateLatticeError : Error {
  explicit DegenerateLatticeError(const std::string& what) : Error(what) {}
};

// An enumeration or search exceeded its configured budget.
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Arguments outside the supported domain of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// The averaging construction was asked to run with a base lattice whose
// shortest vector falls inside the support of the test function.
struct SupportError : Error {
  explicit SupportError(const std::string& what) : Error(what) {}
};

// A symmetry spot-check failed (e.g. a convex body indicator that is not
// invariant under the unit group).
struct InvarianceError : Error {
  explicit InvarianceError(const std::string& what) : Error(what) {}
};

}  // namespace hurwitz

#endif  // HURWITZ_ERRORS_HPP

// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_ERRORS_HPP
#define MIRRORLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirrorlat {

// Requested (family, rank) outside the supported catalogue.
struct UnsupportedTypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation point too close to (or on) a reflection torus or the boundary
// divisor; numeric results there are meaningless.
struct SingularPointError : std::domain_error {
  using std::domain_error::domain_error;
};

// Weight point outside the domain where a requested specialization (e.g. a
// real square root in the Hermitian form) is defined.
struct SpecializationDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A Hermitian form too close to singular for the requested dual-form
// computation.
struct SingularFormError : std::domain_error {
  using std::domain_error::domain_error;
};

// A scalar argument lies outside the open interval a formula requires
// (e.g. a hypergeometric weight leaving (0, 1)).
struct DomainViolationError : std::domain_error {
  using std::domain_error::domain_error;
};

// An internal cross-check failed: two routes to the same quantity disagree.
// This always indicates a bug or a violated mathematical assumption, never
// bad user input.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mirrorlat

#endif  // MIRRORLAT_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace vergne {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error {
    using Error::Error;
};

// A linear operator produced a term outside the declared codomain; always a
// grading bookkeeping bug on the caller's side.
struct ImageOutsideCodomain : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// Structure constants that do not define a Lie algebra. Carries the first
/// failing triple (i, j, k), or the alternation index in `i` with j = k = 0,
/// or all zeros when only the d∘d check failed.
struct JacobiViolation : Error {
    JacobiViolation(const std::string& what, int i, int j, int k)
        : Error(what), i(i), j(j), k(k) {}
    int i;
    int j;
    int k;
};

struct NotACocycle : Error {
    using Error::Error;
};

struct NotHomogeneousTopDegree : Error {
    using Error::Error;
};

struct MissingLeadingTerm : Error {
    using Error::Error;
};

}  // namespace vergne

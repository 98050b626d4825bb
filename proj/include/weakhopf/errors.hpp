#pragma once

#include <stdexcept>
#include <string>

namespace wha {

/// Base class for every error raised by the workbench.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatchError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct AntipodeNotInvertibleError : Error {
    using Error::Error;
};
struct NotCliffordError : Error {
    using Error::Error;
};
struct PathDependentHomsError : Error {
    using Error::Error;
};
struct NonHomomorphismEdgeError : Error {
    using Error::Error;
};
struct NonDivisorModulusError : Error {
    using Error::Error;
};
struct NotBiperfectError : Error {
    using Error::Error;
};
struct SkewPairNotCertifiedError : Error {
    using Error::Error;
};
struct QuasiMatchedFailedError : Error {
    using Error::Error;
};
struct MissingProvenanceError : Error {
    using Error::Error;
};
struct ModuleLawFailureError : Error {
    using Error::Error;
};
struct CrossedLawsFailureError : Error {
    using Error::Error;
};
struct GuardExceededError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct KindMismatchError : Error {
    using Error::Error;
};
struct UnknownCheckError : Error {
    using Error::Error;
};

}  // namespace wha

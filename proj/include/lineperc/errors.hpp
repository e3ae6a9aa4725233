#ifndef LINEPERC_ERRORS_HPP
#define LINEPERC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lineperc {

// Base class for all input/precondition errors raised by the library.
// Internal invariant violations (bugs) use VerificationError instead, so
// callers can map them to different exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrimePower : Error {
    explicit NotPrimePower(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct IdenticalArguments : Error {
    explicit IdenticalArguments(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& msg) : Error(msg) {}
};

struct BadArity : Error {
    explicit BadArity(const std::string& msg) : Error(msg) {}
};

struct NoCoordinates : Error {
    explicit NoCoordinates(const std::string& msg) : Error(msg) {}
};

struct OddOrder : Error {
    explicit OddOrder(const std::string& msg) : Error(msg) {}
};

struct TooMany : Error {
    explicit TooMany(const std::string& msg) : Error(msg) {}
};

struct PreconditionUnmet : Error {
    explicit PreconditionUnmet(const std::string& msg) : Error(msg) {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& msg) : Error(msg) {}
};

struct NotAPermutation : Error {
    explicit NotAPermutation(const std::string& msg) : Error(msg) {}
};

// A construction or search produced an object that fails its own
// verification. This signals a bug, not bad input.
struct VerificationError : std::logic_error {
    explicit VerificationError(const std::string& msg) : std::logic_error(msg) {}
};

struct ConstructionFailed : VerificationError {
    explicit ConstructionFailed(const std::string& msg) : VerificationError(msg) {}
};

} // namespace lineperc

#endif

#ifndef WHQ_ERRORS_HPP
#define WHQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whq {

// Base class for all engine errors. Mathematical *verdicts* (an identity
// failing, a synthesis status) are never exceptions; exceptions signal
// misuse of an operation or malformed input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct MixedFields : Error {
    explicit MixedFields(const std::string& msg) : Error("mixed fields: " + msg) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& msg) : Error("arity mismatch: " + msg) {}
};

struct PositionOutOfRange : Error {
    explicit PositionOutOfRange(const std::string& msg) : Error("position out of range: " + msg) {}
};

struct NotIdempotent : Error {
    NotIdempotent() : Error("morphism is not idempotent") {}
};

struct Singular : Error {
    int rank_deficit;
    explicit Singular(int deficit)
        : Error("matrix is singular (rank deficit " + std::to_string(deficit) + ")"),
          rank_deficit(deficit) {}
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& why) : Error("not a group: " + why) {}
};

struct NotAGroupoid : Error {
    explicit NotAGroupoid(const std::string& why) : Error("not a groupoid: " + why) {}
};

struct NotIPLoop : Error {
    explicit NotIPLoop(const std::string& why) : Error("not an IP loop: " + why) {}
};

struct MissingAntipode : Error {
    MissingAntipode() : Error("structure has no antipode") {}
};

struct ModuleLawFailure : Error {
    explicit ModuleLawFailure(const std::string& why) : Error("module law failure: " + why) {}
};

struct MonoidAxiomFailure : Error {
    explicit MonoidAxiomFailure(const std::string& why) : Error("monoid axiom failure: " + why) {}
};

struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& why) : Error("cross-check mismatch: " + why) {}
};

struct SyntaxError : Error {
    // 1-based byte offset of the unexpected input.
    std::size_t offset;
    std::string expected;
    SyntaxError(std::size_t off, const std::string& exp)
        : Error("syntax error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off), expected(exp) {}
};

struct IOError : Error {
    explicit IOError(const std::string& msg) : Error("io: " + msg) {}
};

} // namespace whq

#endif

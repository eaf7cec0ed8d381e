#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoasym {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset into the input.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

/// Real-arithmetic domain violation (log of non-positive, sqrt of negative,
/// division by zero). Carries the printed form of the offending subexpression.
struct DomainError : Error {
    DomainError(const std::string& what, std::string subexpr_)
        : Error(what + ": " + subexpr_), subexpr(std::move(subexpr_)) {}
    std::string subexpr;
};

/// Differentiation hit a node it has no rule for (e.g. ^ with a non-constant
/// exponent in a hand-built tree).
struct UnsupportedNode : Error {
    using Error::Error;
};

struct DegenerateVector : Error {
    using Error::Error;
};

/// r', r'', r''' fail to span a 3-plane (or r'' vanishes) at the requested s.
struct DegenerateFrame : Error {
    using Error::Error;
};

/// Third curvature requested where kappa2 ~ 0 but B2.r'''' does not vanish.
struct DegenerateTorsion : Error {
    using Error::Error;
};

/// The surface normal vanishes: the parametrization is singular there.
struct SingularPoint : Error {
    using Error::Error;
};

/// Structural violation of a curve/family contract (curve components using
/// t or q, t0 outside its box, curve failing validation, point outside the
/// parameter box).
struct SpecError : Error {
    using Error::Error;
};

/// Config file rejected. `field` is the dotted path of the offending entry.
struct ConfigError : Error {
    ConfigError(std::string field_, const std::string& reason)
        : Error("config error at " + field_ + ": " + reason), field(std::move(field_)) {}
    std::string field;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace isoasym

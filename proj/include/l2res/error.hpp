#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace l2res {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed monomial or ideal text. `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Two operands live over different variable tables.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

/// A configurable resource cap was exceeded. `cap()` names the flag that raises it.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::string cap)
        : Error(what + "; raise the limit with " + cap), cap_(std::move(cap)) {}

    const std::string& cap() const noexcept { return cap_; }

private:
    std::string cap_;
};

/// A support criterion was asked about a complex outside its hypotheses.
class CriterionInapplicable : public Error {
public:
    using Error::Error;
};

/// Caps on the exponential parts of the computations.
struct Limits {
    std::uint64_t max_faces = std::uint64_t{1} << 22;
    std::size_t max_taylor_vertices = 22;
    std::size_t max_enumeration_q = 7;
};

inline constexpr const char* kFaceCapFlag = "--max-faces (env L2RES_MAX_FACES)";
inline constexpr const char* kTaylorCapFlag = "--max-taylor (env L2RES_MAX_TAYLOR)";
inline constexpr const char* kEnumerationCapFlag = "--max-q (env L2RES_MAX_Q)";

}  // namespace l2res

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every zdinf module.
 *
 * Every failure mode that a caller may want to distinguish has its own type.
 * All of them derive from zdinf::Error, which itself is a std::runtime_error,
 * so a single catch site is enough for tools that only report.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace zdinf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ZDINF_ERROR(Name)                    \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

// scalars / lattices
ZDINF_ERROR(FieldMismatch);
ZDINF_ERROR(NotPrime);
ZDINF_ERROR(DimensionMismatch);
ZDINF_ERROR(NotFullRank);

// objects
ZDINF_ERROR(InconsistentTypes);
ZDINF_ERROR(ShapeMismatch);

// hom / ext
ZDINF_ERROR(ComposabilityError);
ZDINF_ERROR(InvalidMorphism);

// decomposition / identification
ZDINF_ERROR(DecompositionFailure);
ZDINF_ERROR(UnrecognizedShape);

// almost split sequences / quiver windows
ZDINF_ERROR(NotIndecomposable);
ZDINF_ERROR(WindowTooSmall);
ZDINF_ERROR(WitnessNotFound);

// singularity correspondence
ZDINF_ERROR(NotLatticeMorphism);
ZDINF_ERROR(MixedIndex);
ZDINF_ERROR(NotInRing);

#undef ZDINF_ERROR

/// Object-DSL parse failure; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

}  // namespace zdinf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewring {

using Elem = std::uint32_t;

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or ill-formed construction request (CLI exit 2).
struct ConfigError : Error {
    using Error::Error;
};

/// A mathematically invalid input to an otherwise well-formed operation
/// (zero polynomial to leading(), element outside an ideal, ...; CLI exit 1).
struct DomainError : Error {
    using Error::Error;
};

/// An exhaustive law check failed; carries the offending pair.
struct CounterexampleError : Error {
    std::string law;
    Elem a, b, lhs, rhs;
    CounterexampleError(std::string law_, Elem a_, Elem b_, Elem lhs_, Elem rhs_)
        : Error("law '" + law_ + "' fails at a=" + std::to_string(a_) +
                ", b=" + std::to_string(b_) + ": lhs=" + std::to_string(lhs_) +
                " rhs=" + std::to_string(rhs_)),
          law(std::move(law_)), a(a_), b(b_), lhs(lhs_), rhs(rhs_) {}
};

/// A map fails to stabilize a subset it was required to preserve.
struct StabilityViolation : Error {
    Elem element, image;
    StabilityViolation(Elem element_, Elem image_)
        : Error("stability violation: element " + std::to_string(element_) +
                " maps to " + std::to_string(image_) + " outside the target set"),
          element(element_), image(image_) {}
};

/// A normal-form computation would exceed the configured degree cap.
struct DegreeCapError : Error {
    using Error::Error;
};

}  // namespace skewring

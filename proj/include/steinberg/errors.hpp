#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowError : Error {
    using Error::Error;
};
struct NotACycle : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct BadLine : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};
struct NotASimplicialMap : Error {
    using Error::Error;
};
struct NotACover : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct ZeroGenerator : Error {
    using Error::Error;
};
struct CompositionMismatch : Error {
    using Error::Error;
};
struct SignConventionUnset : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace steinberg

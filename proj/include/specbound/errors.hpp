#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

// Common base so callers can catch everything the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- graph input ------------------------------------------------------------

struct MalformedGraph6 : Error {
    using Error::Error;
};

// sparse6 / digraph6 input, which we deliberately do not decode
struct UnsupportedFormat : Error {
    using Error::Error;
};

// vertex count exceeds the configured maximum
struct Overflow : Error {
    using Error::Error;
};

struct VertexOutOfRange : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

// -- numerics ---------------------------------------------------------------

struct TooLarge : Error {
    using Error::Error;
};

// QL sweep cap exceeded; must not happen on adjacency matrices and is
// treated as a solver bug, not an input error.
struct NoConverge : Error {
    using Error::Error;
};

// no positive or no negative eigenvalue, i.e. the graph has no edge
struct EmptyGraph : Error {
    using Error::Error;
};

struct NegativeP : Error {
    using Error::Error;
};

}  // namespace specbound

#pragma once

#include <stdexcept>

namespace twinedge {

// An input file could not be parsed, or is inconsistent with the graph it
// is bound to.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The graph has a connected component with exactly two vertices; twin edge
// colorings are undefined for such graphs.
struct NotNiceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex coloring handed to a constructor is not proper.
struct ImproperInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact computation would exceed the configured work limits.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation-specific precondition does not hold (wrong graph class,
// invalid vertex order, bad gadget parameters, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace twinedge

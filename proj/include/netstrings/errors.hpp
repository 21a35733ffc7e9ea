#pragma once

#include <stdexcept>
#include <string>

namespace netstrings {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, CSV, config files).
struct parse_error : error {
    using error::error;
};

// Structurally invalid graph data (self-loops, bad indices).
struct validation_error : error {
    using error::error;
};

// A checked integer operation would exceed the 64-bit counter range.
struct overflow_error : error {
    using error::error;
};

// Argument outside the supported range (e.g. string length above the ceiling).
struct range_error : error {
    using error::error;
};

// Invalid generator or CLI configuration.
struct config_error : error {
    using error::error;
};

// A random-graph construction could not be completed.
struct generation_error : error {
    using error::error;
};

// Least-squares fit cannot be performed (too few points, degenerate abscissa).
struct fit_error : error {
    using error::error;
};

// Input outside a function's mathematical domain (e.g. log of x <= 0).
struct domain_error : error {
    using error::error;
};

// Not enough samples for a statistical estimate.
struct insufficient_data_error : error {
    using error::error;
};

// Metric undefined on this graph (e.g. clustering of an edgeless graph).
struct degenerate_graph_error : error {
    using error::error;
};

// Filesystem trouble.
struct io_error : error {
    using error::error;
};

} // namespace netstrings

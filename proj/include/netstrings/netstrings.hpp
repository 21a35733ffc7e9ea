#pragma once

// Umbrella header: exact counting of non-degenerate strings (simple paths
// and cycles) in undirected graphs, generalized clustering coefficients,
// the Milgram condition and separation numbers, seeded graph generators,
// and the parameter-sweep / least-squares machinery built on top.

#include "netstrings/csv.hpp"
#include "netstrings/errors.hpp"
#include "netstrings/fit.hpp"
#include "netstrings/generators.hpp"
#include "netstrings/graph.hpp"
#include "netstrings/matrix.hpp"
#include "netstrings/metrics.hpp"
#include "netstrings/rng.hpp"
#include "netstrings/string_count.hpp"
#include "netstrings/svg.hpp"
#include "netstrings/sweep.hpp"

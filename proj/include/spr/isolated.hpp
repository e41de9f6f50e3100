#pragma once

#include "spr/layering.hpp"
#include "spr/oracle.hpp"

namespace spr {

/// Exact number of isolated shortest st-paths (paths with no neighbor in
/// SP(G,s,t)), by the per-layer dynamic program. OpenMP-parallel within
/// layers.
BigInt count_isolated(const Graph& g, const Layering& lay);
/// Serial reference; identical result.
BigInt count_isolated_serial(const Graph& g, const Layering& lay);

}  // namespace spr

#pragma once

#include "quadcross/diagram.hpp"

#include <random>
#include <vector>

namespace quadcross {

/// Planarity + connectivity probe for a pairing of the 8q ends of q order-4
/// crossings (dart d sits at crossing d/8, slot d%8, clockwise).
bool planar_connected_quad_pairing(const std::vector<int>& mate, int q);

/// Uniform-ish random connected all-order-4 diagram with q crossings, found
/// by rejection sampling of end pairings against the planarity and
/// connectivity filters. Heights are uniform random permutations.
/// Deterministic for a given generator state.
Diagram random_quad_diagram(int q, std::mt19937_64& rng);

/// Seeded corpus with q cycling through the given values.
std::vector<Diagram> random_quad_corpus(int count, const std::vector<int>& q_values,
                                        uint64_t seed);

} // namespace quadcross

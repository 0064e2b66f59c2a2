#pragma once

#include "quadcross/diagram.hpp"
#include "quadcross/laurent.hpp"
#include "quadcross/skein.hpp"

#include <vector>

namespace quadcross {

/// Exact Kauffman bracket state sum over all 2^c splittings of an
/// all-order-2 diagram. The crossingless unknot has bracket 1.
/// `jobs` shards the state range; the result is independent of it.
LaurentPoly kauffman_bracket(const Diagram& d, int jobs = 1);

/// Derive the six quadruple-crossing skein relations by resolving each
/// crossing type inside a disk and summing its 64 classical states.
/// Every coefficient comes out as a nonnegative-integer multiple of a
/// monomial; the derivation asserts this.
SkeinTable derive_skein_table();

/// Cached table (derived once, then shared).
const SkeinTable& skein_table();

/// Bracket of a diagram with order-4 (and order-2) crossings via the
/// quadruple state sum: up to 14 splittings per order-4 crossing weighted by
/// the skein coefficients. Agrees exactly with kauffman_bracket(resolve(d)).
LaurentPoly quad_bracket(const Diagram& d, const SkeinTable& table, int jobs = 1);

LevelAdjacencyReport verify_level_adjacency(const SkeinTable& table);

/// A state of the quadruple state sum: one splitting index per order-4
/// crossing (order-2 crossings: 0 = A split, 1 = B split).
struct State {
    std::vector<int> choices;
    int circles = 0;
};

struct ExtremeStates {
    State s_max;
    State s_min;
};

/// The high/low states that pin the extreme exponents of the quadruple state
/// sum: first-level (resp. bottom-level) splittings everywhere, ties broken
/// to maximize circle count, with the parallel second/fourth level rule for
/// types 1243 and 1342. Requires a connected all-order-4 diagram.
ExtremeStates extreme_states(const Diagram& d, const SkeinTable& table);

struct ExponentBounds {
    int upper; // >= max exponent of quad_bracket
    int lower; // <= min exponent of quad_bracket
};

/// Evaluate the closed-form exponent bounds from the crossing-type counts
/// and the extreme states. upper - lower <= 16q always.
ExponentBounds exponent_bounds(const Diagram& d, const SkeinTable& table);

/// (-A)^(-3w) * bracket: invariant under all Reidemeister moves.
/// Requires an all-order-2 connected diagram; `flip` chooses component
/// orientations as in Diagram::writhe.
LaurentPoly normalized_jones(const Diagram& d, const std::vector<bool>& flip = {}, int jobs = 1);

} // namespace quadcross

#pragma once

#include "quadcross/diagram.hpp"

#include <vector>

namespace quadcross {

/// Closure of the 2-strand braid with n half twists: the standard (2,n)
/// torus diagram. Alternating, reduced for n >= 2, all crossings positive.
Diagram twist_chain(int n);

/// Standard alternating 4-plat diagram of the 2-bridge knot/link with
/// continued-fraction twist regions cf = [a1, a2, ...]. Region i twists the
/// middle rows for even i and the top rows for odd i; both ends are capped.
Diagram two_bridge(const std::vector<int>& cf);

/// Pretzel diagram with vertical twist columns of the given sizes. Column
/// signs choose the twist handedness; all-same-sign pretzels come out
/// alternating.
Diagram pretzel(const std::vector<int>& columns);

/// Closure of a braid word on `strands` strands. Word letters are +-i for
/// generator sigma_i (1-based); positive letters put the upper strand on top.
Diagram braid_closure(int strands, const std::vector<int>& word);

/// Reassign crossing heights so the diagram alternates. Every planar shadow
/// admits exactly two alternating assignments (mirror images); the one chosen
/// puts the first passage of the first component on top. Throws if the
/// constraint propagation ever conflicts, which would indicate corrupted
/// rotation data.
Diagram make_alternating(const Diagram& d);

} // namespace quadcross

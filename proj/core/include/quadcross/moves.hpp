#pragma once

#include "quadcross/diagram.hpp"
#include "quadcross/laurent.hpp"

#include <string>
#include <vector>

namespace quadcross {

/// Replace an order-2 crossing by one order-4 crossing: one strand is kept
/// and the other folds back through the point twice more, with the two
/// U-turns absorbed next to the crossing. The resolved result reduces to the
/// original diagram by writhe-neutral Reidemeister moves, so the bracket is
/// unchanged exactly.
Diagram convert_crossing(const Diagram& d, int crossing);

/// A simple closed curve meeting the projection only at crossings, passing
/// through each along one of its two diagonals (so two strands exit on each
/// side). Passages are listed in traversal order; entry_corner is the corner
/// the curve enters through, and it leaves через corner entry_corner+2.
struct CoveringCircle {
    struct Passage {
        int crossing;
        int entry_corner;
    };
    std::vector<Passage> passages;
    int length() const { return static_cast<int>(passages.size()); }

    std::string to_json() const;
};

/// Check that the circle is well formed in d: distinct crossings, each
/// consecutive hop crosses a single face, and the chords drawn inside every
/// face can be realized without intersections.
bool covering_circle_valid(const Diagram& d, const CoveringCircle& c, std::string* why = nullptr);

/// Find an even-length crossing covering circle of a reduced, connected,
/// all-order-2 diagram. Fast path: circle an even-sided face. Otherwise a
/// bounded DFS over (crossing, diagonal) passages; existence is guaranteed
/// for reduced diagrams, so failure throws.
CoveringCircle find_even_covering_circle(const Diagram& d);

/// Fold along an even covering circle of length n: the n crossings it meets
/// become n-1 quadruple crossings (one crossing's two strands are stretched
/// around the circle, woven alternately, passing through all the others);
/// all other crossings survive unchanged. An ambient isotopy: resolving the
/// result yields a diagram with the same bracket span.
Diagram quad_fold(const Diagram& d, const CoveringCircle& circle);

/// Crossing-disjoint cover of all crossings by parts that each collapse to a
/// single quadruple crossing.
struct SetDecomposition {
    struct Part {
        int size;                   // 1..4
        std::vector<int> crossings; // the covered crossings
        int witness_face = -1;      // face index for face parts, -1 for chains
        std::string how;            // "singleton", "bigon", "k-gon face", "twist chain"
    };
    std::vector<Part> parts;
    int cost() const { return static_cast<int>(parts.size()); }

    std::string to_json() const;
};

/// Minimum-cost exact cover of a reduced alternating diagram's crossings by
/// 4-gon/3-gon/bigon faces, twist chains of length <= 4, and singletons.
/// The cost is an upper bound on q. Exhaustive backtracking with pruning
/// (cost can never beat ceil(c/4)).
SetDecomposition set_decompose(const Diagram& d);

/// All connected diagrams with exactly q order-4 crossings and no order-2
/// crossings, grouped by the normalized bracket of their resolution.
struct EnumerationClass {
    LaurentPoly jones;
    std::vector<Diagram> diagrams;
};
std::vector<EnumerationClass> enumerate_quad_diagrams(int q, int jobs = 1);

} // namespace quadcross

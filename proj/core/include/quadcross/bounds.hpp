#pragma once

#include "quadcross/diagram.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadcross {

/// ceil(c/6): every quadruple crossing resolves into six double crossings.
/// Valid when c is the true crossing number of the knot.
int lb_resolution(int crossing_number);

/// ceil(span/16): the bracket span of a nontrivial knot or non-splittable
/// link is at most 16q.
int lb_span(int span);

/// ceil(c/4): for alternating knots and links, span = 4c at a reduced
/// alternating diagram.
int lb_alternating(int crossing_number);

/// ceil((r+s-2)/4): torus knots have bracket span 4(r+s-2).
int lb_torus(int r, int s);

struct BoundsReport {
    struct Entry {
        int value;
        std::string rule;    // e.g. "lower/span16"
        std::string witness; // optional explanation
    };
    std::vector<Entry> lower;
    std::vector<Entry> upper;
    std::optional<int> best_lower;
    std::optional<int> best_upper;
    bool determined = false;
    std::optional<int> q_value;

    std::string to_json() const;
    std::string to_text() const;
};

struct BoundFlags {
    /// Torus parameters (r, s) supplied by the caller; never inferred.
    std::optional<std::pair<int, int>> torus;
    /// Override alternating detection (set false to suppress the span=4c rule
    /// on a diagram that happens to alternate but is not known reduced-minimal).
    std::optional<bool> alternating;
    int jobs = 1;
};

/// Evaluate every applicable lower and upper bound on q for this diagram:
/// bracket span (exact state sum), the alternating and resolution rules for
/// reduced alternating diagrams, the torus rule when flagged, and the
/// constructive upper bounds (face/chain decomposition for reduced
/// alternating diagrams, covering-circle fold plus direct conversion
/// otherwise). Sets `determined` when the best bounds meet.
BoundsReport combine(const Diagram& d, const BoundFlags& flags = {});

} // namespace quadcross

#pragma once

#include "quadcross/diagram.hpp"
#include "quadcross/laurent.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadcross {

enum class SplitKind { Parallel, U, Mixed };

/// A noncrossing perfect matching of the 8 boundary points of a quadruple
/// crossing (points numbered clockwise 0..7). Exactly 14 exist: 4 parallel,
/// 2 U, 8 mixed.
struct Splitting {
    std::array<uint8_t, 8> mate{}; // involution on 0..7
    SplitKind kind = SplitKind::Mixed;
    int index = -1; // position in all_splittings()

    /// The four arcs as (low endpoint, high endpoint), sorted.
    std::array<std::pair<int, int>, 4> arcs() const;
    std::string to_string() const; // e.g. "(0 1)(2 3)(4 5)(6 7)"

    bool operator==(const Splitting& rhs) const { return mate == rhs.mate; }
};

/// The 14 splittings in a fixed canonical (lexicographic) order.
const std::vector<Splitting>& all_splittings();

/// Index in all_splittings() of the matching given by an involution, or -1
/// if the matching is not noncrossing.
int splitting_index(const std::array<uint8_t, 8>& mate);

/// Two arcs are adjacent when they cobound a face of the disk, i.e. no third
/// arc separates them.
bool arcs_adjacent(const Splitting& s, int arc_a, int arc_b);

/// Replace two adjacent arcs by the unique other noncrossing reconnection of
/// their four endpoints. Throws PreconditionError for an invalid site.
/// An involution at a fixed site; changes a state's circle count by +-1.
Splitting split_move(const Splitting& s, int arc_a, int arc_b);

/// True if t is one split move away from s.
bool one_split_move_apart(const Splitting& s, const Splitting& t);

/// Per-type coefficient tables mapping each splitting to its coefficient
/// polynomial, as derived from the 64-state resolution of each crossing
/// type. Coefficients have positive integer entries; most are monomials, but
/// the two U splittings of every relation occur at two levels at once (or
/// doubled at one level), so the general shape is a two-term positive sum.
///
/// Levels number the exponents downward from the top of the relation: the
/// highest power of A is level 1 and each A^-2 step adds one level. A
/// splitting "sits at" every level where its coefficient has a term.
class SkeinTable {
public:
    const LaurentPoly& coeff(QuadType t, int splitting) const {
        return table_[static_cast<int>(t)][splitting];
    }
    void set(QuadType t, int splitting, LaurentPoly c) {
        table_[static_cast<int>(t)][splitting] = std::move(c);
    }

    int max_exponent(QuadType t) const; // over the whole relation
    int min_exponent(QuadType t) const;
    int level_count(QuadType t) const;
    int exponent_of_level(QuadType t, int level) const;
    bool at_level(QuadType t, int splitting, int level) const;
    std::vector<int> splittings_at_level(QuadType t, int level) const;
    /// Sum of the coefficients' integer entries at a level.
    int level_weight(QuadType t, int level) const;

    std::string to_json() const;

private:
    std::array<std::array<LaurentPoly, 14>, kNumQuadTypes> table_;
};

/// Result of checking that consecutive levels of each relation are linked by
/// single split moves. The parallel second/fourth level splits of types 1243
/// and 1342 are the two documented exceptions and are reported separately.
struct LevelAdjacencyReport {
    struct Gap {
        QuadType type;
        int splitting;
        int level;
        bool downward; // true: no level-(l-1) neighbour; false: no level-(l+1)
    };
    std::vector<Gap> violations; // gaps that are not documented exceptions
    std::vector<Gap> exceptions; // the allowed 1243/1342 parallel gaps
    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

} // namespace quadcross

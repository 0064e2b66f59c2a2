#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadcross {

/// Height permutation of a quadruple crossing, read clockwise starting at the
/// top strand. Exactly six patterns exist; mirroring pairs them
/// 1234<->1432, 1243<->1342, 1324<->1423.
enum class QuadType : int { q1234 = 0, q1243, q1324, q1342, q1423, q1432 };

constexpr int kNumQuadTypes = 6;

QuadType quad_type_from_label(const std::string& label);
const char* quad_type_label(QuadType t);
QuadType quad_type_mirror(QuadType t);
/// Strand heights (index = strand position, value = level, 1 = top) of the
/// canonical representative whose top strand sits at position 0.
std::array<int, 4> quad_type_heights(QuadType t);

/// One multi-crossing: `order` strands passing straight through a point.
/// The 2*order ends are listed in clockwise planar order; strand i occupies
/// ends i and i+order. heights[i] is strand i's level, 1 = top.
struct Crossing {
    int order = 2;
    std::vector<int> heights;
};

/// A face of the sphere embedding, as (crossing, corner) incidences in
/// boundary order. Corner k at a crossing lies between ends k and k+1.
struct Face {
    std::vector<std::pair<int, int>> corners;
    int size() const { return static_cast<int>(corners.size()); }
};

/// Face census plus the corner -> face lookup.
struct FaceData {
    std::vector<Face> faces;
    std::vector<int> face_of_dart; // face on the corner at slot(dart)
    int face_at_corner(int dart) const { return face_of_dart[dart]; }
};

class DiagramBuilder;

/// Connected multi-crossing planar diagram in rotation-system form.
///
/// Half-edges ("darts") are numbered consecutively: crossing c with order n
/// owns darts base(c) .. base(c)+2n-1, one per end in clockwise order. The
/// edge pairing is the fixed-point-free involution `mate`. Immutable after
/// validation; all queries are const and safe to run concurrently.
class Diagram {
public:
    /// The crossingless unknotted loop (bracket 1).
    static Diagram unknot();

    /// Parse a diagram code such as
    ///   "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"
    ///   "Q[1,1,2,3,4,4,3,2;1234]"
    ///   "unknot"
    /// X[a,b,c,d]: classical crossing with the under strand on ends (a,b),
    /// the over strand on ends (c,d), and clockwise rotation (a,c,b,d).
    /// Q[e1..e8;h1h2h3h4]: ends listed directly in clockwise order, strand
    /// (e_i, e_{i+4}) at level h_i (1 = top). Each edge label must appear
    /// exactly twice. Throws ParseError / ValidationError / DisconnectedError.
    static Diagram parse(const std::string& code);

    /// Canonical textual code; parse(to_code()) reproduces the diagram.
    std::string to_code() const;

    /// Crossings, edge pairing and face census as a JSON document.
    std::string to_json() const;

    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int num_order2() const { return num_order2_; }
    int num_order4() const { return num_order4_; }
    int num_darts() const { return static_cast<int>(crossing_of_.size()); }
    int num_edges() const { return num_darts() / 2; }
    bool is_unknot_loop() const { return crossings_.empty(); }

    const Crossing& crossing(int c) const { return crossings_[c]; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    int dart(int c, int slot) const { return base_[c] + slot; }
    int crossing_of(int dart) const { return crossing_of_[dart]; }
    int slot_of(int dart) const { return dart - base_[crossing_of_[dart]]; }
    int mate(int dart) const { return mate_[dart]; }
    /// Dart one slot clockwise at the same crossing.
    int rotate(int dart, int steps = 1) const;
    /// Where a strand entering at `dart` leaves the crossing.
    int strand_exit(int dart) const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Faces of the rotation system. V - E + F = 2 holds (validated).
    FaceData faces() const;

    /// Link components as dart cycles; each entry lists the darts through
    /// which the traversal enters crossings, in order.
    std::vector<std::vector<int>> components() const;

    QuadType crossing_type(int c) const; // order-4 only

    /// Index of the order-2 over strand (0 or 1).
    int over_strand(int c) const;

    Diagram mirror() const;

    enum class ResolutionPattern { Canonical, Alternate };
    /// Replace every order-4 crossing by six order-2 crossings realizing the
    /// same strand stacking. The two patterns differ by braid-word choice and
    /// yield bracket-equal diagrams.
    Diagram resolve(ResolutionPattern pattern = ResolutionPattern::Canonical) const;

    /// Sum of crossing signs. `flip[i]` reverses component i's orientation.
    /// Requires an all-order-2 diagram.
    int writhe(const std::vector<bool>& flip = {}) const;

    bool all_order2() const { return num_order4_ == 0; }
    bool all_order4() const { return num_order2_ == 0; }

    /// Over/under alternates along every strand (order-2 diagrams).
    bool is_alternating() const;
    /// No nugatory crossing: no face meets a crossing at opposite corners.
    bool is_reduced() const;

    bool operator==(const Diagram& rhs) const;

private:
    friend class DiagramBuilder;

    void index_darts();
    void validate() const; // structure, planarity, connectivity

    std::vector<Crossing> crossings_;
    std::vector<int> base_;
    std::vector<int> crossing_of_;
    std::vector<int> mate_;
    int num_order2_ = 0;
    int num_order4_ = 0;
    std::string name_;
};

/// Incremental diagram assembly for constructions and rewrites. Crossings are
/// added first; each (crossing, slot) end must then be connected exactly once.
class DiagramBuilder {
public:
    int add_crossing(int order, std::vector<int> heights);
    int add_order2(int over_strand); // heights from the over strand index
    int add_quad(const std::array<int, 4>& heights);

    void connect(int c1, int s1, int c2, int s2);
    bool connected(int c, int s) const;

    /// Validate and produce the diagram. `allow_disconnected` is used by
    /// enumeration before the connectivity filter.
    Diagram build(bool allow_disconnected = false) const;

    /// Planar + connected probe without throwing.
    bool planar_connected() const;

private:
    struct End {
        int c, s;
    };
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> pair_; // per crossing, per slot: dart of mate or -1
    std::vector<int> slot_count_;

    Diagram assemble() const;
};

} // namespace quadcross

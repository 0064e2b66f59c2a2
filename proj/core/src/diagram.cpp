#include "quadcross/diagram.hpp"

#include "quadcross/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace quadcross {

namespace {

const std::array<std::array<int, 4>, kNumQuadTypes> kTypeHeights = {{
    {1, 2, 3, 4}, // q1234
    {1, 2, 4, 3}, // q1243
    {1, 3, 2, 4}, // q1324
    {1, 3, 4, 2}, // q1342
    {1, 4, 2, 3}, // q1423
    {1, 4, 3, 2}, // q1432
}};

const std::array<const char*, kNumQuadTypes> kTypeLabels = {
    "1234", "1243", "1324", "1342", "1423", "1432",
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

QuadType quad_type_from_label(const std::string& label) {
    for (int t = 0; t < kNumQuadTypes; ++t)
        if (label == kTypeLabels[t]) return static_cast<QuadType>(t);
    throw ParseError("unknown quadruple crossing type '" + label + "'");
}

const char* quad_type_label(QuadType t) { return kTypeLabels[static_cast<int>(t)]; }

QuadType quad_type_mirror(QuadType t) {
    switch (t) {
        case QuadType::q1234: return QuadType::q1432;
        case QuadType::q1432: return QuadType::q1234;
        case QuadType::q1243: return QuadType::q1342;
        case QuadType::q1342: return QuadType::q1243;
        case QuadType::q1324: return QuadType::q1423;
        case QuadType::q1423: return QuadType::q1324;
    }
    throw PreconditionError("bad QuadType");
}

std::array<int, 4> quad_type_heights(QuadType t) { return kTypeHeights[static_cast<int>(t)]; }

// ---------------------------------------------------------------------------
// Diagram basics

Diagram Diagram::unknot() {
    Diagram d;
    d.index_darts();
    return d;
}

void Diagram::index_darts() {
    base_.clear();
    crossing_of_.clear();
    num_order2_ = 0;
    num_order4_ = 0;
    int next = 0;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        base_.push_back(next);
        const int n = crossings_[c].order;
        (n == 2 ? num_order2_ : num_order4_)++;
        for (int s = 0; s < 2 * n; ++s) crossing_of_.push_back(c);
        next += 2 * n;
    }
}

int Diagram::rotate(int d, int steps) const {
    const int c = crossing_of_[d];
    const int n2 = 2 * crossings_[c].order;
    int s = (slot_of(d) + steps) % n2;
    if (s < 0) s += n2;
    return base_[c] + s;
}

int Diagram::strand_exit(int d) const {
    const int c = crossing_of_[d];
    return rotate(d, crossings_[c].order);
}

void Diagram::validate() const {
    for (const Crossing& x : crossings_) {
        if (x.order != 2 && x.order != 4)
            throw ValidationError("crossing order must be 2 or 4");
        if (static_cast<int>(x.heights.size()) != x.order)
            throw ValidationError("heights size does not match crossing order");
        std::vector<int> h = x.heights;
        std::sort(h.begin(), h.end());
        for (int i = 0; i < x.order; ++i)
            if (h[i] != i + 1) throw ValidationError("heights must be a permutation of 1..order");
    }
    const int n = num_darts();
    for (int d = 0; d < n; ++d) {
        if (mate_[d] < 0 || mate_[d] >= n || mate_[d] == d || mate_[mate_[d]] != d)
            throw ValidationError("edge pairing is not a fixed-point-free involution");
    }
    if (crossings_.empty()) return;

    UnionFind uf(n);
    int comps = n;
    for (int d = 0; d < n; ++d) {
        if (uf.unite(d, mate_[d])) --comps;
        if (uf.unite(d, rotate(d))) --comps;
    }
    // Count faces for the Euler check; each planar component contributes 2.
    int f = 0;
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++f;
        int h = d;
        do {
            seen[h] = 1;
            h = rotate(mate_[h]);
        } while (h != d);
    }
    const int v = num_crossings();
    const int e = num_edges();
    if (v - e + f != 2 * comps)
        throw ValidationError("non-planar rotation system (Euler check failed)");
}

FaceData Diagram::faces() const {
    FaceData out;
    const int n = num_darts();
    out.face_of_dart.assign(n, -1);
    if (crossings_.empty()) {
        out.faces.resize(2);
        return out;
    }
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        if (seen[d]) continue;
        Face face;
        int h = d;
        do {
            seen[h] = 1;
            const int m = mate_[h];
            face.corners.emplace_back(crossing_of_[m], slot_of(m));
            out.face_of_dart[m] = static_cast<int>(out.faces.size());
            h = rotate(m);
        } while (h != d);
        out.faces.push_back(std::move(face));
    }
    return out;
}

std::vector<std::vector<int>> Diagram::components() const {
    std::vector<std::vector<int>> comps;
    const int n = num_darts();
    std::vector<char> used(n, 0);
    for (int d = 0; d < n; ++d) {
        if (used[d]) continue;
        std::vector<int> entries;
        int h = d;
        do {
            used[h] = 1;
            entries.push_back(h);
            const int exit = strand_exit(h);
            used[exit] = 1;
            h = mate_[exit];
        } while (h != d);
        comps.push_back(std::move(entries));
    }
    return comps;
}

QuadType Diagram::crossing_type(int c) const {
    const Crossing& x = crossings_[c];
    if (x.order != 4) throw PreconditionError("crossing_type requires an order-4 crossing");
    int top = -1;
    for (int i = 0; i < 4; ++i)
        if (x.heights[i] == 1) top = i;
    std::array<int, 4> digits;
    for (int j = 0; j < 4; ++j) digits[j] = x.heights[(top + j) % 4];
    for (int t = 0; t < kNumQuadTypes; ++t)
        if (kTypeHeights[t] == digits) return static_cast<QuadType>(t);
    throw ValidationError("height pattern is not one of the six quadruple types");
}

int Diagram::over_strand(int c) const {
    const Crossing& x = crossings_[c];
    if (x.order != 2) throw PreconditionError("over_strand requires an order-2 crossing");
    return x.heights[0] == 1 ? 0 : 1;
}

Diagram Diagram::mirror() const {
    Diagram out;
    out.crossings_.reserve(crossings_.size());
    for (const Crossing& x : crossings_) {
        Crossing m;
        m.order = x.order;
        m.heights.resize(x.order);
        for (int j = 0; j < x.order; ++j) m.heights[j] = x.heights[(x.order - 1 - j) % x.order];
        out.crossings_.push_back(std::move(m));
    }
    out.index_darts();
    out.mate_.assign(mate_.size(), -1);
    auto flip = [&](int d) {
        const int c = crossing_of_[d];
        const int n2 = 2 * crossings_[c].order;
        return out.dart(c, (n2 - 1 - slot_of(d)) % n2);
    };
    for (int d = 0; d < num_darts(); ++d) out.mate_[flip(d)] = flip(mate_[d]);
    out.name_ = name_;
    return out;
}

int Diagram::writhe(const std::vector<bool>& flip) const {
    if (!all_order2()) throw PreconditionError("writhe requires an all-order-2 diagram");
    const auto comps = components();
    if (!flip.empty() && flip.size() != comps.size())
        throw PreconditionError("orientation flags do not match component count");
    std::vector<char> is_entry(num_darts(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        const bool reversed = i < flip.size() && flip[i];
        for (int entry : comps[i]) {
            if (!reversed)
                is_entry[entry] = 1;
            else
                is_entry[strand_exit(entry)] = 1;
        }
    }
    int w = 0;
    for (int c = 0; c < num_crossings(); ++c) {
        int exit_slot[2];
        for (int strand = 0; strand < 2; ++strand) {
            const int a = dart(c, strand), b = dart(c, strand + 2);
            exit_slot[strand] = is_entry[a] ? strand + 2 : strand;
            // exactly one of the strand's two ends is an entry
            if (is_entry[a] == is_entry[b])
                throw ValidationError("inconsistent orientation traversal");
        }
        const int over = over_strand(c);
        const int po = exit_slot[over], pu = exit_slot[1 - over];
        w += (((po - pu) % 4 + 4) % 4 == 1) ? 1 : -1;
    }
    return w;
}

bool Diagram::is_alternating() const {
    if (!all_order2()) return false;
    for (const auto& comp : components()) {
        if (comp.empty()) continue;
        int prev = -1;
        int first = -1;
        for (int entry : comp) {
            const int c = crossing_of_[entry];
            const int strand = slot_of(entry) % 2;
            const int over = crossings_[c].heights[strand] == 1 ? 1 : 0;
            if (first < 0)
                first = over;
            else if (over == prev)
                return false;
            prev = over;
        }
        if (comp.size() > 1 && first == prev) return false;
    }
    return true;
}

bool Diagram::is_reduced() const {
    const FaceData fd = faces();
    for (const Face& f : fd.faces) {
        for (size_t i = 0; i < f.corners.size(); ++i)
            for (size_t j = i + 1; j < f.corners.size(); ++j) {
                if (f.corners[i].first != f.corners[j].first) continue;
                const int order = crossings_[f.corners[i].first].order;
                const int diff =
                    ((f.corners[i].second - f.corners[j].second) % (2 * order) + 2 * order) %
                    (2 * order);
                if (diff == order) return false;
            }
    }
    return true;
}

bool Diagram::operator==(const Diagram& rhs) const {
    if (crossings_.size() != rhs.crossings_.size() || mate_ != rhs.mate_) return false;
    for (size_t i = 0; i < crossings_.size(); ++i) {
        if (crossings_[i].order != rhs.crossings_[i].order ||
            crossings_[i].heights != rhs.crossings_[i].heights)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Resolution of quadruple crossings

namespace {

// Row contents at the left edge of the braid box: boundary position of each
// row's wire start, and the strand occupying it. Boundary positions run
// clockwise: 0 = top-left, 1..4 down the right side, 5..7 back up the left.
constexpr int kLeftBoundary[4] = {0, 7, 6, 5};
constexpr int kRightBoundary[4] = {1, 2, 3, 4};
constexpr int kInitialStrand[4] = {0, 3, 2, 1};

} // namespace

Diagram Diagram::resolve(ResolutionPattern pattern) const {
    if (all_order2()) return *this;

    const std::vector<int> word = pattern == ResolutionPattern::Canonical
                                      ? std::vector<int>{0, 1, 2, 0, 1, 0}
                                      : std::vector<int>{2, 1, 0, 2, 1, 2};

    DiagramBuilder b;
    // attach[old dart] = (new crossing, slot) where the old edge should plug.
    std::vector<std::pair<int, int>> attach(num_darts(), {-1, -1});

    for (int c = 0; c < num_crossings(); ++c) {
        const Crossing& x = crossings_[c];
        if (x.order == 2) {
            const int nc = b.add_crossing(2, x.heights);
            for (int s = 0; s < 4; ++s) attach[dart(c, s)] = {nc, s};
            continue;
        }
        // pending[row]: either a new-diagram end awaiting connection, or the
        // marker (-1, old boundary slot).
        std::pair<int, int> pending[4];
        int level[4];
        for (int r = 0; r < 4; ++r) {
            pending[r] = {-1, kLeftBoundary[r]};
            level[r] = x.heights[kInitialStrand[r]];
        }
        auto join = [&](const std::pair<int, int>& end, int nc, int ns) {
            if (end.first < 0)
                attach[dart(c, end.second)] = {nc, ns};
            else
                b.connect(end.first, end.second, nc, ns);
        };
        for (int row : word) {
            const int nc = b.add_order2(level[row] < level[row + 1] ? 0 : 1);
            join(pending[row], nc, 0);     // NW from the upper row
            join(pending[row + 1], nc, 3); // SW from the lower row
            pending[row] = {nc, 1};        // NE continues the upper row
            pending[row + 1] = {nc, 2};    // SE continues the lower row
            std::swap(level[row], level[row + 1]);
        }
        for (int r = 0; r < 4; ++r) attach[dart(c, kRightBoundary[r])] = pending[r];
    }

    for (int d = 0; d < num_darts(); ++d) {
        const int m = mate_[d];
        if (d < m) b.connect(attach[d].first, attach[d].second, attach[m].first, attach[m].second);
    }
    Diagram out = b.build();
    out.name_ = name_;
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(const std::string& code) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : code) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::vector<long> parse_int_list(const std::string& body, char sep) {
    std::vector<long> out;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, sep)) {
        if (item.empty()) throw ParseError("empty entry in '" + body + "'");
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw ParseError("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

Diagram Diagram::parse(const std::string& code) {
    const auto tokens = tokenize(code);
    if (tokens.empty()) throw ParseError("empty diagram code");
    if (tokens.size() == 1 && (tokens[0] == "unknot" || tokens[0] == "U")) return unknot();

    DiagramBuilder b;
    std::map<long, std::vector<std::pair<int, int>>> label_ends;

    for (const std::string& tok : tokens) {
        if (tok == "unknot" || tok == "U")
            throw ParseError("'unknot' cannot be combined with crossings");
        if (tok.size() < 4 || (tok[0] != 'X' && tok[0] != 'Q') || tok[1] != '[' ||
            tok.back() != ']')
            throw ParseError("malformed crossing token '" + tok + "'");
        const std::string body = tok.substr(2, tok.size() - 3);
        if (tok[0] == 'X') {
            const auto labels = parse_int_list(body, ',');
            if (labels.size() != 4)
                throw ParseError("X crossing needs 4 edge labels: '" + tok + "'");
            // X[a,b,c,d]: under strand ends (a,b), over strand ends (c,d),
            // clockwise rotation (a,c,b,d).
            const int c = b.add_crossing(2, {2, 1});
            const int slot_for[4] = {0, 2, 1, 3};
            for (int i = 0; i < 4; ++i) label_ends[labels[i]].push_back({c, slot_for[i]});
        } else {
            const auto semi = body.find(';');
            if (semi == std::string::npos)
                throw ParseError("Q crossing needs ';heights' part: '" + tok + "'");
            const auto labels = parse_int_list(body.substr(0, semi), ',');
            const std::string h = body.substr(semi + 1);
            if (labels.size() != 8 || h.size() != 4)
                throw ParseError("Q crossing needs 8 edge labels and 4 heights: '" + tok + "'");
            std::vector<int> heights;
            for (char ch : h) {
                if (ch < '1' || ch > '4') throw ParseError("bad height digit in '" + tok + "'");
                heights.push_back(ch - '0');
            }
            const int c = b.add_crossing(4, heights);
            for (int s = 0; s < 8; ++s) label_ends[labels[s]].push_back({c, s});
        }
    }
    for (const auto& [label, ends] : label_ends) {
        if (ends.size() != 2)
            throw ParseError("half-edge label " + std::to_string(label) + " appears " +
                             std::to_string(ends.size()) + " times (expected 2)");
        b.connect(ends[0].first, ends[0].second, ends[1].first, ends[1].second);
    }
    return b.build();
}

std::string Diagram::to_code() const {
    if (crossings_.empty()) return "unknot";
    // Labels are assigned in emission order, which makes rendered codes fixed
    // points of parse-then-render.
    std::vector<int> label(num_darts(), 0);
    int next = 1;
    auto label_of = [&](int d) {
        if (label[d] == 0) label[d] = label[mate_[d]] = next++;
        return label[d];
    };
    std::ostringstream out;
    for (int c = 0; c < num_crossings(); ++c) {
        if (c > 0) out << ' ';
        const Crossing& x = crossings_[c];
        if (x.order == 2) {
            const int offset = over_strand(c) == 1 ? 0 : 1;
            const int slot_for[4] = {0, 2, 1, 3}; // inverse of the parse order
            out << "X[";
            for (int s = 0; s < 4; ++s)
                out << (s ? "," : "") << label_of(dart(c, (slot_for[s] + offset) % 4));
            out << ']';
        } else {
            out << "Q[";
            for (int s = 0; s < 8; ++s) out << (s ? "," : "") << label_of(dart(c, s));
            out << ';';
            for (int i = 0; i < 4; ++i) out << x.heights[i];
            out << ']';
        }
    }
    return out.str();
}

std::string Diagram::to_json() const {
    nlohmann::ordered_json out;
    out["code"] = to_code();
    if (!name_.empty()) out["name"] = name_;
    nlohmann::ordered_json crossings = nlohmann::ordered_json::array();
    for (int c = 0; c < num_crossings(); ++c) {
        nlohmann::ordered_json jc;
        jc["order"] = crossings_[c].order;
        jc["heights"] = crossings_[c].heights;
        if (crossings_[c].order == 4) jc["type"] = quad_type_label(crossing_type(c));
        crossings.push_back(jc);
    }
    out["crossings"] = crossings;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (int d = 0; d < num_darts(); ++d) {
        const int m = mate_[d];
        if (d < m) {
            edges.push_back({{"from", {crossing_of_[d], slot_of(d)}},
                             {"to", {crossing_of_[m], slot_of(m)}}});
        }
    }
    out["edges"] = edges;
    nlohmann::ordered_json jfaces = nlohmann::ordered_json::array();
    for (const Face& f : faces().faces) {
        nlohmann::ordered_json jf;
        jf["size"] = f.size();
        nlohmann::ordered_json corners = nlohmann::ordered_json::array();
        for (const auto& [c, k] : f.corners) corners.push_back({c, k});
        jf["corners"] = corners;
        jfaces.push_back(jf);
    }
    out["faces"] = jfaces;
    return out.dump(2);
}

// ---------------------------------------------------------------------------
// DiagramBuilder

int DiagramBuilder::add_crossing(int order, std::vector<int> heights) {
    Crossing x;
    x.order = order;
    x.heights = std::move(heights);
    crossings_.push_back(std::move(x));
    pair_.emplace_back(2 * order, -1);
    return static_cast<int>(crossings_.size()) - 1;
}

int DiagramBuilder::add_order2(int over) {
    return add_crossing(2, over == 0 ? std::vector<int>{1, 2} : std::vector<int>{2, 1});
}

int DiagramBuilder::add_quad(const std::array<int, 4>& heights) {
    return add_crossing(4, {heights.begin(), heights.end()});
}

void DiagramBuilder::connect(int c1, int s1, int c2, int s2) {
    auto check = [&](int c, int s) {
        if (c < 0 || c >= static_cast<int>(crossings_.size()) || s < 0 ||
            s >= static_cast<int>(pair_[c].size()))
            throw ValidationError("connect: end out of range");
        if (pair_[c][s] != -1) throw ValidationError("connect: end already paired");
    };
    check(c1, s1);
    if (c1 == c2 && s1 == s2) throw ValidationError("connect: cannot pair an end with itself");
    check(c2, s2);
    pair_[c1][s1] = c2 * 16 + s2;
    pair_[c2][s2] = c1 * 16 + s1;
}

bool DiagramBuilder::connected(int c, int s) const { return pair_[c][s] != -1; }

Diagram DiagramBuilder::assemble() const {
    Diagram d;
    d.crossings_ = crossings_;
    d.index_darts();
    d.mate_.assign(d.num_darts(), -1);
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        for (int s = 0; s < static_cast<int>(pair_[c].size()); ++s) {
            const int enc = pair_[c][s];
            if (enc < 0) throw ValidationError("unconnected crossing end");
            d.mate_[d.dart(c, s)] = d.dart(enc / 16, enc % 16);
        }
    }
    return d;
}

Diagram DiagramBuilder::build(bool allow_disconnected) const {
    Diagram d = assemble();
    d.validate();
    if (!allow_disconnected && !d.crossings_.empty()) {
        UnionFind uf(d.num_darts());
        int comps = d.num_darts();
        for (int i = 0; i < d.num_darts(); ++i) {
            if (uf.unite(i, d.mate_[i])) --comps;
            if (uf.unite(i, d.rotate(i))) --comps;
        }
        if (comps > 1) throw DisconnectedError();
    }
    return d;
}

bool DiagramBuilder::planar_connected() const {
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
        for (int v : pair_[c])
            if (v < 0) return false;
    try {
        Diagram d = assemble();
        d.validate();
        if (d.crossings_.empty()) return true;
        UnionFind uf(d.num_darts());
        int comps = d.num_darts();
        for (int i = 0; i < d.num_darts(); ++i) {
            if (uf.unite(i, d.mate_[i])) --comps;
            if (uf.unite(i, d.rotate(i))) --comps;
        }
        return comps == 1;
    } catch (const Error&) {
        return false;
    }
}

} // namespace quadcross

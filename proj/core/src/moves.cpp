#include "quadcross/moves.hpp"

#include "quadcross/bracket.hpp"
#include "quadcross/errors.hpp"
#include "quadcross/parallel.hpp"
#include "quadcross/random_diagrams.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace quadcross {

// ---------------------------------------------------------------------------
// Double -> quadruple conversion

Diagram convert_crossing(const Diagram& d, int target) {
    if (target < 0 || target >= d.num_crossings())
        throw PreconditionError("convert_crossing: no such crossing");
    if (d.crossing(target).order != 2)
        throw PreconditionError("convert_crossing: crossing is not order 2");

    // The over strand folds back through the point twice. With the under
    // strand's first end at old slot u, the new quadruple crossing reads
    // clockwise: 0 = under-in, 1 = first pass in, 2/3 = inner U-turn,
    // 4 = under-out, 5/6 = outer U-turn, 7 = last pass out. Strand levels:
    // kept under strand at the bottom, the three passes stacked above in the
    // order they are laid down.
    const int over = d.over_strand(target);
    const int u = 1 - over; // first slot of the under strand

    DiagramBuilder b;
    std::vector<std::pair<int, int>> attach(d.num_darts(), {-1, -1});
    int quad = -1;
    for (int c = 0; c < d.num_crossings(); ++c) {
        if (c != target) {
            const int nc = b.add_crossing(d.crossing(c).order, d.crossing(c).heights);
            for (int s = 0; s < 2 * d.crossing(c).order; ++s) attach[d.dart(c, s)] = {nc, s};
            continue;
        }
        quad = b.add_quad({4, 3, 2, 1});
        attach[d.dart(c, u)] = {quad, 0};
        attach[d.dart(c, (u + 1) % 4)] = {quad, 1};
        attach[d.dart(c, (u + 2) % 4)] = {quad, 4};
        attach[d.dart(c, (u + 3) % 4)] = {quad, 7};
    }
    b.connect(quad, 5, quad, 6); // outer U-turn
    b.connect(quad, 2, quad, 3); // inner U-turn
    for (int h = 0; h < d.num_darts(); ++h) {
        const int m = d.mate(h);
        if (h < m) b.connect(attach[h].first, attach[h].second, attach[m].first, attach[m].second);
    }
    Diagram out = b.build();
    out.set_name(d.name());
    return out;
}

// ---------------------------------------------------------------------------
// Covering circles

namespace {

int exit_corner(int entry) { return (entry + 2) % 4; }

// Chords drawn by the circle inside one face, as positions along the face's
// corner cycle. Two chords must not interleave.
bool chords_noncrossing(const std::vector<std::pair<int, int>>& chords, int cycle_len) {
    auto between = [cycle_len](int a, int b, int x) {
        // x strictly inside the arc a -> b (clockwise)
        const int len = (b - a + cycle_len) % cycle_len;
        const int off = (x - a + cycle_len) % cycle_len;
        return off > 0 && off < len;
    };
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            const auto [a, b] = chords[i];
            const auto [c, e] = chords[j];
            if (a == c || a == e || b == c || b == e) return false;
            if (between(a, b, c) != between(a, b, e)) return false;
        }
    return true;
}

struct FaceCorners {
    // corner (crossing, k) -> position in each face's corner cycle
    std::map<std::pair<int, int>, std::pair<int, int>> where; // corner -> (face, pos)
    const FaceData* fd = nullptr;
};

FaceCorners index_corners(const FaceData& fd) {
    FaceCorners fc;
    fc.fd = &fd;
    for (size_t f = 0; f < fd.faces.size(); ++f)
        for (size_t pos = 0; pos < fd.faces[f].corners.size(); ++pos)
            fc.where[fd.faces[f].corners[pos]] = {static_cast<int>(f), static_cast<int>(pos)};
    return fc;
}

} // namespace

bool covering_circle_valid(const Diagram& d, const CoveringCircle& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = c.length();
    if (n < 2 || n % 2 != 0) return fail("length must be even and at least 2");
    if (!d.all_order2()) return fail("covering circles live in all-order-2 diagrams");
    std::set<int> crossings;
    for (const auto& p : c.passages) {
        if (p.crossing < 0 || p.crossing >= d.num_crossings()) return fail("bad crossing id");
        if (p.entry_corner < 0 || p.entry_corner > 3) return fail("bad corner");
        if (!crossings.insert(p.crossing).second) return fail("crossing repeated");
    }
    const FaceData fd = d.faces();
    const FaceCorners fc = index_corners(fd);
    std::map<int, std::vector<std::pair<int, int>>> chords_in_face;
    for (int i = 0; i < n; ++i) {
        const auto& cur = c.passages[i];
        const auto& nxt = c.passages[(i + 1) % n];
        const auto exit_it = fc.where.find({cur.crossing, exit_corner(cur.entry_corner)});
        const auto entry_it = fc.where.find({nxt.crossing, nxt.entry_corner});
        if (exit_it == fc.where.end() || entry_it == fc.where.end())
            return fail("corner missing from face census");
        if (exit_it->second.first != entry_it->second.first)
            return fail("consecutive passages do not share a face");
        chords_in_face[exit_it->second.first].push_back(
            {exit_it->second.second, entry_it->second.second});
    }
    for (const auto& [face, chords] : chords_in_face) {
        if (!chords_noncrossing(chords, fd.faces[face].size()))
            return fail("circle chords intersect inside face " + std::to_string(face));
    }
    return true;
}

namespace {

struct CircleSearch {
    const Diagram& d;
    const FaceData fd;
    const FaceCorners fc;
    std::vector<char> visited;
    std::vector<CoveringCircle::Passage> path;
    CoveringCircle found;
    bool done = false;

    explicit CircleSearch(const Diagram& diagram)
        : d(diagram), fd(diagram.faces()), fc(index_corners(fd)), visited(diagram.num_crossings(), 0) {}

    void dfs(int depth_left) {
        if (done) return;
        const auto& cur = path.back();
        const auto exit_it = fc.where.find({cur.crossing, exit_corner(cur.entry_corner)});
        const int face = exit_it->second.first;
        // Close the cycle?
        const auto& start = path.front();
        if (path.size() >= 2 && path.size() % 2 == 0) {
            const auto start_it = fc.where.find({start.crossing, start.entry_corner});
            if (start_it->second.first == face) {
                CoveringCircle candidate{path};
                if (covering_circle_valid(d, candidate)) {
                    found = candidate;
                    done = true;
                    return;
                }
            }
        }
        if (depth_left == 0) return;
        for (const auto& [crossing, corner] : fd.faces[face].corners) {
            if (visited[crossing]) continue;
            visited[crossing] = 1;
            path.push_back({crossing, corner});
            dfs(depth_left - 1);
            path.pop_back();
            visited[crossing] = 0;
            if (done) return;
        }
    }
};

} // namespace

CoveringCircle find_even_covering_circle(const Diagram& d) {
    if (!d.all_order2() || d.is_unknot_loop())
        throw PreconditionError("covering circle search needs a nonempty all-order-2 diagram");
    if (d.num_crossings() < 2)
        throw PreconditionError("no even covering circle in a 1-crossing diagram");
    // A circle passes each crossing at most once, so its length is capped by
    // the crossing count; iterative deepening returns a shortest even circle.
    const int cap = d.num_crossings();
    CircleSearch search(d);
    for (int target = 2; target <= cap; target += 2) {
        for (int start = 0; start < d.num_crossings(); ++start) {
            for (int corner = 0; corner < 4; ++corner) {
                search.visited.assign(d.num_crossings(), 0);
                search.visited[start] = 1;
                search.path = {{start, corner}};
                search.done = false;
                search.dfs(target - 1);
                if (search.done) return search.found;
            }
        }
    }
    throw Error("no even covering circle found (diagram not reduced?)");
}

// ---------------------------------------------------------------------------
// Quadruple folding

Diagram quad_fold(const Diagram& d, const CoveringCircle& circle) {
    std::string why;
    if (!covering_circle_valid(d, circle, &why))
        throw PreconditionError("quad_fold: invalid covering circle: " + why);
    const int n = circle.length();

    const int x1 = circle.passages[0].crossing;
    const int a1 = circle.passages[0].entry_corner;
    // Strand X occupies x1's slots (a1, a1+2) and is stretched around the
    // circle starting on the inner lane; Y is the other strand, woven along.
    const int x_level = d.over_strand(x1) == (a1 % 2) ? 1 : 4;
    const int y_level = x_level == 1 ? 4 : 1;

    DiagramBuilder b;
    std::vector<std::pair<int, int>> attach(d.num_darts(), {-1, -1});
    std::set<int> on_circle;
    for (const auto& p : circle.passages) on_circle.insert(p.crossing);

    for (int c = 0; c < d.num_crossings(); ++c) {
        if (on_circle.count(c)) continue;
        const int nc = b.add_crossing(d.crossing(c).order, d.crossing(c).heights);
        for (int s = 0; s < 2 * d.crossing(c).order; ++s) attach[d.dart(c, s)] = {nc, s};
    }

    // Stations: passages 1..n-1 become quadruple crossings. New slots,
    // clockwise: 0 = old NW, 1 = old NE, 2 = east upper lane, 3 = east lower
    // lane, 4 = old SE, 5 = old SW, 6 = west lower lane, 7 = west upper lane.
    std::vector<int> station(n, -1);
    for (int s = 1; s < n; ++s) {
        const int xi = circle.passages[s].crossing;
        const int ai = circle.passages[s].entry_corner;
        const int old_strand0 = (ai + 1) % 2; // strand on new slots (0,4)
        auto old_level = [&](int strand) { return d.over_strand(xi) == strand ? 2 : 3; };
        const int lane_north = (s % 2 == 1) ? x_level : y_level; // enters slot 7
        const int lane_south = (s % 2 == 1) ? y_level : x_level; // enters slot 6
        const int nc = b.add_quad({old_level(old_strand0), old_level(1 - old_strand0),
                                   lane_south, lane_north});
        station[s] = nc;
        attach[d.dart(xi, (ai + 1) % 4)] = {nc, 0};
        attach[d.dart(xi, (ai + 2) % 4)] = {nc, 1};
        attach[d.dart(xi, (ai + 3) % 4)] = {nc, 4};
        attach[d.dart(xi, ai)] = {nc, 5};
    }
    for (int s = 1; s + 1 < n; ++s) {
        b.connect(station[s], 2, station[s + 1], 7); // north lane
        b.connect(station[s], 3, station[s + 1], 6); // south lane
    }
    // Strip start: x1's left-side ends feed the first station's west lanes.
    attach[d.dart(x1, (a1 + 2) % 4)] = {station[1], 7};
    attach[d.dart(x1, (a1 + 3) % 4)] = {station[1], 6};
    // Strip end: the last station's east lanes return to x1's right side.
    attach[d.dart(x1, (a1 + 1) % 4)] = {station[n - 1], 2};
    attach[d.dart(x1, a1)] = {station[n - 1], 3};

    for (int h = 0; h < d.num_darts(); ++h) {
        const int m = d.mate(h);
        if (h < m) b.connect(attach[h].first, attach[h].second, attach[m].first, attach[m].second);
    }
    Diagram out = b.build();
    out.set_name(d.name());
    return out;
}

// ---------------------------------------------------------------------------
// Set decomposition

namespace {

struct Candidate {
    std::vector<int> crossings; // sorted
    int witness_face;
    std::string how;
};

} // namespace

SetDecomposition set_decompose(const Diagram& d) {
    if (!d.all_order2() || d.is_unknot_loop())
        throw PreconditionError("set_decompose needs a nonempty all-order-2 diagram");
    if (!d.is_alternating()) throw PreconditionError("set_decompose needs an alternating diagram");
    if (!d.is_reduced()) throw PreconditionError("set_decompose needs a reduced diagram");

    const int nc = d.num_crossings();
    const FaceData fd = d.faces();

    std::vector<Candidate> candidates;
    std::set<std::vector<int>> seen;
    auto add_candidate = [&](std::vector<int> crossings, int face, const std::string& how) {
        std::sort(crossings.begin(), crossings.end());
        if (std::adjacent_find(crossings.begin(), crossings.end()) != crossings.end()) return;
        if (!seen.insert(crossings).second) return;
        candidates.push_back({std::move(crossings), face, how});
    };

    // Faces of size 2..4 with distinct corner crossings.
    std::set<std::pair<int, int>> bigon_pairs;
    for (size_t f = 0; f < fd.faces.size(); ++f) {
        const Face& face = fd.faces[f];
        if (face.size() < 2 || face.size() > 4) continue;
        std::vector<int> crossings;
        for (const auto& [c, k] : face.corners) crossings.push_back(c);
        std::vector<int> sorted = crossings;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        const char* names[] = {"", "", "bigon", "3-gon face", "4-gon face"};
        add_candidate(crossings, static_cast<int>(f), names[face.size()]);
        if (face.size() == 2) bigon_pairs.insert({sorted[0], sorted[1]});
    }

    // Twist chains: paths in the bigon-adjacency graph, length 3 and 4.
    std::vector<std::vector<int>> adj(nc);
    for (const auto& [a, bb] : bigon_pairs) {
        adj[a].push_back(bb);
        adj[bb].push_back(a);
    }
    for (int a = 0; a < nc; ++a)
        for (int b2 : adj[a])
            for (int c2 : adj[b2]) {
                if (c2 == a) continue;
                add_candidate({a, b2, c2}, -1, "twist chain");
                for (int e2 : adj[c2]) {
                    if (e2 == a || e2 == b2) continue;
                    add_candidate({a, b2, c2, e2}, -1, "twist chain");
                }
            }

    // Deterministic order: larger parts first, then lexicographic.
    std::vector<int> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (candidates[i].crossings.size() != candidates[j].crossings.size())
            return candidates[i].crossings.size() > candidates[j].crossings.size();
        return candidates[i].crossings < candidates[j].crossings;
    });
    std::vector<std::vector<int>> by_crossing(nc);
    for (int idx : order)
        for (int x : candidates[idx].crossings) by_crossing[x].push_back(idx);

    // Exact-cover backtracking, pruned by the ceil(remaining/4) bound.
    std::vector<int> best_choice;
    int best_cost = nc + 1;
    std::vector<int> choice;
    std::vector<char> covered(nc, 0);
    int covered_count = 0;

    auto dfs = [&](auto&& self, int used) -> void {
        if (covered_count == nc) {
            if (used < best_cost) {
                best_cost = used;
                best_choice = choice;
            }
            return;
        }
        if (used + (nc - covered_count + 3) / 4 >= best_cost) return;
        int pivot = 0;
        while (covered[pivot]) ++pivot;
        for (int idx : by_crossing[pivot]) {
            const auto& cand = candidates[idx];
            bool ok = true;
            for (int x : cand.crossings)
                if (covered[x]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int x : cand.crossings) covered[x] = 1;
            covered_count += static_cast<int>(cand.crossings.size());
            choice.push_back(idx);
            self(self, used + 1);
            choice.pop_back();
            covered_count -= static_cast<int>(cand.crossings.size());
            for (int x : cand.crossings) covered[x] = 0;
        }
        // singleton fallback
        covered[pivot] = 1;
        ++covered_count;
        choice.push_back(-1 - pivot);
        self(self, used + 1);
        choice.pop_back();
        --covered_count;
        covered[pivot] = 0;
    };
    dfs(dfs, 0);

    SetDecomposition out;
    for (int idx : best_choice) {
        SetDecomposition::Part part;
        if (idx < 0) {
            part.size = 1;
            part.crossings = {-idx - 1};
            part.how = "singleton";
        } else {
            part.size = static_cast<int>(candidates[idx].crossings.size());
            part.crossings = candidates[idx].crossings;
            part.witness_face = candidates[idx].witness_face;
            part.how = candidates[idx].how;
        }
        out.parts.push_back(std::move(part));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration of small quadruple projections

std::vector<EnumerationClass> enumerate_quad_diagrams(int q, int jobs) {
    if (q < 1 || q > 2) throw PreconditionError("enumerate_quad_diagrams supports q in {1,2}");
    const int n = 8 * q;

    // All pairings of the 8q ends, filtered to planar + connected.
    std::vector<std::vector<int>> pairings;
    std::vector<int> mate(n, -1);
    auto rec = [&](auto&& self) -> void {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (mate[i] < 0) {
                p = i;
                break;
            }
        if (p < 0) {
            if (planar_connected_quad_pairing(mate, q)) pairings.push_back(mate);
            return;
        }
        for (int qq = p + 1; qq < n; ++qq) {
            if (mate[qq] >= 0) continue;
            mate[p] = qq;
            mate[qq] = p;
            self(self);
            mate[p] = -1;
            mate[qq] = -1;
        }
    };
    rec(rec);

    // Each pairing times each canonical type assignment.
    uint64_t combos = 1;
    for (int i = 0; i < q; ++i) combos *= kNumQuadTypes;
    const uint64_t total = pairings.size() * combos;

    struct Item {
        std::string jones_key;
        LaurentPoly jones;
        std::string code;
    };
    std::vector<std::vector<Item>> parts(std::max(jobs, 1));
    parallel_chunks(total, jobs, [&](int chunk, uint64_t begin, uint64_t end) {
        for (uint64_t k = begin; k < end; ++k) {
            const auto& m = pairings[k / combos];
            uint64_t t = k % combos;
            DiagramBuilder b;
            for (int c = 0; c < q; ++c) {
                b.add_quad(quad_type_heights(static_cast<QuadType>(t % kNumQuadTypes)));
                t /= kNumQuadTypes;
            }
            for (int dd = 0; dd < n; ++dd)
                if (dd < m[dd]) b.connect(dd / 8, dd % 8, m[dd] / 8, m[dd] % 8);
            Diagram diag = b.build();
            const LaurentPoly jones = normalized_jones(diag.resolve());
            parts[chunk].push_back({jones.to_string(), jones, diag.to_code()});
        }
    });

    std::map<std::string, EnumerationClass> classes;
    for (const auto& part : parts)
        for (const auto& item : part) {
            auto [it, inserted] = classes.try_emplace(item.jones_key);
            if (inserted) it->second.jones = item.jones;
            it->second.diagrams.push_back(Diagram::parse(item.code));
        }
    std::vector<EnumerationClass> out;
    out.reserve(classes.size());
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    return out;
}

// ---------------------------------------------------------------------------
// JSON renderings

std::string CoveringCircle::to_json() const {
    nlohmann::ordered_json out;
    out["length"] = length();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& p : passages) {
        nlohmann::ordered_json pass;
        pass["crossing"] = p.crossing;
        pass["entry_corner"] = p.entry_corner;
        pass["exit_corner"] = exit_corner(p.entry_corner);
        list.push_back(pass);
    }
    out["passages"] = list;
    return out.dump(2);
}

std::string SetDecomposition::to_json() const {
    nlohmann::ordered_json out;
    out["cost"] = cost();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& part : parts) {
        nlohmann::ordered_json p;
        p["size"] = part.size;
        p["crossings"] = part.crossings;
        p["how"] = part.how;
        if (part.witness_face >= 0) p["witness_face"] = part.witness_face;
        list.push_back(p);
    }
    out["parts"] = list;
    return out.dump(2);
}

} // namespace quadcross

#include "quadcross/bracket.hpp"

#include "quadcross/errors.hpp"
#include "quadcross/parallel.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

namespace quadcross {

namespace {

// Small fixed-capacity union-find reset per state.
struct CircleCounter {
    std::vector<int> parent;
    std::vector<int> init;
    int live = 0;

    explicit CircleCounter(int n) : parent(n), init(n) {
        std::iota(init.begin(), init.end(), 0);
    }
    void reset() {
        parent = init;
        live = static_cast<int>(parent.size());
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[b] = a;
            --live;
        }
    }
};

// Smoothing slot pairs for an order-2 crossing. The A split joins each end of
// the over strand to the next end clockwise; B joins to the previous one.
void order2_pairs(int over, bool b_split, int pairs[2][2]) {
    const int p = over;
    if (!b_split) {
        pairs[0][0] = p;
        pairs[0][1] = (p + 1) % 4;
        pairs[1][0] = (p + 2) % 4;
        pairs[1][1] = (p + 3) % 4;
    } else {
        pairs[0][0] = p;
        pairs[0][1] = (p + 3) % 4;
        pairs[1][0] = (p + 2) % 4;
        pairs[1][1] = (p + 1) % 4;
    }
}

LaurentPoly expand_histogram(const std::map<std::pair<int, int>, BigInt>& hist) {
    // hist[(exponent sum, circles)] -> count; bracket = sum count * A^e * loop^(circles-1)
    int max_circles = 1;
    for (const auto& [key, count] : hist) max_circles = std::max(max_circles, key.second);
    std::vector<LaurentPoly> loop_pow(max_circles);
    loop_pow[0] = LaurentPoly::one();
    for (int i = 1; i < max_circles; ++i) loop_pow[i] = loop_pow[i - 1] * LaurentPoly::loop_factor();
    LaurentPoly out;
    for (const auto& [key, count] : hist) {
        const auto [e, circles] = key;
        out += LaurentPoly::monomial(e, count) * loop_pow[circles - 1];
    }
    return out;
}

} // namespace

LaurentPoly kauffman_bracket(const Diagram& d, int jobs) {
    if (d.is_unknot_loop()) return LaurentPoly::one();
    if (!d.all_order2())
        throw PreconditionError("kauffman_bracket needs an all-order-2 diagram (resolve first)");

    const int c = d.num_crossings();
    const int edges = d.num_edges();

    // Per-dart edge index.
    std::vector<int> edge_of(d.num_darts());
    {
        int next = 0;
        std::vector<int> assigned(d.num_darts(), -1);
        for (int h = 0; h < d.num_darts(); ++h) {
            if (assigned[h] >= 0) continue;
            assigned[h] = assigned[d.mate(h)] = next++;
        }
        edge_of = assigned;
    }
    // Precompute both smoothings of every crossing as edge-index pairs.
    struct CrossingChoices {
        int pairs[2][2][2]; // [split][arc][endpoint] -> edge index
    };
    std::vector<CrossingChoices> choices(c);
    for (int x = 0; x < c; ++x) {
        const int over = d.over_strand(x);
        for (int split = 0; split < 2; ++split) {
            int sp[2][2];
            order2_pairs(over, split == 1, sp);
            for (int a = 0; a < 2; ++a)
                for (int e = 0; e < 2; ++e)
                    choices[x].pairs[split][a][e] = edge_of[d.dart(x, sp[a][e])];
        }
    }

    const uint64_t total = uint64_t(1) << c;
    std::vector<std::map<std::pair<int, int>, BigInt>> parts(std::max(jobs, 1));
    parallel_chunks(total, jobs, [&](int chunk, uint64_t begin, uint64_t end) {
        CircleCounter uf(edges);
        auto& hist = parts[chunk];
        for (uint64_t mask = begin; mask < end; ++mask) {
            uf.reset();
            for (int x = 0; x < c; ++x) {
                const auto& p = choices[x].pairs[(mask >> x) & 1u];
                uf.unite(p[0][0], p[0][1]);
                uf.unite(p[1][0], p[1][1]);
            }
            const int exponent = c - 2 * static_cast<int>(__builtin_popcountll(mask));
            hist[{exponent, uf.live}] += 1;
        }
    });
    std::map<std::pair<int, int>, BigInt> hist;
    for (const auto& part : parts)
        for (const auto& [k, v] : part) hist[k] += v;
    return expand_histogram(hist);
}

// ---------------------------------------------------------------------------
// Skein table derivation

namespace {

// The same braid pattern used by Diagram::resolve, rebuilt as a tangle in a
// disk with 8 boundary stubs, so the 64 classical states can be classified by
// their boundary connectivity.
struct QuadTangle {
    // darts 0..23: internal crossing ends (crossing k owns 4k..4k+3)
    // darts 24..31: boundary stubs (stub i = boundary position i, clockwise)
    std::array<int, 32> mate;
    std::array<int, 6> over; // over strand of each internal crossing

    static constexpr int stub(int pos) { return 24 + pos; }
};

QuadTangle build_quad_tangle(QuadType type) {
    const std::array<int, 4> heights = quad_type_heights(type);
    constexpr int kLeftBoundary[4] = {0, 7, 6, 5};
    constexpr int kRightBoundary[4] = {1, 2, 3, 4};
    constexpr int kInitialStrand[4] = {0, 3, 2, 1};
    const int word[6] = {0, 1, 2, 0, 1, 0};

    QuadTangle t{};
    t.mate.fill(-1);
    int pending[4];
    int level[4];
    for (int r = 0; r < 4; ++r) {
        pending[r] = QuadTangle::stub(kLeftBoundary[r]);
        level[r] = heights[kInitialStrand[r]];
    }
    auto connect = [&](int a, int b) {
        t.mate[a] = b;
        t.mate[b] = a;
    };
    for (int k = 0; k < 6; ++k) {
        const int row = word[k];
        t.over[k] = level[row] < level[row + 1] ? 0 : 1;
        connect(pending[row], 4 * k + 0);     // NW
        connect(pending[row + 1], 4 * k + 3); // SW
        pending[row] = 4 * k + 1;             // NE
        pending[row + 1] = 4 * k + 2;         // SE
        std::swap(level[row], level[row + 1]);
    }
    for (int r = 0; r < 4; ++r) connect(pending[r], QuadTangle::stub(kRightBoundary[r]));
    return t;
}

} // namespace

SkeinTable derive_skein_table() {
    SkeinTable table;
    for (int ti = 0; ti < kNumQuadTypes; ++ti) {
        const QuadType type = static_cast<QuadType>(ti);
        const QuadTangle tangle = build_quad_tangle(type);

        std::array<LaurentPoly, 14> acc;
        for (uint32_t mask = 0; mask < 64; ++mask) {
            CircleCounter uf(32);
            uf.reset();
            for (int d = 0; d < 32; ++d)
                if (tangle.mate[d] > d) uf.unite(d, tangle.mate[d]);
            for (int k = 0; k < 6; ++k) {
                int sp[2][2];
                order2_pairs(tangle.over[k], (mask >> k) & 1u, sp);
                uf.unite(4 * k + sp[0][0], 4 * k + sp[0][1]);
                uf.unite(4 * k + sp[1][0], 4 * k + sp[1][1]);
            }
            // Boundary connectivity: stubs pair up through the tangle.
            std::array<uint8_t, 8> matching{};
            matching.fill(0xff);
            for (int i = 0; i < 8; ++i) {
                if (matching[i] != 0xff) continue;
                const int root = uf.find(QuadTangle::stub(i));
                for (int j = i + 1; j < 8; ++j) {
                    if (matching[j] == 0xff && uf.find(QuadTangle::stub(j)) == root) {
                        matching[i] = static_cast<uint8_t>(j);
                        matching[j] = static_cast<uint8_t>(i);
                        break;
                    }
                }
                if (matching[i] == 0xff) throw Error("tangle state leaves an unmatched stub");
            }
            const int idx = splitting_index(matching);
            if (idx < 0) throw Error("tangle state produced a non-planar boundary matching");
            // closed circles = all classes minus the four stub arcs
            const int closed = uf.live - 4;
            const int exponent = 6 - 2 * static_cast<int>(__builtin_popcount(mask));
            acc[idx] += LaurentPoly::monomial(exponent, 1) * LaurentPoly::loop_factor().pow(closed);
        }
        for (int i = 0; i < 14; ++i) {
            if (acc[i].is_zero()) continue;
            // The derived coefficients must be positive integer combinations
            // with exponents on the relation's even grid.
            for (const auto& [e, c] : acc[i].terms()) {
                if (c <= 0)
                    throw Error(std::string("negative coefficient entry for type ") +
                                quad_type_label(type) + " splitting " +
                                all_splittings()[i].to_string() + ": " + acc[i].to_string());
                if (((e % 2) + 2) % 2 != 0)
                    throw Error("odd exponent in skein coefficient");
            }
            table.set(type, i, acc[i]);
        }
    }
    return table;
}

const SkeinTable& skein_table() {
    static const SkeinTable table = derive_skein_table();
    return table;
}

// ---------------------------------------------------------------------------
// Quadruple state sum

namespace {

struct QuadOptions {
    struct Option {
        std::array<std::pair<int, int>, 4> arcs; // edge-index pairs
        int exponent;
        int multiplier;
        int splitting;
    };
    std::vector<Option> options;
};

// The canonical frame of crossing x rotated so that position 0 is the slot of
// the top strand.
int rotation_of(const Diagram& d, int x) {
    const auto& h = d.crossing(x).heights;
    for (int i = 0; i < 4; ++i)
        if (h[i] == 1) return i;
    throw ValidationError("order-4 crossing without a top strand");
}

} // namespace

LaurentPoly quad_bracket(const Diagram& d, const SkeinTable& table, int jobs) {
    if (d.is_unknot_loop()) return LaurentPoly::one();

    const int nc = d.num_crossings();
    const int edges = d.num_edges();
    std::vector<int> edge_of(d.num_darts(), -1);
    {
        int next = 0;
        for (int h = 0; h < d.num_darts(); ++h) {
            if (edge_of[h] >= 0) continue;
            edge_of[h] = edge_of[d.mate(h)] = next++;
        }
    }

    std::vector<QuadOptions> all(nc);
    uint64_t total = 1;
    for (int x = 0; x < nc; ++x) {
        auto& opts = all[x].options;
        if (d.crossing(x).order == 2) {
            const int over = d.over_strand(x);
            for (int split = 0; split < 2; ++split) {
                int sp[2][2];
                order2_pairs(over, split == 1, sp);
                QuadOptions::Option o{};
                o.arcs[0] = {edge_of[d.dart(x, sp[0][0])], edge_of[d.dart(x, sp[0][1])]};
                o.arcs[1] = {edge_of[d.dart(x, sp[1][0])], edge_of[d.dart(x, sp[1][1])]};
                o.arcs[2] = o.arcs[3] = {-1, -1};
                o.exponent = split == 0 ? 1 : -1;
                o.multiplier = 1;
                o.splitting = split;
                opts.push_back(o);
            }
        } else {
            const QuadType type = d.crossing_type(x);
            const int rot = rotation_of(d, x);
            for (const Splitting& s : all_splittings()) {
                const LaurentPoly& c = table.coeff(type, s.index);
                if (c.is_zero()) continue;
                QuadOptions::Option base{};
                int k = 0;
                for (const auto& [a, b] : s.arcs())
                    base.arcs[k++] = {edge_of[d.dart(x, (a + rot) % 8)],
                                      edge_of[d.dart(x, (b + rot) % 8)]};
                base.splitting = s.index;
                for (const auto& [e, m] : c.terms()) {
                    QuadOptions::Option o = base;
                    o.exponent = e;
                    o.multiplier = static_cast<int>(m);
                    opts.push_back(o);
                }
            }
        }
        total *= opts.size();
    }

    std::vector<std::map<std::pair<int, int>, BigInt>> parts(std::max(jobs, 1));
    parallel_chunks(total, jobs, [&](int chunk, uint64_t begin, uint64_t end) {
        CircleCounter uf(edges);
        auto& hist = parts[chunk];
        std::vector<int> digits(nc);
        for (uint64_t state = begin; state < end; ++state) {
            uint64_t rest = state;
            int exponent = 0;
            int64_t mult = 1;
            uf.reset();
            for (int x = 0; x < nc; ++x) {
                const auto& opts = all[x].options;
                const auto& o = opts[rest % opts.size()];
                rest /= opts.size();
                exponent += o.exponent;
                mult *= o.multiplier;
                for (const auto& [a, b] : o.arcs)
                    if (a >= 0) uf.unite(a, b);
            }
            hist[{exponent, uf.live}] += mult;
        }
    });
    std::map<std::pair<int, int>, BigInt> hist;
    for (const auto& part : parts)
        for (const auto& [k, v] : part) hist[k] += v;
    return expand_histogram(hist);
}

// ---------------------------------------------------------------------------
// Level adjacency

LevelAdjacencyReport verify_level_adjacency(const SkeinTable& table) {
    LevelAdjacencyReport report;
    for (int ti = 0; ti < kNumQuadTypes; ++ti) {
        const QuadType type = static_cast<QuadType>(ti);
        const int levels = table.level_count(type);
        for (int level = 1; level <= levels; ++level) {
            for (int si : table.splittings_at_level(type, level)) {
                const Splitting& s = all_splittings()[si];
                auto has_neighbour_at = [&](int other_level) {
                    for (int tj : table.splittings_at_level(type, other_level))
                        if (one_split_move_apart(s, all_splittings()[tj])) return true;
                    return false;
                };
                const bool parallel_exception =
                    (type == QuadType::q1243 || type == QuadType::q1342) &&
                    s.kind == SplitKind::Parallel;
                if (level > 1 && !has_neighbour_at(level - 1)) {
                    LevelAdjacencyReport::Gap g{type, si, level, true};
                    if (parallel_exception && level == 2)
                        report.exceptions.push_back(g);
                    else
                        report.violations.push_back(g);
                }
                if (level < levels && !has_neighbour_at(level + 1)) {
                    LevelAdjacencyReport::Gap g{type, si, level, false};
                    if (parallel_exception && level == levels - 1)
                        report.exceptions.push_back(g);
                    else
                        report.violations.push_back(g);
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Extreme states

namespace {

struct QuadStateContext {
    const Diagram& d;
    const SkeinTable& table;
    int edges = 0;
    std::vector<int> edge_of;
    std::vector<int> rot;
    std::vector<QuadType> type;

    explicit QuadStateContext(const Diagram& diagram, const SkeinTable& t)
        : d(diagram), table(t) {
        edge_of.assign(d.num_darts(), -1);
        int next = 0;
        for (int h = 0; h < d.num_darts(); ++h) {
            if (edge_of[h] >= 0) continue;
            edge_of[h] = edge_of[d.mate(h)] = next++;
        }
        edges = next;
        rot.resize(d.num_crossings());
        type.resize(d.num_crossings());
        for (int x = 0; x < d.num_crossings(); ++x) {
            rot[x] = rotation_of(d, x);
            type[x] = d.crossing_type(x);
        }
    }

    void apply(CircleCounter& uf, int x, int splitting) const {
        const Splitting& s = all_splittings()[splitting];
        for (const auto& [a, b] : s.arcs())
            uf.unite(edge_of[d.dart(x, (a + rot[x]) % 8)], edge_of[d.dart(x, (b + rot[x]) % 8)]);
    }

    int circles(const std::vector<int>& choice) const {
        CircleCounter uf(edges);
        uf.reset();
        for (int x = 0; x < d.num_crossings(); ++x) apply(uf, x, choice[x]);
        return uf.live;
    }

    // Number of distinct state circles meeting the four arcs at crossing x.
    int circles_through(const std::vector<int>& choice, int x) const {
        CircleCounter uf(edges);
        uf.reset();
        for (int y = 0; y < d.num_crossings(); ++y) apply(uf, y, choice[y]);
        const Splitting& s = all_splittings()[choice[x]];
        std::vector<int> reps;
        for (const auto& [a, b] : s.arcs()) {
            (void)b;
            reps.push_back(uf.find(edge_of[d.dart(x, (a + rot[x]) % 8)]));
        }
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        return static_cast<int>(reps.size());
    }
};

// Pick, among per-crossing candidate splitting lists, the lexicographically
// first combination maximizing the circle count.
std::vector<int> maximize_circles(const QuadStateContext& ctx,
                                  const std::vector<std::vector<int>>& candidates) {
    std::vector<size_t> idx(candidates.size(), 0);
    std::vector<int> best;
    int best_circles = -1;
    for (;;) {
        std::vector<int> choice(candidates.size());
        for (size_t i = 0; i < candidates.size(); ++i) choice[i] = candidates[i][idx[i]];
        const int circ = ctx.circles(choice);
        if (circ > best_circles) {
            best_circles = circ;
            best = choice;
        }
        size_t i = candidates.size();
        while (i > 0 && ++idx[i - 1] == candidates[i - 1].size()) {
            idx[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    return best;
}

int unique_parallel_at_level(const SkeinTable& table, QuadType t, int level) {
    int found = -1;
    for (int si : table.splittings_at_level(t, level)) {
        if (all_splittings()[si].kind == SplitKind::Parallel) {
            if (found >= 0) throw Error("multiple parallel splittings at one level");
            found = si;
        }
    }
    if (found < 0) throw Error("no parallel splitting at expected level");
    return found;
}

} // namespace

ExtremeStates extreme_states(const Diagram& d, const SkeinTable& table) {
    if (!d.all_order4() || d.is_unknot_loop())
        throw PreconditionError("extreme_states needs a nonempty all-order-4 diagram");
    QuadStateContext ctx(d, table);
    const int nc = d.num_crossings();

    std::vector<std::vector<int>> top_candidates(nc), bottom_candidates(nc);
    for (int x = 0; x < nc; ++x) {
        top_candidates[x] = table.splittings_at_level(ctx.type[x], 1);
        bottom_candidates[x] = table.splittings_at_level(ctx.type[x], table.level_count(ctx.type[x]));
    }

    std::vector<int> smax = maximize_circles(ctx, top_candidates);

    // Parallel preference rule for the 1243/1342 relations.
    std::vector<bool> parallel_mode(nc, false);
    for (int x = 0; x < nc; ++x) {
        const QuadType t = ctx.type[x];
        if (t != QuadType::q1243 && t != QuadType::q1342) continue;
        const int levels = table.level_count(t);
        const int p2 = unique_parallel_at_level(table, t, 2);
        const int p4 = unique_parallel_at_level(table, t, levels - 1);
        std::vector<int> with_p2 = smax;
        with_p2[x] = p2;
        const int k2 = ctx.circles_through(with_p2, x);
        bool use = k2 == 4;
        if (!use && k2 == 2) {
            std::vector<int> with_p4 = smax;
            with_p4[x] = p4;
            use = ctx.circles_through(with_p4, x) == 4;
        }
        if (use) {
            smax = with_p2;
            parallel_mode[x] = true;
        }
    }

    for (int x = 0; x < nc; ++x) {
        if (parallel_mode[x]) {
            const QuadType t = ctx.type[x];
            bottom_candidates[x] = {unique_parallel_at_level(table, t, table.level_count(t) - 1)};
        }
    }
    std::vector<int> smin = maximize_circles(ctx, bottom_candidates);

    ExtremeStates out;
    out.s_max.choices = smax;
    out.s_max.circles = ctx.circles(smax);
    out.s_min.choices = smin;
    out.s_min.circles = ctx.circles(smin);
    return out;
}

ExponentBounds exponent_bounds(const Diagram& d, const SkeinTable& table) {
    const ExtremeStates es = extreme_states(d, table);
    int n1432 = 0, n1234 = 0, nmid = 0;
    for (int x = 0; x < d.num_crossings(); ++x) {
        switch (d.crossing_type(x)) {
            case QuadType::q1432: ++n1432; break;
            case QuadType::q1234: ++n1234; break;
            default: ++nmid; break;
        }
    }
    ExponentBounds b{};
    b.upper = 6 * n1432 + 4 * nmid + 2 * n1234 + 2 * es.s_max.circles - 2;
    b.lower = -2 * n1432 - 4 * nmid - 6 * n1234 - (2 * es.s_min.circles - 2);
    return b;
}

LaurentPoly normalized_jones(const Diagram& d, const std::vector<bool>& flip, int jobs) {
    if (d.is_unknot_loop()) return LaurentPoly::one();
    const int w = d.writhe(flip);
    return LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? BigInt(1) : BigInt(-1)) *
           kauffman_bracket(d, jobs);
}

} // namespace quadcross

#include "quadcross/constructions.hpp"

#include "quadcross/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace quadcross {

namespace {

// Slot layout shared by the braid-style builders: ends clockwise
// [NW, NE, SE, SW]; strand (NW, SE) descends left to right, (NE, SW) ascends.
constexpr int kNW = 0, kNE = 1, kSE = 2, kSW = 3;

struct End {
    int c, s;
};

// Rows of dangling ends for plat / closure constructions.
class RowTracker {
public:
    explicit RowTracker(int rows) : start_(rows), pending_(rows) {}

    // Feed the left side of a new crossing on rows (r, r+1).
    void enter(DiagramBuilder& b, int crossing, int r) {
        attach(b, r, {crossing, kNW});
        attach(b, r + 1, {crossing, kSW});
        pending_[r] = End{crossing, kNE};
        pending_[r + 1] = End{crossing, kSE};
    }

    bool touched(int r) const { return start_[r].has_value(); }
    const End& start(int r) const { return *start_[r]; }
    const End& pending(int r) const { return *pending_[r]; }

private:
    void attach(DiagramBuilder& b, int r, End e) {
        if (!pending_[r]) {
            start_[r] = e;
        } else {
            b.connect(pending_[r]->c, pending_[r]->s, e.c, e.s);
        }
        pending_[r] = e;
    }

    std::vector<std::optional<End>> start_;
    std::vector<std::optional<End>> pending_;
};

} // namespace

Diagram twist_chain(int n) {
    if (n < 1) throw PreconditionError("twist_chain needs n >= 1");
    DiagramBuilder b;
    for (int i = 0; i < n; ++i) b.add_order2(0); // strand (NW,SE) over everywhere
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        b.connect(i, kNE, j, kNW);
        b.connect(i, kSE, j, kSW);
    }
    return b.build();
}

Diagram two_bridge(const std::vector<int>& cf) {
    if (cf.empty()) throw PreconditionError("two_bridge needs at least one twist region");
    for (int a : cf)
        if (a < 1) throw PreconditionError("twist region sizes must be positive");

    DiagramBuilder b;
    RowTracker rows(4);
    for (size_t region = 0; region < cf.size(); ++region) {
        const int top_row = (region % 2 == 0) ? 1 : 0; // middle rows first
        for (int k = 0; k < cf[region]; ++k) rows.enter(b, b.add_order2(0), top_row);
    }

    // Plat caps. The left side always pairs rows (0,1) and (2,3). On the
    // right the pairing depends on where the last twist region sits: capping
    // the rows of the final region directly would close its last crossing
    // into a kink, so an even region count uses the nested caps (1,2),(0,3).
    const bool last_middle = cf.size() % 2 == 1;
    const std::array<std::pair<int, int>, 2> left_caps = {{{0, 1}, {2, 3}}};
    const std::array<std::pair<int, int>, 2> right_caps =
        last_middle ? std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}}
                    : std::array<std::pair<int, int>, 2>{{{1, 2}, {0, 3}}};

    // Terminal graph: node = (side, row); caps link two rows on one side and
    // an untouched row links its own two sides. Touched terminals carry the
    // dangling crossing ends; walking the links pairs them up.
    auto node = [](int side, int row) { return side * 4 + row; };
    std::array<int, 8> link;
    link.fill(-1);
    auto add_link = [&](int a, int bnode) {
        auto set = [&](int x, int y) {
            if (link[x] != -1) throw PreconditionError("two_bridge: cap collision");
            link[x] = y;
        };
        set(a, bnode);
        set(bnode, a);
    };
    for (const auto& [r1, r2] : left_caps) add_link(node(0, r1), node(0, r2));
    for (const auto& [r1, r2] : right_caps) add_link(node(1, r1), node(1, r2));

    std::array<End, 8> terminal_end;
    std::array<char, 8> is_touched{};
    for (int r = 0; r < 4; ++r) {
        if (rows.touched(r)) {
            is_touched[node(0, r)] = is_touched[node(1, r)] = 1;
            terminal_end[node(0, r)] = rows.start(r);
            terminal_end[node(1, r)] = rows.pending(r);
        }
    }
    std::array<char, 8> used{};
    for (int t = 0; t < 8; ++t) {
        if (!is_touched[t] || used[t]) continue;
        // Walk across caps and untouched-row passthroughs to the other end.
        used[t] = 1;
        int cur = link[t];
        while (!is_touched[cur]) {
            used[cur] = 1;
            const int other_side = node(1 - cur / 4, cur % 4);
            used[other_side] = 1;
            cur = link[other_side];
        }
        used[cur] = 1;
        b.connect(terminal_end[t].c, terminal_end[t].s, terminal_end[cur].c,
                  terminal_end[cur].s);
    }
    return make_alternating(b.build());
}

Diagram pretzel(const std::vector<int>& columns) {
    if (columns.size() < 2) throw PreconditionError("pretzel needs at least two columns");
    for (int p : columns)
        if (p == 0) throw PreconditionError("pretzel column sizes must be nonzero");

    DiagramBuilder b;
    std::vector<std::vector<int>> col(columns.size());
    for (size_t j = 0; j < columns.size(); ++j) {
        for (int i = 0; i < std::abs(columns[j]); ++i) {
            const int c = b.add_order2(columns[j] > 0 ? 0 : 1);
            col[j].push_back(c);
            if (i > 0) {
                b.connect(col[j][i - 1], kSW, c, kNW);
                b.connect(col[j][i - 1], kSE, c, kNE);
            }
        }
    }
    const size_t k = columns.size();
    for (size_t j = 0; j < k; ++j) {
        const size_t jn = (j + 1) % k;
        b.connect(col[j].front(), kNE, col[jn].front(), kNW);
        b.connect(col[j].back(), kSE, col[jn].back(), kSW);
    }
    Diagram out = b.build();
    const bool all_positive = std::all_of(columns.begin(), columns.end(),
                                          [](int p) { return p > 0; });
    if (all_positive && !out.is_alternating()) out = make_alternating(out);
    return out;
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 2) throw PreconditionError("braid_closure needs at least two strands");
    if (word.empty()) throw PreconditionError("braid_closure needs a nonempty word");

    DiagramBuilder b;
    RowTracker rows(strands);
    for (int letter : word) {
        const int gen = std::abs(letter);
        if (gen < 1 || gen >= strands) throw PreconditionError("braid letter out of range");
        const int c = b.add_order2(letter > 0 ? 0 : 1); // positive: NW strand on top
        rows.enter(b, c, gen - 1);
    }
    for (int r = 0; r < strands; ++r) {
        if (!rows.touched(r))
            throw PreconditionError("braid word never uses row " + std::to_string(r + 1));
        b.connect(rows.start(r).c, rows.start(r).s, rows.pending(r).c, rows.pending(r).s);
    }
    return b.build();
}

Diagram make_alternating(const Diagram& d) {
    if (!d.all_order2()) throw PreconditionError("make_alternating needs an all-order-2 diagram");
    if (d.is_unknot_loop()) return d;

    // over_strand assignment per crossing: -1 unknown.
    std::vector<int> over(d.num_crossings(), -1);
    for (const auto& comp : d.components()) {
        // Passage list: (crossing, strand) in traversal order.
        std::vector<std::pair<int, int>> passages;
        passages.reserve(comp.size());
        for (int entry : comp)
            passages.emplace_back(d.crossing_of(entry), d.slot_of(entry) % 2);
        if (passages.size() % 2 != 0)
            throw Error("component with odd passage count cannot alternate");

        // Find a passage with an already-constrained crossing, else seed one.
        int anchor = -1;
        for (size_t i = 0; i < passages.size(); ++i)
            if (over[passages[i].first] >= 0) {
                anchor = static_cast<int>(i);
                break;
            }
        bool anchor_over;
        if (anchor < 0) {
            anchor = 0;
            anchor_over = true;
        } else {
            anchor_over = over[passages[anchor].first] == passages[anchor].second;
        }
        for (size_t step = 0; step < passages.size(); ++step) {
            const size_t i = (anchor + step) % passages.size();
            const bool want_over = (step % 2 == 0) ? anchor_over : !anchor_over;
            const auto [c, strand] = passages[i];
            const int value = want_over ? strand : 1 - strand;
            if (over[c] < 0)
                over[c] = value;
            else if (over[c] != value)
                throw Error("alternation conflict; rotation data is inconsistent");
        }
    }

    DiagramBuilder b;
    for (int c = 0; c < d.num_crossings(); ++c) b.add_order2(over[c] < 0 ? 0 : over[c]);
    for (int dart = 0; dart < d.num_darts(); ++dart) {
        const int m = d.mate(dart);
        if (dart < m)
            b.connect(d.crossing_of(dart), d.slot_of(dart), d.crossing_of(m), d.slot_of(m));
    }
    Diagram out = b.build();
    if (!out.is_alternating()) throw Error("make_alternating failed to alternate");
    return out;
}

} // namespace quadcross

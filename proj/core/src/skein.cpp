#include "quadcross/skein.hpp"

#include "quadcross/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <sstream>

namespace quadcross {

namespace {

bool is_noncrossing(const std::array<uint8_t, 8>& mate) {
    for (int a = 0; a < 8; ++a) {
        const int b = mate[a];
        if (a >= b) continue;
        for (int c = a + 1; c < b; ++c) {
            const int d = mate[c];
            if (d < a || d > b) return false; // chord (c,d) leaves the (a,b) interval
        }
    }
    return true;
}

void enumerate_matchings(std::array<uint8_t, 8>& mate, std::vector<std::array<uint8_t, 8>>& out) {
    int p = -1;
    for (int i = 0; i < 8; ++i)
        if (mate[i] == 0xff) {
            p = i;
            break;
        }
    if (p < 0) {
        if (is_noncrossing(mate)) out.push_back(mate);
        return;
    }
    for (int q = p + 1; q < 8; ++q) {
        if (mate[q] != 0xff) continue;
        mate[p] = static_cast<uint8_t>(q);
        mate[q] = static_cast<uint8_t>(p);
        enumerate_matchings(mate, out);
        mate[p] = 0xff;
        mate[q] = 0xff;
    }
}

int circular_distance(int a, int b) {
    int d = std::abs(a - b) % 8;
    return std::min(d, 8 - d);
}

SplitKind classify(const std::array<uint8_t, 8>& mate) {
    int long_arcs = 0;
    for (int i = 0; i < 8; ++i)
        if (i < mate[i] && circular_distance(i, mate[i]) == 3) ++long_arcs;
    switch (long_arcs) {
        case 2: return SplitKind::Parallel;
        case 1: return SplitKind::Mixed;
        case 0: return SplitKind::U;
        default: throw Error("impossible arc structure in splitting");
    }
}

std::vector<Splitting> make_census() {
    std::array<uint8_t, 8> mate;
    mate.fill(0xff);
    std::vector<std::array<uint8_t, 8>> raw;
    enumerate_matchings(mate, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<Splitting> census;
    census.reserve(raw.size());
    for (const auto& m : raw) {
        Splitting s;
        s.mate = m;
        s.kind = classify(m);
        s.index = static_cast<int>(census.size());
        census.push_back(s);
    }
    if (census.size() != 14) throw Error("splitting census must have 14 entries");
    return census;
}

} // namespace

const std::vector<Splitting>& all_splittings() {
    static const std::vector<Splitting> census = make_census();
    return census;
}

int splitting_index(const std::array<uint8_t, 8>& mate) {
    for (const Splitting& s : all_splittings())
        if (s.mate == mate) return s.index;
    return -1;
}

std::array<std::pair<int, int>, 4> Splitting::arcs() const {
    std::array<std::pair<int, int>, 4> out;
    int k = 0;
    for (int i = 0; i < 8; ++i)
        if (i < mate[i]) out[k++] = {i, mate[i]};
    return out;
}

std::string Splitting::to_string() const {
    std::ostringstream s;
    for (const auto& [a, b] : arcs()) s << '(' << a << ' ' << b << ')';
    return s.str();
}

bool arcs_adjacent(const Splitting& s, int arc_a, int arc_b) {
    if (arc_a == arc_b) return false;
    const auto arcs = s.arcs();
    auto inside = [](const std::pair<int, int>& chord, int p) {
        return chord.first < p && p < chord.second;
    };
    for (int g = 0; g < 4; ++g) {
        if (g == arc_a || g == arc_b) continue;
        if (inside(arcs[g], arcs[arc_a].first) != inside(arcs[g], arcs[arc_b].first))
            return false;
    }
    return true;
}

Splitting split_move(const Splitting& s, int arc_a, int arc_b) {
    if (arc_a < 0 || arc_a > 3 || arc_b < 0 || arc_b > 3 || arc_a == arc_b)
        throw PreconditionError("split_move: site must name two distinct arcs");
    const auto arcs = s.arcs();
    const auto [a1, a2] = arcs[arc_a];
    const auto [b1, b2] = arcs[arc_b];

    const std::array<std::array<std::pair<int, int>, 2>, 2> alternatives = {{
        {{{a1, b1}, {a2, b2}}},
        {{{a1, b2}, {a2, b1}}},
    }};
    int found = -1;
    std::array<uint8_t, 8> result{};
    for (int alt = 0; alt < 2; ++alt) {
        std::array<uint8_t, 8> m = s.mate;
        for (const auto& [x, y] : alternatives[alt]) {
            m[x] = static_cast<uint8_t>(y);
            m[y] = static_cast<uint8_t>(x);
        }
        if (splitting_index(m) >= 0) {
            if (found >= 0) throw Error("split_move: ambiguous reconnection");
            found = alt;
            result = m;
        }
    }
    if (found < 0)
        throw PreconditionError("split_move: arcs " + std::to_string(arc_a) + "," +
                                std::to_string(arc_b) + " are not adjacent in " + s.to_string());
    return all_splittings()[splitting_index(result)];
}

bool one_split_move_apart(const Splitting& s, const Splitting& t) {
    if (s.mate == t.mate) return false;
    const auto sa = s.arcs(), ta = t.arcs();
    std::vector<int> diff_s;
    for (int i = 0; i < 4; ++i)
        if (std::find(ta.begin(), ta.end(), sa[i]) == ta.end()) diff_s.push_back(i);
    if (diff_s.size() != 2) return false;
    if (!arcs_adjacent(s, diff_s[0], diff_s[1])) return false;
    // Same four endpoints on both sides means t is the unique reconnection.
    std::vector<int> pts_s = {sa[diff_s[0]].first, sa[diff_s[0]].second, sa[diff_s[1]].first,
                              sa[diff_s[1]].second};
    std::sort(pts_s.begin(), pts_s.end());
    std::vector<int> pts_t;
    for (int i = 0; i < 4; ++i)
        if (std::find(sa.begin(), sa.end(), ta[i]) == sa.end()) {
            pts_t.push_back(ta[i].first);
            pts_t.push_back(ta[i].second);
        }
    std::sort(pts_t.begin(), pts_t.end());
    return pts_s == pts_t;
}

// ---------------------------------------------------------------------------
// SkeinTable

int SkeinTable::max_exponent(QuadType t) const {
    int best = INT_MIN;
    for (int i = 0; i < 14; ++i)
        if (!coeff(t, i).is_zero()) best = std::max(best, coeff(t, i).max_exponent());
    if (best == INT_MIN) throw PreconditionError("empty skein relation");
    return best;
}

int SkeinTable::min_exponent(QuadType t) const {
    int best = INT_MAX;
    for (int i = 0; i < 14; ++i)
        if (!coeff(t, i).is_zero()) best = std::min(best, coeff(t, i).min_exponent());
    if (best == INT_MAX) throw PreconditionError("empty skein relation");
    return best;
}

int SkeinTable::level_count(QuadType t) const {
    return (max_exponent(t) - min_exponent(t)) / 2 + 1;
}

int SkeinTable::exponent_of_level(QuadType t, int level) const {
    return max_exponent(t) - 2 * (level - 1);
}

bool SkeinTable::at_level(QuadType t, int splitting, int level) const {
    const LaurentPoly& c = coeff(t, splitting);
    return !c.is_zero() && c.coefficient(exponent_of_level(t, level)) != 0;
}

std::vector<int> SkeinTable::splittings_at_level(QuadType t, int level) const {
    std::vector<int> out;
    for (int i = 0; i < 14; ++i)
        if (at_level(t, i, level)) out.push_back(i);
    return out;
}

int SkeinTable::level_weight(QuadType t, int level) const {
    int w = 0;
    const int e = exponent_of_level(t, level);
    for (int i = 0; i < 14; ++i)
        if (!coeff(t, i).is_zero()) w += static_cast<int>(coeff(t, i).coefficient(e));
    return w;
}

std::string SkeinTable::to_json() const {
    nlohmann::ordered_json out;
    for (int ti = 0; ti < kNumQuadTypes; ++ti) {
        const QuadType t = static_cast<QuadType>(ti);
        nlohmann::ordered_json rel;
        for (int i = 0; i < 14; ++i) {
            const LaurentPoly& c = coeff(t, i);
            if (c.is_zero()) continue;
            const Splitting& s = all_splittings()[i];
            nlohmann::ordered_json term;
            term["splitting"] = s.to_string();
            term["kind"] = s.kind == SplitKind::Parallel ? "parallel"
                           : s.kind == SplitKind::U      ? "U"
                                                         : "mixed";
            term["coefficient"] = c.to_string();
            nlohmann::ordered_json levels = nlohmann::ordered_json::array();
            for (int level = 1; level <= level_count(t); ++level)
                if (at_level(t, i, level)) levels.push_back(level);
            term["levels"] = levels;
            rel.push_back(term);
        }
        out[quad_type_label(t)] = rel;
    }
    return out.dump(2);
}

std::string LevelAdjacencyReport::summary() const {
    std::ostringstream s;
    s << (passed() ? "level adjacency: ok" : "level adjacency: FAILED");
    s << " (" << violations.size() << " violations, " << exceptions.size()
      << " documented exceptions)\n";
    auto describe = [&](const Gap& g) {
        s << "  type " << quad_type_label(g.type) << " level " << g.level << " splitting "
          << all_splittings()[g.splitting].to_string()
          << (g.downward ? " has no level-above neighbour" : " has no level-below neighbour")
          << '\n';
    };
    for (const Gap& g : violations) describe(g);
    for (const Gap& g : exceptions) {
        s << "  [exception] ";
        describe(g);
    }
    return s.str();
}

} // namespace quadcross

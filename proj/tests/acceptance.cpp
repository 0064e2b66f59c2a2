// Acceptance suite: exercises every advertised guarantee end to end and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include "quadcross/bounds.hpp"
#include "quadcross/bracket.hpp"
#include "quadcross/catalog.hpp"
#include "quadcross/constructions.hpp"
#include "quadcross/errors.hpp"
#include "quadcross/moves.hpp"
#include "quadcross/random_diagrams.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace quadcross;
using Clock = std::chrono::steady_clock;

namespace {

constexpr uint64_t kCorpusSeed = 20240601;

int failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.1fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << name << " [" << timing
              << "]" << (detail.empty() ? "" : "  -- " + detail) << std::endl;
    if (!ok) ++failures;
}

struct Failure : std::runtime_error {
    explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

std::string catalog_path() {
    if (const char* env = std::getenv("QCROSS_CATALOG")) return env;
    for (const char* p : {"data/knots10.txt", "../data/knots10.txt", "../../data/knots10.txt"}) {
        std::ifstream probe(p);
        if (probe.good()) return p;
    }
    throw Failure("catalog file not found; set QCROSS_CATALOG");
}

const std::vector<Diagram>& corpus() {
    static const std::vector<Diagram> c = random_quad_corpus(200, {1, 2, 3}, kCorpusSeed);
    return c;
}

} // namespace

int main() {
    const SkeinTable& table = skein_table();

    criterion(1, "skein oracle equivalence on 200 random quadruple diagrams", [&] {
        int checked = 0;
        for (const Diagram& d : corpus()) {
            if (quad_bracket(d, table) != kauffman_bracket(d.resolve()))
                throw Failure("mismatch on " + d.to_code());
            ++checked;
        }
        return std::to_string(checked) + " diagrams exact";
    });

    criterion(2, "derived skein table structure", [&] {
        require(all_splittings().size() == 14, "census size");
        int parallel = 0, u = 0, mixed = 0;
        for (const auto& s : all_splittings()) {
            if (s.kind == SplitKind::Parallel) ++parallel;
            if (s.kind == SplitKind::U) ++u;
            if (s.kind == SplitKind::Mixed) ++mixed;
        }
        require(parallel == 4 && u == 2 && mixed == 8, "splitting classification");

        const int w1234[] = {2, 5, 5, 3, 1};
        const int w1432[] = {1, 3, 5, 5, 2};
        require(table.max_exponent(QuadType::q1234) == 2 &&
                    table.min_exponent(QuadType::q1234) == -6,
                "1234 exponent range");
        require(table.max_exponent(QuadType::q1432) == 6 &&
                    table.min_exponent(QuadType::q1432) == -2,
                "1432 exponent range");
        for (int level = 1; level <= 5; ++level) {
            require(table.level_weight(QuadType::q1234, level) == w1234[level - 1],
                    "1234 level weights");
            require(table.level_weight(QuadType::q1432, level) == w1432[level - 1],
                    "1432 level weights");
        }
        for (const QuadType t : {QuadType::q1234, QuadType::q1243, QuadType::q1324}) {
            const QuadType m = quad_type_mirror(t);
            for (const Splitting& s : all_splittings()) {
                std::array<uint8_t, 8> reflected{};
                for (int i = 0; i < 8; ++i) reflected[(8 - i) % 8] = (8 - s.mate[i]) % 8;
                const int ri = splitting_index(reflected);
                require(table.coeff(m, ri) == table.coeff(t, s.index).invert_variable(),
                        "mirror pairing coefficients");
            }
        }
        return std::string("14 splittings 4/2/8; weights 2/5/5/3/1 and 1/3/5/5/2; mirrors ok");
    });

    criterion(3, "level adjacency with the documented parallel exceptions", [&] {
        const LevelAdjacencyReport r = verify_level_adjacency(table);
        require(r.passed(), r.summary());
        for (const auto& gap : r.exceptions) {
            require(gap.type == QuadType::q1243 || gap.type == QuadType::q1342,
                    "unexpected exception type");
            require(all_splittings()[gap.splitting].kind == SplitKind::Parallel,
                    "exception is not the parallel split");
        }
        return "0 violations, " + std::to_string(r.exceptions.size()) +
               " documented parallel exceptions";
    });

    criterion(4, "extremal inequality and exponent bounds on the corpus", [&] {
        for (const Diagram& d : corpus()) {
            const int q = d.num_order4();
            const ExtremeStates es = extreme_states(d, table);
            require(es.s_max.circles + es.s_min.circles <= 4 * q + 2,
                    "|s_max|+|s_min| > 4q+2 on " + d.to_code());
            const ExponentBounds eb = exponent_bounds(d, table);
            const LaurentPoly b = quad_bracket(d, table);
            if (!b.is_zero()) {
                require(b.max_exponent() <= eb.upper, "max exponent above bound");
                require(b.min_exponent() >= eb.lower, "min exponent below bound");
                require(b.span() <= 16 * q, "span above 16q");
            }
            require(eb.upper - eb.lower <= 16 * q, "bound width above 16q");
        }
        return "200 diagrams within bounds; span <= 16q throughout";
    });

    criterion(5, "alternating span law on the catalog", [&] {
        const auto catalog = load_catalog(catalog_path());
        int checked = 0;
        for (const auto& e : catalog) {
            if (!e.alternating) continue;
            const Diagram d = e.diagram();
            if (d.is_unknot_loop()) continue;
            require(kauffman_bracket(d).span() == 4 * d.num_crossings(),
                    "span != 4c for " + e.name);
            ++checked;
        }
        require(checked > 0, "no alternating entries");
        return std::to_string(checked) + " reduced alternating entries at span = 4c";
    });

    criterion(6, "census table reproduction", [&] {
        const auto catalog = load_catalog(catalog_path());
        const TableReport report = reproduce_table(catalog, 2);
        require(report.mismatched == 0, "mismatched entries present");

        std::set<std::string> present, determined;
        for (const auto& row : report.rows) {
            present.insert(row.name);
            if (row.status == TableStatus::Determined) determined.insert(row.name);
        }
        const std::vector<std::string> required = {
            "3_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4", "7_5",
            "8_3", "8_4", "8_9"};
        for (const auto& name : required) {
            require(present.count(name), "required entry missing: " + name);
            require(determined.count(name), "required entry not determined: " + name);
        }
        const std::set<std::string> nine_exceptions = {"9_26", "9_31", "9_32",
                                                       "9_33", "9_34", "9_40"};
        int nine_checked = 0;
        for (const auto& e : catalog) {
            if (e.name.rfind("9_", 0) != 0 || !e.alternating) continue;
            if (nine_exceptions.count(e.name)) continue;
            require(determined.count(e.name), "9-crossing entry not determined: " + e.name);
            ++nine_checked;
        }
        // 10-crossing alternating entries determine exactly when a cost-3
        // decomposition exists.
        int ten_checked = 0;
        for (const auto& e : catalog) {
            if (e.name.rfind("10_", 0) != 0 || !e.alternating) continue;
            const SetDecomposition dec = set_decompose(e.diagram());
            if (dec.cost() == 3) {
                require(determined.count(e.name),
                        "cost-3 entry not determined: " + e.name);
                ++ten_checked;
            }
        }
        return std::to_string(report.rows.size()) + " entries, " +
               std::to_string(report.determined) + " determined, 0 mismatches (" +
               std::to_string(nine_checked) + " nine-crossing, " + std::to_string(ten_checked) +
               " ten-crossing determinations)";
    });

    criterion(7, "even covering circles and folds across the catalog", [&] {
        const auto catalog = load_catalog(catalog_path());
        int folded = 0, exact_span = 0, spot = 0;
        std::vector<std::pair<int, std::string>> larger;
        for (const auto& e : catalog) {
            const Diagram d = e.diagram();
            if (d.is_unknot_loop() || !d.all_order2() || d.num_crossings() < 2 ||
                !d.is_reduced())
                continue;
            const int c = d.num_crossings();
            const CoveringCircle circle = find_even_covering_circle(d);
            require(covering_circle_valid(d, circle), "invalid circle for " + e.name);
            Diagram work = quad_fold(d, circle);
            require(work.num_order4() == circle.length() - 1, "fold quad count " + e.name);
            require(work.num_order2() == c - circle.length(), "fold rest count " + e.name);
            while (work.num_order2() > 0) {
                int target = 0;
                while (work.crossing(target).order != 2) ++target;
                work = convert_crossing(work, target);
            }
            require(work.num_order4() == c - 1, "fold+convert count for " + e.name);
            ++folded;

            const Diagram folded_only = quad_fold(d, circle);
            const int resolved_size =
                6 * folded_only.num_order4() + folded_only.num_order2();
            if (resolved_size <= 14) {
                require(kauffman_bracket(folded_only.resolve()).span() ==
                            kauffman_bracket(d).span(),
                        "fold span changed for " + e.name);
                ++exact_span;
            } else {
                larger.push_back({resolved_size, e.name});
            }
        }
        std::sort(larger.begin(), larger.end());
        for (size_t i = 0; i < larger.size() && i < 3; ++i) {
            const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& e) {
                return e.name == larger[i].second;
            });
            const Diagram d = it->diagram();
            const CoveringCircle circle = find_even_covering_circle(d);
            const Diagram f = quad_fold(d, circle);
            require(kauffman_bracket(f.resolve()).span() == kauffman_bracket(d).span(),
                    "spot-check fold span changed for " + it->name);
            ++spot;
        }
        require(folded > 0, "no diagrams folded");
        return std::to_string(folded) + " folds at c-1 crossings; " +
               std::to_string(exact_span) + " exact span checks, " + std::to_string(spot) +
               " spot checks";
    });

    criterion(8, "two-braid and rational families", [&] {
        for (int n = 2; n <= 12; ++n) {
            const Diagram d = twist_chain(n);
            const int expected = (n + 3) / 4;
            const SetDecomposition dec = set_decompose(d);
            require(dec.cost() == expected,
                    "2-braid n=" + std::to_string(n) + " cost " + std::to_string(dec.cost()));
            require(lb_span(kauffman_bracket(d).span()) == expected,
                    "2-braid n=" + std::to_string(n) + " lower bound");
        }
        for (int a = 1; a <= 8; ++a) {
            const Diagram d = two_bridge({3, a});
            const int expected = (3 + a + 3) / 4;
            const SetDecomposition dec = set_decompose(d);
            require(dec.cost() == expected,
                    "rational 3-" + std::to_string(a) + " cost " + std::to_string(dec.cost()));
            require(lb_alternating(3 + a) == expected,
                    "rational 3-" + std::to_string(a) + " lower bound");
            require(lb_span(kauffman_bracket(d).span()) == expected,
                    "rational 3-" + std::to_string(a) + " span bound");
        }
        return "q(K_n) = ceil(n/4) for n=2..12; q(J_a) = ceil((3+a)/4) for a=1..8";
    });

    criterion(9, "q = 1 enumeration", [&] {
        const auto classes = enumerate_quad_diagrams(1, 2);
        const LaurentPoly trefoil = normalized_jones(twist_chain(3));
        const LaurentPoly f8 = normalized_jones(two_bridge({2, 2}));
        bool has_unknot = false, has_trefoil = false, has_f8 = false;
        size_t diagrams = 0;
        for (const auto& cls : classes) {
            diagrams += cls.diagrams.size();
            if (cls.jones == LaurentPoly::one()) has_unknot = true;
            if (cls.jones == trefoil || cls.jones == trefoil.invert_variable())
                has_trefoil = true;
            if (cls.jones == f8) has_f8 = true;
        }
        require(has_unknot, "unknot invariant missing");
        require(has_trefoil, "trefoil invariant missing");
        require(!has_f8, "figure-eight invariant must not appear at q=1");
        return std::to_string(diagrams) + " diagrams in " + std::to_string(classes.size()) +
               " invariant classes; trefoil yes, figure-eight no";
    });

    criterion(10, "CLI determinism across runs and job counts", [&] {
        const char* cli = std::getenv("QCROSS_CLI");
        require(cli != nullptr, "QCROSS_CLI not set");
        const std::string cat = catalog_path();
        auto run = [&](const std::string& args, const std::string& outfile) {
            const std::string cmd = std::string(cli) + " " + args + " > " + outfile + " 2>&1";
            const int rc = std::system(cmd.c_str());
            require(rc == 0, "command failed: " + cmd);
            std::ifstream in(outfile, std::ios::binary);
            std::stringstream buf;
            buf << in.rdbuf();
            return buf.str();
        };
        const std::string tref = "\"X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]\"";
        require(run("bracket --pd " + tref + " --format json", "acc10_a.txt") ==
                    run("bracket --pd " + tref + " --format json", "acc10_b.txt"),
                "bracket output differs across runs");
        require(run("skein-table --format json", "acc10_c.txt") ==
                    run("skein-table --format json", "acc10_d.txt"),
                "skein-table output differs across runs");
        require(run("table --catalog " + cat + " --format json --jobs 1", "acc10_e.txt") ==
                    run("table --catalog " + cat + " --format json --jobs 4", "acc10_f.txt"),
                "table output differs across job counts");
        require(run("verify --seed 5 --count 9 --jobs 1", "acc10_g.txt") ==
                    run("verify --seed 5 --count 9 --jobs 3", "acc10_h.txt"),
                "verify output differs across job counts");
        for (const char* f : {"acc10_a.txt", "acc10_b.txt", "acc10_c.txt", "acc10_d.txt",
                              "acc10_e.txt", "acc10_f.txt", "acc10_g.txt", "acc10_h.txt"})
            std::remove(f);
        return std::string("bracket, skein-table, table and verify byte-identical");
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}

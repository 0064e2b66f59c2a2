#include "quadcross/catalog.hpp"

#include "quadcross/bracket.hpp"
#include "quadcross/constructions.hpp"
#include "quadcross/errors.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>

using namespace quadcross;

namespace {

std::string catalog_path() {
    if (const char* env = std::getenv("QCROSS_CATALOG")) return env;
    return "data/knots10.txt";
}

bool catalog_available() {
    std::ifstream probe(catalog_path());
    return probe.good();
}

} // namespace

TEST_CASE("catalog parsing validates names and flags") {
    const std::string path = "test_catalog_tmp.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "3_1 | X[1,4,2,3] X[3,6,4,5] X[5,2,6,1] | 1 | alt | torus:2/3,chain\n";
        out << "0_1 | unknot | 0 | alt |\n";
    }
    const auto entries = load_catalog(path);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "3_1");
    CHECK(entries[0].expected_q == 1);
    CHECK(entries[0].alternating);
    CHECK(entries[0].torus == std::pair<int, int>{2, 3});
    CHECK(entries[0].notes == std::vector<std::string>{"chain"});
    CHECK(entries[1].expected_q == 0);
    std::remove(path.c_str());
}

TEST_CASE("catalog parsing rejects wrong crossing counts") {
    const std::string path = "test_catalog_bad.txt";
    {
        std::ofstream out(path);
        out << "4_1 | X[1,4,2,3] X[3,6,4,5] X[5,2,6,1] | 2 | alt |\n";
    }
    CHECK_THROWS_AS(load_catalog(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("identification matches diagrams against the catalog") {
    if (!catalog_available()) {
        MESSAGE("catalog data file not found; skipping");
        return;
    }
    const auto catalog = load_catalog(catalog_path());
    REQUIRE(!catalog.empty());

    // A quadruple-crossing diagram of the trefoil: fold the standard one.
    const Diagram trefoil = twist_chain(3);
    auto names = identify(trefoil, catalog);
    CHECK(std::find(names.begin(), names.end(), "3_1") != names.end());

    // The kinked unknot.
    const Diagram kink = twist_chain(1);
    names = identify(kink, catalog);
    CHECK(std::find(names.begin(), names.end(), "0_1") != names.end());
}

TEST_CASE("every catalog diagram identifies itself") {
    if (!catalog_available()) {
        MESSAGE("catalog data file not found; skipping");
        return;
    }
    const auto catalog = load_catalog(catalog_path());
    for (const auto& e : catalog) {
        if (e.diagram().num_crossings() > 9) continue; // keep the test quick
        const auto names = identify(e.diagram(), catalog);
        CHECK(std::find(names.begin(), names.end(), e.name) != names.end());
    }
}

TEST_CASE("alternating catalog entries satisfy span = 4c") {
    if (!catalog_available()) {
        MESSAGE("catalog data file not found; skipping");
        return;
    }
    for (const auto& e : load_catalog(catalog_path())) {
        if (!e.alternating || e.diagram().is_unknot_loop()) continue;
        const Diagram d = e.diagram();
        const int c = d.num_crossings();
        CHECK(kauffman_bracket(d).span() == 4 * c);
        // The two lower-bound rules coincide exactly when span = 4c.
        CHECK(lb_alternating(c) == lb_span(4 * c));
    }
}

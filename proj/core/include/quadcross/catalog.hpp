#pragma once

#include "quadcross/bounds.hpp"
#include "quadcross/diagram.hpp"
#include "quadcross/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadcross {

/// One census entry. File format, one entry per line:
///   name | diagram-code | expectedQ-or-? | alt-flag [| tag,tag,...]
/// Tags: "torus:r,s" attaches torus parameters; anything else is a free-form
/// provenance note for the expected value.
struct CatalogEntry {
    std::string name;
    std::string code;
    std::optional<int> expected_q;
    bool alternating = false;
    std::vector<std::string> notes;
    std::optional<std::pair<int, int>> torus;

    Diagram diagram() const; // parsed and validated on demand
};

/// Parse and validate a catalog file. Every diagram code must parse, the
/// crossing count must match the name's leading number, and the alternating
/// flag must match the diagram. Errors carry line numbers.
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// Names of catalog entries whose normalized bracket matches the diagram's,
/// up to mirror image. The input is resolved first if it has quadruple
/// crossings. Multiple candidates are possible.
std::vector<std::string> identify(const Diagram& d, const std::vector<CatalogEntry>& catalog,
                                  int jobs = 1);

enum class TableStatus { Determined, Bounded, Mismatch };

struct TableReport {
    struct Row {
        std::string name;
        std::optional<int> expected;
        std::optional<int> lower;
        std::optional<int> upper;
        TableStatus status;
        std::string detail;
    };
    std::vector<Row> rows;
    int determined = 0;
    int bounded = 0;
    int mismatched = 0;

    std::string to_text() const;
    std::string to_json() const;
};

/// Run the full bound machinery on every entry and compare with the expected
/// q values: DETERMINED when the bounds meet at the expected value, BOUNDED
/// when the expected value (if known) lies inside the bound interval, and
/// MISMATCH when the bounds exclude the expected value.
TableReport reproduce_table(const std::vector<CatalogEntry>& catalog, int jobs = 1);

} // namespace quadcross

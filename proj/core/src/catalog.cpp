#include "quadcross/catalog.hpp"

#include "quadcross/bracket.hpp"
#include "quadcross/errors.hpp"
#include "quadcross/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace quadcross {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

int leading_number(const std::string& name) {
    size_t i = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    if (i == 0) return -1;
    return std::stoi(name.substr(0, i));
}

} // namespace

Diagram CatalogEntry::diagram() const {
    Diagram d = Diagram::parse(code);
    d.set_name(name);
    return d;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::vector<CatalogEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto fields = split(text, '|');
        const std::string where = path + ":" + std::to_string(lineno);
        if (fields.size() < 4) throw ParseError(where + ": expected at least 4 '|' fields");
        CatalogEntry e;
        e.name = fields[0];
        e.code = fields[1];
        if (fields[2] != "?") {
            try {
                e.expected_q = std::stoi(fields[2]);
            } catch (...) {
                throw ParseError(where + ": bad expected q '" + fields[2] + "'");
            }
        }
        if (fields[3] == "alt")
            e.alternating = true;
        else if (fields[3] == "nonalt")
            e.alternating = false;
        else
            throw ParseError(where + ": alt flag must be 'alt' or 'nonalt'");
        if (fields.size() > 4 && !fields[4].empty()) {
            for (const std::string& tag : split(fields[4], ',')) {
                if (tag.rfind("torus:", 0) == 0) {
                    const auto parts = split(tag.substr(6), '/');
                    if (parts.size() != 2)
                        throw ParseError(where + ": torus tag needs torus:r/s");
                    e.torus = {std::stoi(parts[0]), std::stoi(parts[1])};
                } else {
                    e.notes.push_back(tag);
                }
            }
        }
        // Validate against the name and flags.
        Diagram d;
        try {
            d = e.diagram();
        } catch (const Error& err) {
            throw ParseError(where + ": " + err.what());
        }
        const int expect_crossings = leading_number(e.name);
        if (expect_crossings >= 0 && d.num_crossings() != expect_crossings)
            throw ParseError(where + ": crossing count " + std::to_string(d.num_crossings()) +
                             " does not match name '" + e.name + "'");
        if (d.all_order2() && d.is_alternating() != e.alternating)
            throw ParseError(where + ": alternating flag disagrees with the diagram");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<std::string> identify(const Diagram& d, const std::vector<CatalogEntry>& catalog,
                                  int jobs) {
    Diagram classical = d.all_order2() ? d : d.resolve();
    const LaurentPoly jones = normalized_jones(classical, {}, jobs);
    const LaurentPoly mirror_jones = jones.invert_variable();
    std::vector<std::string> out;
    for (const auto& e : catalog) {
        const LaurentPoly ref = normalized_jones(e.diagram().all_order2()
                                                     ? e.diagram()
                                                     : e.diagram().resolve(),
                                                 {}, jobs);
        if (ref == jones || ref == mirror_jones) out.push_back(e.name);
    }
    return out;
}

TableReport reproduce_table(const std::vector<CatalogEntry>& catalog, int jobs) {
    TableReport report;
    report.rows.resize(catalog.size());
    parallel_chunks(catalog.size(), jobs, [&](int, uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) {
            const CatalogEntry& e = catalog[i];
            TableReport::Row row;
            row.name = e.name;
            row.expected = e.expected_q;
            BoundFlags flags;
            flags.torus = e.torus;
            const BoundsReport bounds = combine(e.diagram(), flags);
            row.lower = bounds.best_lower;
            row.upper = bounds.best_upper;
            if (e.expected_q) {
                const int exp = *e.expected_q;
                const bool below_ok = !bounds.best_lower || *bounds.best_lower <= exp;
                const bool above_ok = !bounds.best_upper || *bounds.best_upper >= exp;
                if (!below_ok || !above_ok) {
                    row.status = TableStatus::Mismatch;
                    row.detail = "bounds exclude expected value";
                } else if (bounds.determined && *bounds.q_value == exp) {
                    row.status = TableStatus::Determined;
                } else {
                    row.status = TableStatus::Bounded;
                }
            } else {
                row.status = TableStatus::Bounded;
                if (bounds.determined)
                    row.detail = "determined " + std::to_string(*bounds.q_value) +
                                 " (no published value)";
            }
            report.rows[i] = std::move(row);
        }
    });
    for (const auto& row : report.rows) {
        switch (row.status) {
            case TableStatus::Determined: ++report.determined; break;
            case TableStatus::Bounded: ++report.bounded; break;
            case TableStatus::Mismatch: ++report.mismatched; break;
        }
    }
    return report;
}

std::string TableReport::to_text() const {
    std::ostringstream s;
    s << std::left << std::setw(8) << "knot" << std::setw(10) << "expected" << std::setw(7)
      << "lower" << std::setw(7) << "upper" << std::setw(12) << "status"
      << "detail\n";
    for (const auto& row : rows) {
        s << std::left << std::setw(8) << row.name << std::setw(10)
          << (row.expected ? std::to_string(*row.expected) : "?") << std::setw(7)
          << (row.lower ? std::to_string(*row.lower) : "-") << std::setw(7)
          << (row.upper ? std::to_string(*row.upper) : "-") << std::setw(12)
          << (row.status == TableStatus::Determined ? "DETERMINED"
              : row.status == TableStatus::Bounded  ? "BOUNDED"
                                                    : "MISMATCH")
          << row.detail << '\n';
    }
    s << rows.size() << " entries: " << determined << " determined, " << bounded << " bounded, "
      << mismatched << " mismatched\n";
    return s.str();
}

std::string TableReport::to_json() const {
    nlohmann::ordered_json out;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["name"] = row.name;
        if (row.expected) j["expected"] = *row.expected;
        if (row.lower) j["lower"] = *row.lower;
        if (row.upper) j["upper"] = *row.upper;
        j["status"] = row.status == TableStatus::Determined ? "DETERMINED"
                      : row.status == TableStatus::Bounded  ? "BOUNDED"
                                                            : "MISMATCH";
        if (!row.detail.empty()) j["detail"] = row.detail;
        arr.push_back(j);
    }
    out["entries"] = arr;
    out["determined"] = determined;
    out["bounded"] = bounded;
    out["mismatched"] = mismatched;
    return out.dump(2);
}

} // namespace quadcross

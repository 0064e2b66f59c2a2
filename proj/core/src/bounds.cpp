#include "quadcross/bounds.hpp"

#include "quadcross/bracket.hpp"
#include "quadcross/errors.hpp"
#include "quadcross/moves.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace quadcross {

namespace {
int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }
} // namespace

int lb_resolution(int crossing_number) {
    if (crossing_number < 0) throw PreconditionError("negative crossing number");
    return ceil_div(crossing_number, 6);
}

int lb_span(int span) {
    if (span < 0) throw PreconditionError("negative span");
    return ceil_div(span, 16);
}

int lb_alternating(int crossing_number) {
    if (crossing_number < 0) throw PreconditionError("negative crossing number");
    return ceil_div(crossing_number, 4);
}

int lb_torus(int r, int s) {
    if (r < 2 || s < 2) throw PreconditionError("torus parameters must be >= 2");
    return ceil_div(r + s - 2, 4);
}

BoundsReport combine(const Diagram& d, const BoundFlags& flags) {
    BoundsReport report;
    auto add_lower = [&](int v, const std::string& rule, const std::string& witness = "") {
        report.lower.push_back({v, rule, witness});
    };
    auto add_upper = [&](int v, const std::string& rule, const std::string& witness = "") {
        report.upper.push_back({v, rule, witness});
    };

    if (d.is_unknot_loop()) {
        add_lower(0, "lower/trivial");
        add_upper(0, "upper/trivial");
    } else {
        // Span bound, from the exact state sum of this diagram.
        const LaurentPoly bracket = d.all_order2() ? kauffman_bracket(d, flags.jobs)
                                                   : quad_bracket(d, skein_table(), flags.jobs);
        add_lower(lb_span(bracket.span()), "lower/span16",
                  "span " + std::to_string(bracket.span()));

        const bool alternating =
            flags.alternating.value_or(d.all_order2() && d.is_alternating() && d.is_reduced());
        if (alternating && d.all_order2()) {
            const int c = d.num_crossings();
            add_lower(lb_alternating(c), "lower/alternating4", "c " + std::to_string(c));
            add_lower(lb_resolution(c), "lower/resolution6", "c " + std::to_string(c));
        }
        if (flags.torus) {
            const auto [r, s] = *flags.torus;
            add_lower(lb_torus(r, s), "lower/torus",
                      "T(" + std::to_string(r) + "," + std::to_string(s) + ")");
        }

        // Constructive upper bounds.
        const int q4 = d.num_order4();
        const int c2 = d.num_order2();
        add_upper(q4 + c2, "upper/direct-conversion",
                  std::to_string(q4) + " quadruple + " + std::to_string(c2) + " converted");
        if (d.all_order2() && d.num_crossings() >= 2 && d.is_reduced()) {
            try {
                const CoveringCircle circle = find_even_covering_circle(d);
                add_upper(d.num_crossings() - 1, "upper/fold-convert",
                          "even circle length " + std::to_string(circle.length()));
            } catch (const Error&) {
                // No even circle found; the fold route contributes nothing.
            }
            if (alternating) {
                const SetDecomposition dec = set_decompose(d);
                add_upper(dec.cost(), "upper/decomposition",
                          std::to_string(dec.cost()) + " parts");
            }
        }
    }

    for (const auto& e : report.lower)
        report.best_lower = std::max(report.best_lower.value_or(0), e.value);
    for (const auto& e : report.upper)
        report.best_upper = report.best_upper ? std::min(*report.best_upper, e.value) : e.value;
    if (report.best_lower && report.best_upper && *report.best_lower == *report.best_upper) {
        report.determined = true;
        report.q_value = *report.best_lower;
    }
    return report;
}

std::string BoundsReport::to_json() const {
    nlohmann::ordered_json out;
    auto entries = [](const std::vector<Entry>& list) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : list) {
            nlohmann::ordered_json j;
            j["value"] = e.value;
            j["rule"] = e.rule;
            if (!e.witness.empty()) j["witness"] = e.witness;
            arr.push_back(j);
        }
        return arr;
    };
    out["lower"] = entries(lower);
    out["upper"] = entries(upper);
    if (best_lower) out["best_lower"] = *best_lower;
    if (best_upper) out["best_upper"] = *best_upper;
    out["determined"] = determined;
    if (q_value) out["q"] = *q_value;
    return out.dump(2);
}

std::string BoundsReport::to_text() const {
    std::ostringstream s;
    for (const auto& e : lower)
        s << "lower " << e.value << "  [" << e.rule << (e.witness.empty() ? "" : ": " + e.witness)
          << "]\n";
    for (const auto& e : upper)
        s << "upper " << e.value << "  [" << e.rule << (e.witness.empty() ? "" : ": " + e.witness)
          << "]\n";
    if (best_lower && best_upper) {
        s << "q in [" << *best_lower << ", " << *best_upper << "]";
        if (determined) s << "  determined q = " << *q_value;
        s << '\n';
    }
    return s.str();
}

} // namespace quadcross

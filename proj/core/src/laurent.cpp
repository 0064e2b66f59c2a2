#include "quadcross/laurent.hpp"

#include "quadcross/errors.hpp"

#include <cctype>
#include <sstream>

namespace quadcross {

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

LaurentPoly LaurentPoly::loop_factor() {
    LaurentPoly p;
    p.terms_.emplace(2, -1);
    p.terms_.emplace(-2, -1);
    return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw PreconditionError("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw PreconditionError("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::span() const {
    if (terms_.empty()) return 0;
    return max_exponent() - min_exponent();
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                out << " - ";
                c = -c;
            } else {
                out << " + ";
            }
        }
        const bool unit = (c == 1);
        if (e == 0) {
            out << c;
        } else {
            if (!unit) out << c;
            out << "A";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
};

BigInt parse_integer(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits.push_back(c.s[c.i++]);
    if (digits.empty()) throw ParseError("expected integer in polynomial at offset " +
                                         std::to_string(c.i));
    return BigInt(digits);
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Cursor c{text};
    LaurentPoly out;
    c.skip_ws();
    if (c.done()) throw ParseError("empty polynomial string");
    // Special-case the canonical zero rendering.
    if (text.find_first_not_of(" \t0") == std::string::npos) return out;

    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            sign = (c.peek() == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        c.skip_ws();
        BigInt coeff = 1;
        bool saw_coeff = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_integer(c);
            saw_coeff = true;
        }
        c.skip_ws();
        int exponent = 0;
        if (c.i < c.s.size() && (c.peek() == 'A' || c.peek() == 'a')) {
            ++c.i;
            exponent = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.peek() == '^') {
                ++c.i;
                c.skip_ws();
                int esign = 1;
                if (c.i < c.s.size() && (c.peek() == '+' || c.peek() == '-')) {
                    esign = (c.peek() == '-') ? -1 : 1;
                    ++c.i;
                }
                BigInt e = parse_integer(c);
                exponent = esign * static_cast<int>(e);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected coefficient or 'A' at offset " + std::to_string(c.i));
        }
        out.add_term(exponent, sign * coeff);
        first = false;
    }
    return out;
}

} // namespace quadcross

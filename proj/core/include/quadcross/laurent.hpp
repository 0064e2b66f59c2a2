#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace quadcross {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in one variable A.
///
/// Sparse exponent->coefficient map; stored coefficients are never zero, so
/// the zero polynomial has an empty term map. Values are immutable in spirit:
/// all arithmetic returns new polynomials, which makes sharing across threads
/// safe.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exponent, BigInt coefficient);

    /// -A^2 - A^-2, the factor contributed by each extra state circle.
    static LaurentPoly loop_factor();

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    BigInt coefficient(int exponent) const;
    int min_exponent() const; // precondition: nonzero
    int max_exponent() const; // precondition: nonzero

    /// max exponent minus min exponent; 0 for the zero polynomial.
    int span() const;

    /// Substitute A -> A^-1 (exponent negation). An involution.
    LaurentPoly invert_variable() const;

    LaurentPoly pow(unsigned n) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += -rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Render as sorted terms, highest exponent first, e.g.
    /// "-A^6 - 3A^2 - 3A^-2 - A^-6". The empty sum renders as "0".
    std::string to_string() const;

    /// Inverse of to_string (accepts any whitespace-insensitive term list).
    static LaurentPoly parse(const std::string& text);

private:
    void add_term(int exponent, const BigInt& coefficient);

    std::map<int, BigInt> terms_;
};

} // namespace quadcross

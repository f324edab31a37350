#pragma once

// Exact arithmetic in the group ring Q[Z^n] (Laurent polynomials in
// z1..zn with rational coefficients) and in its field of fractions.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pochhammer {

using Rational = mpq_class;

/// Exponents of z1..zn; an element of the free Abelian group Z^n written
/// additively.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<std::int32_t> e) : e_(e) {}
    explicit ExponentVector(std::vector<std::int32_t> e) : e_(std::move(e)) {}

    std::size_t size() const noexcept { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int32_t& operator[](std::size_t i) { return e_[i]; }
    std::span<const std::int32_t> entries() const noexcept { return e_; }

    std::int64_t total_degree() const noexcept;
    bool is_zero() const noexcept;

    ExponentVector& operator+=(const ExponentVector& o);
    ExponentVector& operator-=(const ExponentVector& o);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
    ExponentVector operator-() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int32_t> e_;
};

/// Graded lexicographic order: total degree first, ties broken lexicographically.
std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b);

/// Componentwise minimum.
ExponentVector componentwise_min(const ExponentVector& a, const ExponentVector& b);

struct Term {
    ExponentVector exponents;
    Rational coeff;
};

/// Sparse Laurent polynomial. Terms are kept sorted by descending grlex
/// order with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars = 0) : n_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Rational& c);
    static LaurentPoly monomial(ExponentVector e, const Rational& c = 1);
    /// z_{i+1} (zero-based index i).
    static LaurentPoly variable(std::size_t nvars, std::size_t i);
    /// Builds from arbitrary terms; duplicates are combined, zeros dropped.
    static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Highest term in grlex order. Requires a nonzero polynomial.
    const Term& leading_term() const;
    /// Largest total degree over all terms.
    std::int64_t max_total_degree() const;
    /// Componentwise minimum exponent over all terms; the largest monomial
    /// dividing the polynomial in the polynomial ring after shifting.
    ExponentVector monomial_content() const;

    /// Multiplies by the monomial z^by.
    LaurentPoly shifted(const ExponentVector& by) const;
    LaurentPoly scaled(const Rational& c) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Quotient a/d when d divides a in the Laurent ring, nullopt otherwise.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

private:
    void canonicalize();
    void check_compatible(const LaurentPoly& o) const;

    std::size_t n_;
    std::vector<Term> terms_;
};

/// Element of Frac(Q[Z^n]). The denominator is nonzero, free of monomial
/// content and has leading coefficient 1. No multivariate gcd is taken, so
/// two equal elements may have different representatives; equality is
/// decided by cross-multiplication.
class FieldElement {
public:
    explicit FieldElement(std::size_t nvars = 0);
    FieldElement(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when `denominator` is zero.
    FieldElement(LaurentPoly numerator, LaurentPoly denominator);

    static FieldElement zero(std::size_t nvars) { return FieldElement(nvars); }
    static FieldElement one(std::size_t nvars);

    std::size_t nvars() const noexcept { return num_.nvars(); }
    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

inline bool is_zero(const FieldElement& x) noexcept { return x.is_zero(); }

// Evaluation. Negative exponents invert the coordinate, so every coordinate
// must be nonzero where it is raised to a negative power.

Rational evaluate(const LaurentPoly& x, std::span<const Rational> point);
/// Throws EvaluationPole when the denominator vanishes at `point`.
Rational evaluate(const FieldElement& x, std::span<const Rational> point);

// Text form: sums of terms like `3/2*z1^2*z2^-1`, fractions `(num)/(den)`.

std::string to_string(const LaurentPoly& x);
std::string to_string(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Parses the textual grammar (`+ - * / ^`, parentheses, integers,
/// variables z1..zn, juxtaposition as multiplication). Throws ParseError on
/// malformed input or on a variable index above `nvars`.
FieldElement parse_field_element(std::string_view text, std::size_t nvars);
/// As above with `nvars` inferred from the largest variable index present.
FieldElement parse_field_element(std::string_view text);

}  // namespace pochhammer

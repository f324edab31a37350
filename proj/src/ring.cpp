#include "pochhammer/ring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pochhammer/errors.hpp"
#include "pochhammer/modp.hpp"

namespace pochhammer {

// ---------------------------------------------------------------- exponents

std::int64_t ExponentVector::total_degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](std::int32_t v) { return v == 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
    if (o.size() != size()) throw ShapeError("exponent vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
    if (o.size() != size()) throw ShapeError("exponent vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector r(*this);
    for (auto& v : r.e_) v = -v;
    return r;
}

std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

ExponentVector componentwise_min(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

// ---------------------------------------------------------------- Laurent

namespace {

bool term_greater(const Term& a, const Term& b) {
    return grlex_compare(a.exponents, b.exponents) == std::strong_ordering::greater;
}

// Merges two sorted term lists; `sign` is applied to the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i == a.size()) {
            out.push_back(b[j++]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
            continue;
        }
        auto c = grlex_compare(a[i].exponents, b[j].exponents);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(b[j++]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
        } else {
            Rational s = sign < 0 ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back(Term{a[i].exponents, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

// GMP expects canonical operands; user-built rationals may not be.
Rational canonical(Rational c) {
    c.canonicalize();
    return c;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.push_back(Term{ExponentVector(nvars), canonical(c)});
    return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector e, const Rational& c) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.push_back(Term{std::move(e), canonical(c)});
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw ShapeError("variable index out of range");
    ExponentVector e(nvars);
    e[i] = 1;
    return monomial(std::move(e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    LaurentPoly p(nvars);
    for (auto& t : terms) {
        if (t.exponents.size() != nvars) throw ShapeError("term has wrong number of variables");
        t.coeff.canonicalize();
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void LaurentPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exponents == t.exponents) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (o.n_ != n_) throw ShapeError("Laurent polynomials over different numbers of variables");
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponents.is_zero());
}

const Term& LaurentPoly::leading_term() const {
    if (terms_.empty()) throw DivisionByZero("leading term of the zero polynomial");
    return terms_.front();
}

std::int64_t LaurentPoly::max_total_degree() const {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        auto td = t.exponents.total_degree();
        if (first || td > d) d = td;
        first = false;
    }
    return d;
}

ExponentVector LaurentPoly::monomial_content() const {
    if (terms_.empty()) return ExponentVector(n_);
    ExponentVector m = terms_.front().exponents;
    for (const auto& t : terms_) m = componentwise_min(m, t.exponents);
    return m;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& by) const {
    if (by.size() != n_) throw ShapeError("shift has wrong number of variables");
    LaurentPoly r(*this);
    // A shift preserves grlex order.
    for (auto& t : r.terms_) t.exponents += by;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly(n_);
    LaurentPoly r(*this);
    const Rational k = canonical(c);
    for (auto& t : r.terms_) t.coeff *= k;
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    r -= b;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_monomial()) {
        const auto& t = b.terms_.front();
        return a.shifted(t.exponents).scaled(t.coeff);
    }
    if (a.is_monomial()) {
        const auto& t = a.terms_.front();
        return b.shifted(t.exponents).scaled(t.coeff);
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            r.terms_.push_back(Term{s.exponents + t.exponents, s.coeff * t.coeff});
        }
    }
    r.canonicalize();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(n_);
    if (d.is_monomial()) {
        const auto& t = d.terms_.front();
        return shifted(-t.exponents).scaled(1 / t.coeff);
    }
    // Strip monomial content so both sides are ordinary polynomials with no
    // variable factor; then the quotient, if it exists, is an ordinary
    // polynomial and plain multivariate division under grlex terminates.
    const ExponentVector ca = monomial_content();
    const ExponentVector cd = d.monomial_content();
    LaurentPoly rem = shifted(-ca);
    const LaurentPoly div = d.shifted(-cd);
    const Term& lead = div.terms_.front();
    const Rational lead_inv = 1 / lead.coeff;

    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms_.front();
        ExponentVector m = lt.exponents - lead.exponents;
        for (std::size_t i = 0; i < n_; ++i) {
            if (m[i] < 0) return std::nullopt;
        }
        Rational c = lt.coeff * lead_inv;
        LaurentPoly step = div.shifted(m).scaled(c);
        quotient.push_back(Term{std::move(m), std::move(c)});
        rem -= step;
    }
    LaurentPoly q(n_);
    q.terms_ = std::move(quotient);
    return q.shifted(ca - cd);
}

// ---------------------------------------------------------------- fractions

FieldElement::FieldElement(std::size_t nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}

FieldElement::FieldElement(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

FieldElement::FieldElement(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.nvars() != den_.nvars()) throw ShapeError("numerator and denominator over different rings");
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    normalize();
}

FieldElement FieldElement::one(std::size_t nvars) { return FieldElement(LaurentPoly::constant(nvars, 1)); }

void FieldElement::normalize() {
    const std::size_t n = num_.nvars();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(n, 1);
        return;
    }
    const ExponentVector content = den_.monomial_content();
    if (!content.is_zero()) {
        den_ = den_.shifted(-content);
        num_ = num_.shifted(-content);
    }
    const Rational lc = den_.leading_term().coeff;
    if (lc != 1) {
        const Rational s = 1 / lc;
        den_ = den_.scaled(s);
        num_ = num_.scaled(s);
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = LaurentPoly::constant(n, 1);
        }
    }
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = one(nvars());
    FieldElement base = *this;
    while (e != 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    r.num_ = -r.num_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = LaurentPoly::constant(nvars(), 1);
        else if (!den_.is_constant()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    num_ = num_ * o.num_;
    if (!o.den_.is_constant() || !den_.is_constant()) {
        den_ = den_ * o.den_;
        normalize();
    } else if (num_.is_zero()) {
        den_ = LaurentPoly::constant(nvars(), 1);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.nvars() != b.nvars()) return false;
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

// ---------------------------------------------------------------- evaluation

Rational evaluate(const LaurentPoly& x, std::span<const Rational> point) {
    if (point.size() != x.nvars()) throw ShapeError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& t : x.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const std::int32_t e = t.exponents[i];
            if (e == 0) continue;
            if (e < 0 && point[i] == 0) throw EvaluationPole("negative power of a zero coordinate");
            mpz_class num, den;
            const std::uint32_t k = static_cast<std::uint32_t>(e < 0 ? -static_cast<std::int64_t>(e) : e);
            mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), k);
            mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), k);
            Rational p = e > 0 ? Rational(num, den) : Rational(den, num);
            p.canonicalize();
            v *= p;
        }
        total += v;
    }
    return total;
}

Rational evaluate(const FieldElement& x, std::span<const Rational> point) {
    const Rational d = evaluate(x.denominator(), point);
    if (d == 0) throw EvaluationPole("denominator vanishes at the evaluation point");
    return evaluate(x.numerator(), point) / d;
}

namespace modp {

std::uint64_t from_integer(const mpz_class& z) {
    mpz_class r;
    static const mpz_class p(std::to_string(kPrime));
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return static_cast<std::uint64_t>(std::stoull(r.get_str()));
}

std::optional<std::uint64_t> from_rational(const Rational& q) {
    if (q.get_den() == 1) {
        if (q.get_num().fits_slong_p()) {
            const long v = q.get_num().get_si();
            if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
            const std::uint64_t magnitude = 0 - static_cast<std::uint64_t>(v);
            return sub(0, magnitude % kPrime);
        }
        return from_integer(q.get_num());
    }
    const std::uint64_t d = from_integer(q.get_den());
    if (d == 0) return std::nullopt;
    return mul(from_integer(q.get_num()), inv(d));
}

std::optional<std::uint64_t> evaluate(const LaurentPoly& x, std::span<const std::uint64_t> point) {
    if (point.size() != x.nvars()) throw ShapeError("evaluation point has wrong dimension");
    std::vector<std::uint64_t> inverses(point.size(), 0);
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i] != 0) inverses[i] = inv(point[i]);
    }
    std::uint64_t total = 0;
    for (const auto& t : x.terms()) {
        auto c = from_rational(t.coeff);
        if (!c) return std::nullopt;
        std::uint64_t v = *c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const std::int32_t e = t.exponents[i];
            if (e > 0) {
                v = mul(v, pow(point[i], static_cast<std::uint64_t>(e)));
            } else if (e < 0) {
                if (point[i] == 0) return std::nullopt;
                v = mul(v, pow(inverses[i], static_cast<std::uint64_t>(-static_cast<std::int64_t>(e))));
            }
        }
        total = add(total, v);
    }
    return total;
}

std::optional<std::uint64_t> evaluate(const FieldElement& x, std::span<const std::uint64_t> point) {
    auto d = evaluate(x.denominator(), point);
    if (!d || *d == 0) return std::nullopt;
    auto n = evaluate(x.numerator(), point);
    if (!n) return std::nullopt;
    return mul(*n, inv(*d));
}

}  // namespace modp

}  // namespace pochhammer

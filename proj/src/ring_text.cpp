#include <cctype>
#include <ostream>
#include <sstream>

#include "pochhammer/errors.hpp"
#include "pochhammer/ring.hpp"

namespace pochhammer {

namespace {

void write_monomial(std::ostream& os, const ExponentVector& e) {
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        os << 'z' << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
        first = false;
    }
}

}  // namespace

std::string to_string(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : x.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(t.coeff);
        if (t.exponents.is_zero()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        write_monomial(os, t.exponents);
    }
    return os.str();
}

std::string to_string(const FieldElement& x) {
    if (x.is_polynomial()) return to_string(x.numerator());
    std::string num = to_string(x.numerator());
    if (x.numerator().num_terms() > 1) num = "(" + num + ")";
    return num + "/(" + to_string(x.denominator()) + ")";
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << to_string(x); }

namespace {

// Recursive-descent parser.
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/')? unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' int)?
//   primary := integer | 'z' index | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

    FieldElement parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        FieldElement v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

    static std::size_t max_variable(std::string_view s) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != 'z') continue;
            std::size_t j = i + 1, idx = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                idx = idx * 10 + static_cast<std::size_t>(s[j] - '0');
                ++j;
            }
            best = std::max(best, idx);
        }
        return best;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
    }

    FieldElement expr() {
        FieldElement acc(n_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        FieldElement first = term();
        acc = negate ? -first : first;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    FieldElement term() {
        FieldElement acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (peek('/')) {
                ++pos_;
                FieldElement d = unary();
                if (d.is_zero()) throw DivisionByZero("at column " + std::to_string(pos_) + ": division by zero");
                acc /= d;
            } else if (starts_factor()) {
                acc *= unary();
            } else {
                return acc;
            }
        }
    }

    FieldElement unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        return power();
    }

    std::int64_t integer_exponent() {
        skip();
        bool paren = false;
        if (peek('(')) {
            paren = true;
            ++pos_;
        }
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        skip();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer exponent");
        if (paren) {
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        }
        return neg ? -v : v;
    }

    FieldElement power() {
        FieldElement base = primary();
        if (peek('^')) {
            ++pos_;
            const std::int64_t e = integer_exponent();
            if (e < 0 && base.is_zero()) fail("negative power of zero");
            return base.pow(e);
        }
        return base;
    }

    FieldElement primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElement v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(std::string(s_.substr(start, pos_ - start)));
            return FieldElement(LaurentPoly::constant(n_, Rational(z)));
        }
        if (c == 'z') {
            ++pos_;
            const std::size_t start = pos_;
            std::size_t idx = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                idx = idx * 10 + static_cast<std::size_t>(s_[pos_] - '0');
                ++pos_;
            }
            if (pos_ == start) fail("expected a variable index after 'z'");
            if (idx == 0 || idx > n_) fail("variable z" + std::to_string(idx) + " outside z1..z" + std::to_string(n_));
            return FieldElement(LaurentPoly::variable(n_, idx - 1));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars).parse();
}

FieldElement parse_field_element(std::string_view text) {
    return Parser(text, Parser::max_variable(text)).parse();
}

}  // namespace pochhammer

#include "pochhammer/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pochhammer/errors.hpp"

namespace pochhammer {

// ---------------------------------------------------------------- Word

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(Letter{it->generator, -it->exponent});
    return Word(std::move(out));
}

Word Word::reduced() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> out(letters_);
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

Word Word::pow(int n) const {
    const Word base = n < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(n); ++i) out = out * base;
    return out;
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

// ---------------------------------------------------------------- presentations

std::string Presentation::describe() const {
    switch (kind) {
        case SpaceKind::ClosedSurface: return "closed surface of genus " + std::to_string(genus);
        case SpaceKind::PuncturedSurface:
            return "surface of genus " + std::to_string(genus) + " with " + std::to_string(punctures) + " punctures";
        case SpaceKind::Circle: return "circle";
        case SpaceKind::Wedge: return "wedge of two circles";
    }
    return "space";
}

Presentation surface_presentation(int genus, int punctures) {
    if (genus < 0 || punctures < 0) throw DomainError("genus and puncture count must be nonnegative");
    if (genus == 0 && punctures <= 1) {
        throw DomainError(punctures == 0 ? "the sphere has no twisted homology model here"
                                         : "the disc has no twisted homology model here");
    }
    Presentation p;
    p.genus = genus;
    p.punctures = punctures;
    for (int i = 1; i <= genus; ++i) {
        p.generator_names.push_back("a" + std::to_string(i));
        p.generator_names.push_back("b" + std::to_string(i));
    }
    if (punctures == 0) {
        p.kind = SpaceKind::ClosedSurface;
        Word rel;
        for (int i = 0; i < genus; ++i) rel = rel * commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
        p.relators.push_back(rel);
    } else {
        p.kind = SpaceKind::PuncturedSurface;
        for (int k = 1; k < punctures; ++k) p.generator_names.push_back("c" + std::to_string(k));
    }
    return p;
}

Presentation circle_presentation() {
    Presentation p;
    p.kind = SpaceKind::Circle;
    p.generator_names = {"x1"};
    return p;
}

Presentation wedge_presentation() {
    Presentation p;
    p.kind = SpaceKind::Wedge;
    p.generator_names = {"x1", "x2"};
    return p;
}

namespace {

class WordParser {
public:
    WordParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    Word parse() {
        Word w = sequence();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return w.reduced();
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("word column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_item_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '[' || c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
    }

    Word sequence() {
        Word w;
        while (at_item_start()) w = w * item();
        return w;
    }

    Word item() {
        Word base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            const std::size_t start = pos_;
            int n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                if (n > 100000) fail("power too large");
                ++pos_;
            }
            if (pos_ == start) fail("expected an integer power");
            return base.pow(neg ? -n : n);
        }
        return base;
    }

    Word atom() {
        skip();
        const char c = s_[pos_];
        if (c == '1') {
            ++pos_;
            return Word();
        }
        if (c == '(') {
            ++pos_;
            Word w = sequence();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = sequence();
            expect(',');
            Word v = sequence();
            expect(']');
            return commutator(u, v);
        }
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            pos_ = start;
            fail("unknown generator '" + name + "'");
        }
        return Word::generator(static_cast<int>(it - names_.begin()));
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

std::vector<std::string> handle_names(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back((i % 2 == 0 ? "a" : "b") + std::to_string(i / 2 + 1));
    return names;
}

}  // namespace

Word parse_word(std::string_view text, const Presentation& p) { return WordParser(text, p.generator_names).parse(); }

Word parse_word(std::string_view text, int num_generators) {
    const auto names = handle_names(num_generators);
    return WordParser(text, names).parse();
}

std::string to_string(const Word& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << p.generator_names.at(static_cast<std::size_t>(l.generator));
        if (l.exponent != 1) os << '^' << l.exponent;
    }
    return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("ragged integer matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("integer matrix product with incompatible shapes");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
        }
    }
    return m;
}

std::size_t IntMatrix::rank() const {
    std::vector<Rational> a(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) a[i] = Rational(static_cast<long>(data_[i]));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pr = rank;
        while (pr < rows_ && a[pr * cols_ + c] == 0) ++pr;
        if (pr == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a[pr * cols_ + j], a[rank * cols_ + j]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (a[i * cols_ + c] == 0) continue;
            const Rational f = a[i * cols_ + c] / a[rank * cols_ + c];
            for (std::size_t j = c; j < cols_; ++j) a[i * cols_ + j] -= f * a[rank * cols_ + j];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------- AlphaHom

AlphaHom::AlphaHom(const Presentation& p, IntMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.cols() != static_cast<std::size_t>(p.num_generators())) {
        throw InvalidHom("alpha has " + std::to_string(matrix_.cols()) + " columns but the presentation has " +
                         std::to_string(p.num_generators()) + " generators");
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const IntVector v = abelianize(*this, p.relators[i]);
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) {
            throw InvalidHom("alpha does not kill relator " + std::to_string(i + 1));
        }
    }
}

AlphaHom AlphaHom::hurewicz(const Presentation& p) {
    return AlphaHom(p, IntMatrix::identity(static_cast<std::size_t>(p.num_generators())));
}

AlphaHom AlphaHom::compose(const IntMatrix& inclusion, const AlphaHom& inner, const Presentation& p) {
    if (inclusion.cols() != inner.target_rank()) {
        throw InvalidInclusion("inclusion has " + std::to_string(inclusion.cols()) + " columns but alpha has rank " +
                               std::to_string(inner.target_rank()));
    }
    if (inclusion.rank() != inclusion.cols()) throw InvalidInclusion("inclusion matrix is not injective");
    return AlphaHom(p, inclusion * inner.matrix());
}

bool AlphaHom::is_trivial() const {
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
        for (std::size_t c = 0; c < matrix_.cols(); ++c) {
            if (matrix_(r, c) != 0) return false;
        }
    }
    return true;
}

LaurentPoly AlphaHom::generator_monomial(int g, int exponent) const {
    ExponentVector e(target_rank());
    for (std::size_t r = 0; r < target_rank(); ++r) {
        e[r] = static_cast<std::int32_t>(exponent * matrix_(r, static_cast<std::size_t>(g)));
    }
    return LaurentPoly::monomial(std::move(e));
}

IntVector abelianize(const AlphaHom& alpha, const Word& w) {
    IntVector v(alpha.target_rank(), 0);
    for (const auto& l : w.letters()) {
        if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= alpha.num_generators()) {
            throw ShapeError("word uses generator " + std::to_string(l.generator + 1) + " outside alpha's domain");
        }
        for (std::size_t r = 0; r < v.size(); ++r) {
            v[r] += l.exponent * alpha.matrix()(r, static_cast<std::size_t>(l.generator));
        }
    }
    return v;
}

LaurentPoly monomial_of(const AlphaHom& alpha, const Word& w) {
    const IntVector v = abelianize(alpha, w);
    ExponentVector e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e[i] = static_cast<std::int32_t>(v[i]);
    return LaurentPoly::monomial(std::move(e));
}

LaurentPoly fox_derivative_poly(const Word& w, int j, const AlphaHom& alpha) {
    const std::size_t n = alpha.target_rank();
    std::vector<Term> terms;
    ExponentVector prefix(n);
    for (const auto& l : w.letters()) {
        if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= alpha.num_generators()) {
            throw ShapeError("word uses generator " + std::to_string(l.generator + 1) + " outside alpha's domain");
        }
        const auto g = static_cast<std::size_t>(l.generator);
        if (l.exponent > 0) {
            if (l.generator == j) terms.push_back(Term{prefix, Rational(1)});
            for (std::size_t r = 0; r < n; ++r) prefix[r] += static_cast<std::int32_t>(alpha.matrix()(r, g));
        } else {
            for (std::size_t r = 0; r < n; ++r) prefix[r] -= static_cast<std::int32_t>(alpha.matrix()(r, g));
            // d(x^-1)/dx = -x^-1, taken after the prefix absorbs x^-1.
            if (l.generator == j) terms.push_back(Term{prefix, Rational(-1)});
        }
    }
    return LaurentPoly::from_terms(n, std::move(terms));
}

FieldElement fox_derivative(const Word& w, int j, const AlphaHom& alpha) {
    return FieldElement(fox_derivative_poly(w, j, alpha));
}

}  // namespace pochhammer

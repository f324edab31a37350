#pragma once

// Free-group words, surface presentations, homomorphisms to free Abelian
// groups and Fox derivatives.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pochhammer/ring.hpp"

namespace pochhammer {

struct Letter {
    int generator = 0;  // zero-based
    int exponent = 1;   // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group. Not reduced unless `reduced()` is called.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static Word generator(int g, int exponent = 1) { return Word({Letter{g, exponent}}); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Word inverse() const;
    Word reduced() const;
    Word operator*(const Word& o) const;
    Word pow(int n) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

enum class SpaceKind { ClosedSurface, PuncturedSurface, Circle, Wedge };

/// Finite presentation of pi_1 of a surface or circle complex. The
/// presentation 2-complex of a closed surface's standard presentation is the
/// surface itself; punctured surfaces, circles and wedges are free.
struct Presentation {
    SpaceKind kind = SpaceKind::Circle;
    int genus = 0;
    int punctures = 0;
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const noexcept { return static_cast<int>(generator_names.size()); }
    /// Euler characteristic of the presentation complex: 1 - m + k.
    int euler_characteristic() const noexcept {
        return 1 - num_generators() + static_cast<int>(relators.size());
    }
    std::string describe() const;
};

/// Standard presentation: closed (h = 0) has generators a1,b1,...,ag,bg and the
/// relator [a1,b1]...[ag,bg]; punctured (h > 0) is free on a1,b1,...,bg,
/// c1,...,c(h-1). Throws DomainError for g < 0, h < 0, the sphere and the disc.
Presentation surface_presentation(int genus, int punctures);
/// Circle with generator x1.
Presentation circle_presentation();
/// Wedge of two circles, generators x1 and x2.
Presentation wedge_presentation();

/// Parses whitespace-separated generator tokens with optional `^k` powers,
/// commutator brackets `[u,v]` and parenthesised groups. `1` or the empty
/// string denote the identity. The result is freely reduced.
Word parse_word(std::string_view text, const Presentation& p);
/// Uses the handle names a1,b1,a2,b2,... for m generators.
Word parse_word(std::string_view text, int num_generators);
std::string to_string(const Word& w, const Presentation& p);

using IntVector = std::vector<std::int64_t>;

/// Integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    IntVector column(std::size_t c) const;
    IntMatrix operator*(const IntMatrix& o) const;
    /// Rank over Q.
    std::size_t rank() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Homomorphism pi_1 -> Z^n, given by the images of the generators (columns).
/// Construction verifies that every relator maps to zero.
class AlphaHom {
public:
    /// Throws InvalidHom if the matrix shape is wrong or a relator survives.
    AlphaHom(const Presentation& p, IntMatrix matrix);

    /// Abelianization modulo torsion: identity on all generators. For the
    /// circle and the wedge this is the identity onto Z and Z^2.
    static AlphaHom hurewicz(const Presentation& p);
    /// Factored map inclusion * inner, inclusion: Z^n' -> Z^n.
    static AlphaHom compose(const IntMatrix& inclusion, const AlphaHom& inner, const Presentation& p);

    std::size_t target_rank() const noexcept { return matrix_.rows(); }
    std::size_t num_generators() const noexcept { return matrix_.cols(); }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    bool is_trivial() const;

    /// Image of a generator as a Laurent monomial.
    LaurentPoly generator_monomial(int g, int exponent = 1) const;

private:
    IntMatrix matrix_;
};

/// Sum of +-columns along the word.
IntVector abelianize(const AlphaHom& alpha, const Word& w);
/// alpha(w) as the Laurent monomial z^abelianize(w).
LaurentPoly monomial_of(const AlphaHom& alpha, const Word& w);

/// alpha-image of the Fox derivative dw/dx_j.
LaurentPoly fox_derivative_poly(const Word& w, int j, const AlphaHom& alpha);
FieldElement fox_derivative(const Word& w, int j, const AlphaHom& alpha);

}  // namespace pochhammer

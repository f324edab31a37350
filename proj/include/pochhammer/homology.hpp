#pragma once

// Twisted homology of presentation complexes with coefficients in the
// fraction field of Z[Z^n], pushed through a homomorphism alpha.
//
// The complex of the alpha-cover, tensored with F, is
//
//     F^k --d2--> F^m --d1--> F
//
// with d1 = (alpha(x_j) - 1)_j and (d2)_{j,i} = alpha(d r_i / d x_j). Its
// dimensions over F are the L^2-Betti numbers of the alpha-cover.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pochhammer/linalg.hpp"
#include "pochhammer/words.hpp"

namespace pochhammer {

struct TwistedComplex {
    MatrixF d1;  // 1 x m
    MatrixF d2;  // m x k
    int m = 0;
    int k = 0;
    std::size_t nvars = 0;
};

/// Degree-indexed dimensions; degrees past the end are zero, so equality
/// ignores trailing zeros.
struct BettiVector {
    std::vector<std::int64_t> dims;

    std::int64_t operator[](std::size_t i) const { return i < dims.size() ? dims[i] : 0; }
    std::int64_t euler_characteristic() const;
    friend bool operator==(const BettiVector& a, const BettiVector& b);
};

std::string to_string(const BettiVector& b);

/// Entries of a twisted 1-chain; lies in ker d1 when produced by loop_cycle.
struct CycleVector {
    std::vector<FieldElement> entries;
    MatrixF as_column(std::size_t nvars) const;
};

/// Throws InvalidHom if alpha does not match the presentation or a relator
/// survives; std::logic_error if d1 * d2 != 0.
TwistedComplex build_complex(const Presentation& p, const AlphaHom& alpha);

BettiVector twisted_betti(const TwistedComplex& c, const RankOptions& opts = {});
BettiVector twisted_betti(const Presentation& p, const AlphaHom& alpha, const RankOptions& opts = {});
/// One BettiVector per alpha, computed in parallel.
std::vector<BettiVector> twisted_betti_batch(const Presentation& p, std::span<const AlphaHom> alphas,
                                             const RankOptions& opts = {});

/// Fox-derivative image of a loop that lifts to the alpha-cover. Throws
/// NotALoopUpstairs when alpha(w) != 0.
CycleVector loop_cycle(const Word& w, const AlphaHom& alpha, const TwistedComplex& c);

/// Whether the class of z in H_1 of the complex is nonzero.
bool class_is_nonzero(const CycleVector& z, const TwistedComplex& c, const RankOptions& opts = {});

/// Whether twisted_betti(p, inclusion * inner) == twisted_betti(p, inner).
/// Throws InvalidInclusion if the inclusion is not injective.
bool reduction_check(const Presentation& p, const AlphaHom& inner, const IntMatrix& inclusion,
                     const RankOptions& opts = {});

/// dims[i] = sum over j + k = i of x[j] * y[k].
BettiVector kunneth_convolve(const BettiVector& x, const BettiVector& y);

/// L^2-Betti numbers of the rank-r vortex moduli space over a genus-g
/// surface: 2g-2 in odd degrees 1..2r-1. Throws DomainError if g < 2 or r < 1.
BettiVector vortex_betti(int genus, int rank);

/// binomial(2g-2, k) in degree k. Throws DomainError if g < 2 or k < 1.
BettiVector symk_betti(int genus, int k);

/// Exact binomial coefficient; zero when k > n. Throws DomainError on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace pochhammer

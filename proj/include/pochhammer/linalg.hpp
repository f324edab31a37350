#pragma once

// Rank of matrices over Frac(Q[Z^n]). Every twisted homology dimension in
// the library reduces to calls in this header.
//
// Two backends:
//   * rank_exact: fraction-free Bareiss elimination over Laurent
//     polynomials after clearing denominators row by row;
//   * rank_randomized: rank modulo p = 2^61 - 1 at random points of
//     (F_p^*)^n. Never exceeds the exact rank (Schwartz-Zippel).
//
// Both come in an OpenMP-parallel form and a serial reference form selected
// by `Execution`; the two must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pochhammer/ring.hpp"

namespace pochhammer {

enum class Execution { Serial, Parallel };

/// Dense row-major matrix over the fraction field.
class MatrixF {
public:
    MatrixF() = default;
    MatrixF(std::size_t rows, std::size_t cols, std::size_t nvars);
    /// Column vector.
    static MatrixF column(std::span<const FieldElement> entries, std::size_t nvars);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nvars() const noexcept { return nvars_; }

    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Sets an entry; throws ShapeError if the ring does not match.
    void set(std::size_t r, std::size_t c, FieldElement v);

    /// [this | other]; throws ShapeError on row-count mismatch.
    MatrixF hconcat(const MatrixF& other) const;
    MatrixF transposed() const;
    MatrixF operator*(const MatrixF& other) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<FieldElement> data_;
};

std::ostream& operator<<(std::ostream& os, const MatrixF& m);

/// Exact rank via Bareiss elimination. Pivot: fewest terms, then lowest total
/// degree, then first position in row-major order.
std::size_t rank_exact(const MatrixF& m, Execution exec = Execution::Parallel);

/// Max over `trials` of the rank of m evaluated at a random point mod p.
/// Deterministic for a fixed seed. Throws RandomizedRankFailure if no
/// pole-free point is found after bounded resampling, std::invalid_argument
/// if trials == 0.
std::size_t rank_randomized(const MatrixF& m, int trials, std::uint64_t seed,
                            Execution exec = Execution::Parallel);

/// Per-trial ranks behind rank_randomized.
std::vector<std::size_t> randomized_trial_ranks(const MatrixF& m, int trials, std::uint64_t seed,
                                                Execution exec = Execution::Parallel);

/// Rank of a matrix with entries in F_p (row-major), destroying the input.
std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                       Execution exec = Execution::Parallel);

enum class RankBackend { Randomized, Exact };

struct RankOptions {
    RankBackend backend = RankBackend::Randomized;
    int trials = 2;
    std::uint64_t seed = 0;
    /// Compute both backends and throw RankDisagreement if they differ.
    bool cross_check = false;
    Execution exec = Execution::Parallel;
};

/// Rank with the configured backend. The randomized backend escalates to the
/// exact one when its trials disagree.
std::size_t rank(const MatrixF& m, const RankOptions& opts = {});

/// rank([boundary | cycles]) - rank(boundary): the dimension of the span of
/// the cycle columns in the quotient by the column space of `boundary`.
std::size_t quotient_dim(const MatrixF& boundary, const MatrixF& cycles, const RankOptions& opts = {});

}  // namespace pochhammer

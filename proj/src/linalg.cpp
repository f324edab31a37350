#include "pochhammer/linalg.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "pochhammer/errors.hpp"
#include "pochhammer/modp.hpp"

namespace pochhammer {

// ---------------------------------------------------------------- MatrixF

MatrixF::MatrixF(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, FieldElement(nvars)) {}

MatrixF MatrixF::column(std::span<const FieldElement> entries, std::size_t nvars) {
    MatrixF m(entries.size(), 1, nvars);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

void MatrixF::set(std::size_t r, std::size_t c, FieldElement v) {
    if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
    if (v.nvars() != nvars_) throw ShapeError("matrix entry over a different ring");
    data_[r * cols_ + c] = std::move(v);
}

MatrixF MatrixF::hconcat(const MatrixF& other) const {
    if (other.rows_ != rows_) {
        throw ShapeError("cannot concatenate matrices with " + std::to_string(rows_) + " and " +
                         std::to_string(other.rows_) + " rows");
    }
    if (other.nvars_ != nvars_ && other.cols_ != 0 && cols_ != 0) throw ShapeError("matrices over different rings");
    MatrixF m(rows_, cols_ + other.cols_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) m.data_[r * m.cols_ + cols_ + c] = other(r, c);
    }
    return m;
}

MatrixF MatrixF::transposed() const {
    MatrixF m(cols_, rows_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.data_[c * rows_ + r] = (*this)(r, c);
    }
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& other) const {
    if (cols_ != other.rows_) throw ShapeError("matrix product with incompatible shapes");
    MatrixF m(rows_, other.cols_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < other.cols_; ++c) {
            FieldElement acc(nvars_);
            for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(r, k) * other(k, c);
            m.data_[r * m.cols_ + c] = std::move(acc);
        }
    }
    return m;
}

bool MatrixF::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const MatrixF& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r != 0) os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) os << ", ";
            os << m(r, c);
        }
    }
    return os << ']';
}

namespace {

// Collects the first exception thrown inside an OpenMP region.
class ExceptionSlot {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mu_);
            if (!ep_) ep_ = std::current_exception();
        }
    }
    void rethrow() {
        if (ep_) std::rethrow_exception(ep_);
    }

private:
    std::mutex mu_;
    std::exception_ptr ep_;
};

// ---------------------------------------------------------------- Bareiss

using PolyRow = std::vector<LaurentPoly>;

// Multiplies each row by the product of its distinct denominators, then
// divides out the row's monomial content.
std::vector<PolyRow> clear_denominators(const MatrixF& m) {
    std::vector<PolyRow> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<LaurentPoly> dens;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            if (x.is_zero() || x.denominator().is_constant()) continue;
            if (std::find(dens.begin(), dens.end(), x.denominator()) == dens.end()) dens.push_back(x.denominator());
        }
        PolyRow row;
        row.reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            LaurentPoly v = x.numerator();
            for (const auto& d : dens) {
                if (!x.is_zero() && d == x.denominator()) continue;
                v = v * d;
            }
            row.push_back(std::move(v));
        }
        bool any = false;
        ExponentVector content(m.nvars());
        for (const auto& v : row) {
            if (v.is_zero()) continue;
            content = any ? componentwise_min(content, v.monomial_content()) : v.monomial_content();
            any = true;
        }
        if (any && !content.is_zero()) {
            for (auto& v : row) v = v.shifted(-content);
        }
        rows[r] = std::move(row);
    }
    return rows;
}

using PivotKey = std::tuple<std::size_t, std::int64_t, std::size_t, std::size_t>;

bool find_pivot(const std::vector<PolyRow>& a, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    PivotKey best{};
    for (std::size_t i = k; i < a.size(); ++i) {
        for (std::size_t j = k; j < a[i].size(); ++j) {
            const auto& x = a[i][j];
            if (x.is_zero()) continue;
            PivotKey key{x.num_terms(), x.max_total_degree(), i, j};
            if (!found || key < best) {
                best = key;
                found = true;
            }
        }
    }
    if (found) {
        pr = std::get<2>(best);
        pc = std::get<3>(best);
    }
    return found;
}

// One fraction-free elimination step on row i below pivot row k.
void bareiss_row_update(std::vector<PolyRow>& a, std::size_t k, std::size_t i, const LaurentPoly& prev) {
    const LaurentPoly& pivot = a[k][k];
    const LaurentPoly aik = a[i][k];
    const std::size_t cols = a[i].size();
    for (std::size_t j = k + 1; j < cols; ++j) {
        LaurentPoly t = pivot * a[i][j];
        if (!aik.is_zero() && !a[k][j].is_zero()) t -= aik * a[k][j];
        if (t.is_zero()) {
            a[i][j] = std::move(t);
            continue;
        }
        auto q = t.divide_exact(prev);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        a[i][j] = std::move(*q);
    }
    a[i][k] = LaurentPoly(pivot.nvars());
}

std::size_t bareiss_rank(std::vector<PolyRow> a, std::size_t cols, std::size_t nvars, Execution exec) {
    const std::size_t rows = a.size();
    LaurentPoly prev = LaurentPoly::constant(nvars, 1);
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(a, k, pr, pc)) break;
        std::swap(a[k], a[pr]);
        if (pc != k) {
            for (auto& row : a) std::swap(row[k], row[pc]);
        }
        if (exec == Execution::Parallel) {
            ExceptionSlot slot;
            const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) + 1; i < last; ++i) {
                slot.run([&] { bareiss_row_update(a, k, static_cast<std::size_t>(i), prev); });
            }
            slot.rethrow();
        } else {
            for (std::size_t i = k + 1; i < rows; ++i) bareiss_row_update(a, k, i, prev);
        }
        prev = a[k][k];
    }
    return k;
}

// ---------------------------------------------------------------- mod p

std::uint64_t sample_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, modp::kPrime - 1);
    return dist(rng);
}

// Evaluates every entry at `point`; false on a pole.
bool evaluate_matrix(const MatrixF& m, std::span<const std::uint64_t> point, std::vector<std::uint64_t>& out,
                     Execution exec) {
    const std::size_t total = m.rows() * m.cols();
    out.assign(total, 0);
    bool pole = false;
    auto eval_one = [&](std::size_t idx) {
        const auto& x = m(idx / m.cols(), idx % m.cols());
        if (x.is_zero()) return;
        auto v = modp::evaluate(x, point);
        if (!v) {
            pole = true;
            return;
        }
        out[idx] = *v;
    };
    if (exec == Execution::Parallel) {
        const auto last = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 4) reduction(|| : pole)
        for (std::ptrdiff_t idx = 0; idx < last; ++idx) {
            const auto& x = m(static_cast<std::size_t>(idx) / m.cols(), static_cast<std::size_t>(idx) % m.cols());
            if (x.is_zero()) continue;
            auto v = modp::evaluate(x, point);
            if (!v) {
                pole = true;
                continue;
            }
            out[static_cast<std::size_t>(idx)] = *v;
        }
    } else {
        for (std::size_t idx = 0; idx < total; ++idx) eval_one(idx);
    }
    return !pole;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, Execution exec) {
    if (a.size() != rows * cols) throw ShapeError("mod-p matrix storage does not match its shape");
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[pr * cols + j], a[rank * cols + j]);
        }
        const std::uint64_t pivot_inv = modp::inv(a[rank * cols + c]);
        const std::size_t r0 = rank;
        auto eliminate = [&](std::size_t i) {
            const std::uint64_t f = modp::mul(a[i * cols + c], pivot_inv);
            if (f == 0) return;
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(f, a[r0 * cols + j]));
            }
        };
        if (exec == Execution::Parallel) {
            const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(r0) + 1; i < last; ++i) {
                eliminate(static_cast<std::size_t>(i));
            }
        } else {
            for (std::size_t i = r0 + 1; i < rows; ++i) eliminate(i);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const MatrixF& m, Execution exec) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_rank(clear_denominators(m), m.cols(), m.nvars(), exec);
}

std::vector<std::size_t> randomized_trial_ranks(const MatrixF& m, int trials, std::uint64_t seed, Execution exec) {
    if (trials < 1) throw std::invalid_argument("rank_randomized needs at least one trial");
    constexpr int kMaxResamples = 64;
    std::vector<std::size_t> ranks;
    ranks.reserve(static_cast<std::size_t>(trials));
    std::vector<std::uint64_t> point(m.nvars()), values;
    for (int t = 0; t < trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        bool ok = false;
        for (int attempt = 0; attempt < kMaxResamples && !ok; ++attempt) {
            for (auto& p : point) p = sample_nonzero(rng);
            ok = evaluate_matrix(m, point, values, exec);
        }
        if (!ok) {
            throw RandomizedRankFailure("every sampled point was a pole after " + std::to_string(kMaxResamples) +
                                        " attempts");
        }
        ranks.push_back(rank_mod_p(values, m.rows(), m.cols(), exec));
    }
    return ranks;
}

std::size_t rank_randomized(const MatrixF& m, int trials, std::uint64_t seed, Execution exec) {
    auto ranks = randomized_trial_ranks(m, trials, seed, exec);
    return *std::max_element(ranks.begin(), ranks.end());
}

std::size_t rank(const MatrixF& m, const RankOptions& opts) {
    if (opts.backend == RankBackend::Exact && !opts.cross_check) return rank_exact(m, opts.exec);
    std::size_t randomized = 0;
    bool escalate = false;
    {
        auto ranks = randomized_trial_ranks(m, opts.trials, opts.seed, opts.exec);
        auto [lo, hi] = std::minmax_element(ranks.begin(), ranks.end());
        randomized = *hi;
        escalate = *lo != *hi;
    }
    if (opts.cross_check) {
        const std::size_t exact = rank_exact(m, opts.exec);
        if (exact != randomized) {
            throw RankDisagreement("randomized rank " + std::to_string(randomized) + " but exact rank " +
                                   std::to_string(exact));
        }
        return exact;
    }
    if (escalate || opts.backend == RankBackend::Exact) return rank_exact(m, opts.exec);
    return randomized;
}

std::size_t quotient_dim(const MatrixF& boundary, const MatrixF& cycles, const RankOptions& opts) {
    if (boundary.rows() != cycles.rows()) {
        throw ShapeError("boundary has " + std::to_string(boundary.rows()) + " rows but cycles have " +
                         std::to_string(cycles.rows()));
    }
    return rank(boundary.hconcat(cycles), opts) - rank(boundary, opts);
}

}  // namespace pochhammer

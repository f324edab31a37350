#include "pochhammer/homology.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "pochhammer/errors.hpp"

namespace pochhammer {

std::int64_t BettiVector::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * dims[i];
    return chi;
}

bool operator==(const BettiVector& a, const BettiVector& b) {
    const std::size_t n = std::max(a.dims.size(), b.dims.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

std::string to_string(const BettiVector& b) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.dims.size(); ++i) {
        if (i != 0) os << ", ";
        os << b.dims[i];
    }
    os << ')';
    return os.str();
}

MatrixF CycleVector::as_column(std::size_t nvars) const { return MatrixF::column(entries, nvars); }

TwistedComplex build_complex(const Presentation& p, const AlphaHom& alpha) {
    if (alpha.num_generators() != static_cast<std::size_t>(p.num_generators())) {
        throw InvalidHom("alpha is defined on " + std::to_string(alpha.num_generators()) +
                         " generators but the presentation has " + std::to_string(p.num_generators()));
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const IntVector v = abelianize(alpha, p.relators[i]);
        if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) {
            throw InvalidHom("alpha does not kill relator " + std::to_string(i + 1));
        }
    }
    const std::size_t n = alpha.target_rank();
    const int m = p.num_generators();
    const int k = static_cast<int>(p.relators.size());

    TwistedComplex c;
    c.m = m;
    c.k = k;
    c.nvars = n;
    c.d1 = MatrixF(1, static_cast<std::size_t>(m), n);
    c.d2 = MatrixF(static_cast<std::size_t>(m), static_cast<std::size_t>(k), n);
    const LaurentPoly one = LaurentPoly::constant(n, 1);
    for (int j = 0; j < m; ++j) {
        c.d1.set(0, static_cast<std::size_t>(j), FieldElement(alpha.generator_monomial(j) - one));
        for (int i = 0; i < k; ++i) {
            c.d2.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i),
                     fox_derivative(p.relators[static_cast<std::size_t>(i)], j, alpha));
        }
    }
    if (k > 0 && !(c.d1 * c.d2).is_zero()) throw std::logic_error("twisted complex violates d1 * d2 = 0");
    return c;
}

BettiVector twisted_betti(const TwistedComplex& c, const RankOptions& opts) {
    const auto r1 = static_cast<std::int64_t>(rank(c.d1, opts));
    const auto r2 = c.k > 0 ? static_cast<std::int64_t>(rank(c.d2, opts)) : std::int64_t{0};
    BettiVector b;
    b.dims = {1 - r1, c.m - r1 - r2};
    if (c.k > 0) b.dims.push_back(c.k - r2);
    return b;
}

BettiVector twisted_betti(const Presentation& p, const AlphaHom& alpha, const RankOptions& opts) {
    return twisted_betti(build_complex(p, alpha), opts);
}

std::vector<BettiVector> twisted_betti_batch(const Presentation& p, std::span<const AlphaHom> alphas,
                                             const RankOptions& opts) {
    std::vector<BettiVector> out(alphas.size());
    // Nested parallelism inside rank calls is left serial.
    RankOptions inner = opts;
    inner.exec = Execution::Serial;
    std::exception_ptr error;
    std::mutex mu;
    const auto last = static_cast<std::ptrdiff_t>(alphas.size());
#pragma omp parallel for schedule(dynamic) if (opts.exec == Execution::Parallel)
    for (std::ptrdiff_t i = 0; i < last; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = twisted_betti(p, alphas[static_cast<std::size_t>(i)], inner);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

CycleVector loop_cycle(const Word& w, const AlphaHom& alpha, const TwistedComplex& c) {
    const IntVector v = abelianize(alpha, w);
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) {
        throw NotALoopUpstairs("the loop does not lift: alpha(w) is nonzero");
    }
    CycleVector z;
    z.entries.reserve(static_cast<std::size_t>(c.m));
    for (int j = 0; j < c.m; ++j) z.entries.push_back(fox_derivative(w, j, alpha));
    if (!(c.d1 * z.as_column(c.nvars)).is_zero()) throw std::logic_error("loop cycle is not in the kernel of d1");
    return z;
}

bool class_is_nonzero(const CycleVector& z, const TwistedComplex& c, const RankOptions& opts) {
    if (z.entries.size() != static_cast<std::size_t>(c.m)) throw ShapeError("cycle has the wrong length");
    return quotient_dim(c.d2, z.as_column(c.nvars), opts) == 1;
}

bool reduction_check(const Presentation& p, const AlphaHom& inner, const IntMatrix& inclusion,
                     const RankOptions& opts) {
    const AlphaHom outer = AlphaHom::compose(inclusion, inner, p);
    return twisted_betti(p, outer, opts) == twisted_betti(p, inner, opts);
}

BettiVector kunneth_convolve(const BettiVector& x, const BettiVector& y) {
    BettiVector out;
    if (x.dims.empty() || y.dims.empty()) return out;
    out.dims.assign(x.dims.size() + y.dims.size() - 1, 0);
    for (std::size_t j = 0; j < x.dims.size(); ++j) {
        for (std::size_t k = 0; k < y.dims.size(); ++k) out.dims[j + k] += x.dims[j] * y.dims[k];
    }
    return out;
}

BettiVector vortex_betti(int genus, int rank) {
    if (genus < 2) throw DomainError("vortex Betti numbers need genus >= 2");
    if (rank < 1) throw DomainError("vortex Betti numbers need rank >= 1");
    BettiVector projective;
    projective.dims.assign(static_cast<std::size_t>(2 * rank - 1), 0);
    for (int i = 0; i <= 2 * rank - 2; i += 2) projective.dims[static_cast<std::size_t>(i)] = 1;
    const BettiVector surface{{0, 2 * genus - 2, 0}};
    return kunneth_convolve(projective, surface);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > static_cast<__int128>(INT64_MAX)) throw DomainError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

BettiVector symk_betti(int genus, int k) {
    if (genus < 2) throw DomainError("symmetric-product Betti numbers need genus >= 2");
    if (k < 1) throw DomainError("symmetric-product Betti numbers need k >= 1");
    BettiVector b;
    b.dims.assign(static_cast<std::size_t>(2 * k + 1), 0);
    b.dims[static_cast<std::size_t>(k)] = binomial(2 * genus - 2, k);
    return b;
}

}  // namespace pochhammer

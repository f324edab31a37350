#pragma once

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to evaluate matrices
// over Frac(Q[Z^n]) at random points.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>

#include "pochhammer/ring.hpp"

namespace pochhammer::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) noexcept {
    std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + hi;
    while (r >= kPrime) r -= kPrime;
    return r;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = a + b;
    return r >= kPrime ? r - kPrime : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept {
    return a >= b ? a - b : a + kPrime - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
    return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e) noexcept {
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

/// Inverse of a nonzero residue (Fermat).
inline std::uint64_t inv(std::uint64_t a) noexcept { return pow(a, kPrime - 2); }

/// Residue of an integer.
std::uint64_t from_integer(const mpz_class& z);
/// Residue of a rational; nullopt when p divides the denominator.
std::optional<std::uint64_t> from_rational(const Rational& q);

/// Value of a Laurent polynomial at a point of (F_p^*)^n; nullopt if a
/// coefficient denominator vanishes mod p.
std::optional<std::uint64_t> evaluate(const LaurentPoly& x, std::span<const std::uint64_t> point);
/// Value of a fraction; nullopt when the denominator vanishes (a pole).
std::optional<std::uint64_t> evaluate(const FieldElement& x, std::span<const std::uint64_t> point);

}  // namespace pochhammer::modp

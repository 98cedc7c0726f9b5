#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "pzx/common.hpp"

namespace pzx {

/// Exact element of Z[sqrt2, i] with a power-of-two denominator:
///
///   value = (a + b*sqrt2 + i*(c + d*sqrt2)) * 2^(-exp)
///
/// Canonical form keeps exp >= 0 and, when exp > 0, at least one odd
/// coefficient; equality of canonical forms is value equality.
struct RingQuad {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int32_t exp = 0;

    static RingQuad zero() { return {}; }
    static RingQuad one() { return make(1, 0, 0, 0, 0); }
    static RingQuad i() { return make(0, 0, 1, 0, 0); }
    static RingQuad sqrt2() { return make(0, 1, 0, 0, 0); }
    static RingQuad inv_sqrt2() { return make(0, 1, 0, 0, 1); }
    static RingQuad from_int(std::int64_t n) { return make(n, 0, 0, 0, 0); }

    /// Canonicalising constructor helper.
    static RingQuad make(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d, std::int32_t exp);

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend bool operator==(const RingQuad&, const RingQuad&) = default;
};

RingQuad ring_add(const RingQuad& x, const RingQuad& y);
RingQuad ring_sub(const RingQuad& x, const RingQuad& y);
RingQuad ring_mul(const RingQuad& x, const RingQuad& y);
RingQuad ring_neg(const RingQuad& x);
/// Complex conjugate.
RingQuad ring_conj(const RingQuad& x);
/// sqrt(2)^n, n may be negative.
RingQuad ring_sqrt2_pow(int n);

/// e^{i k pi/4} for k in [0, 7].
const RingQuad& phase_to_ring(int k);

std::complex<double> to_complex(const RingQuad& x);
std::string to_string(const RingQuad& x);

} // namespace pzx

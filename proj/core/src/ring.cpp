#include "pzx/ring.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace pzx {

namespace {

using I128 = __int128;

std::int64_t narrow(I128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw OverflowError("ring coefficient out of 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

RingQuad canonical(I128 a, I128 b, I128 c, I128 d, std::int64_t exp) {
    if (exp < 0) {
        // Fold a negative denominator exponent back into the coefficients.
        while (exp < 0) {
            a *= 2; b *= 2; c *= 2; d *= 2;
            ++exp;
            if (a > I128(1) << 100 || a < -(I128(1) << 100)) {
                throw OverflowError("ring exponent normalisation overflow");
            }
        }
    }
    if (a == 0 && b == 0 && c == 0 && d == 0) {
        return {};
    }
    while (exp > 0 && (a % 2 | b % 2 | c % 2 | d % 2) == 0) {
        a /= 2; b /= 2; c /= 2; d /= 2;
        --exp;
    }
    if (exp > INT32_MAX) {
        throw OverflowError("ring exponent out of range");
    }
    RingQuad r;
    r.a = narrow(a);
    r.b = narrow(b);
    r.c = narrow(c);
    r.d = narrow(d);
    r.exp = static_cast<std::int32_t>(exp);
    return r;
}

} // namespace

RingQuad RingQuad::make(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t d, std::int32_t exp) {
    return canonical(a, b, c, d, exp);
}

RingQuad ring_add(const RingQuad& x, const RingQuad& y) {
    const std::int32_t exp = std::max(x.exp, y.exp);
    const int sx = exp - x.exp;
    const int sy = exp - y.exp;
    if (sx > 62 || sy > 62) {
        throw OverflowError("ring exponent spread too large for exact addition");
    }
    const I128 fx = I128(1) << sx;
    const I128 fy = I128(1) << sy;
    return canonical(I128(x.a) * fx + I128(y.a) * fy,
                     I128(x.b) * fx + I128(y.b) * fy,
                     I128(x.c) * fx + I128(y.c) * fy,
                     I128(x.d) * fx + I128(y.d) * fy, exp);
}

RingQuad ring_sub(const RingQuad& x, const RingQuad& y) {
    return ring_add(x, ring_neg(y));
}

RingQuad ring_mul(const RingQuad& x, const RingQuad& y) {
    // Real and imaginary pairs (A, B) multiply like A + B*sqrt2; the complex
    // product distributes over them.
    const I128 xa = x.a, xb = x.b, xc = x.c, xd = x.d;
    const I128 ya = y.a, yb = y.b, yc = y.c, yd = y.d;
    const I128 a = xa * ya + 2 * xb * yb - xc * yc - 2 * xd * yd;
    const I128 b = xa * yb + xb * ya - xc * yd - xd * yc;
    const I128 c = xa * yc + 2 * xb * yd + xc * ya + 2 * xd * yb;
    const I128 d = xa * yd + xb * yc + xc * yb + xd * ya;
    return canonical(a, b, c, d, std::int64_t(x.exp) + y.exp);
}

RingQuad ring_neg(const RingQuad& x) {
    RingQuad r = x;
    r.a = -r.a; r.b = -r.b; r.c = -r.c; r.d = -r.d;
    return r;
}

RingQuad ring_conj(const RingQuad& x) {
    RingQuad r = x;
    r.c = -r.c; r.d = -r.d;
    return r;
}

RingQuad ring_sqrt2_pow(int n) {
    if (n >= 0) {
        // sqrt2^n = 2^(n/2) * sqrt2^(n%2)
        const int half = n / 2;
        if (half > 62) throw OverflowError("sqrt2 power too large");
        const std::int64_t p = std::int64_t(1) << half;
        return (n % 2) ? RingQuad::make(0, p, 0, 0, 0) : RingQuad::make(p, 0, 0, 0, 0);
    }
    // sqrt2^-1 = sqrt2 / 2
    const int m = -n;
    const int half = m / 2;
    return (m % 2) ? RingQuad::make(0, 1, 0, 0, half + 1) : RingQuad::make(1, 0, 0, 0, half);
}

const RingQuad& phase_to_ring(int k) {
    static const std::array<RingQuad, 8> table = {
        RingQuad::make(1, 0, 0, 0, 0),    // 1
        RingQuad::make(0, 1, 0, 1, 1),    // (sqrt2 + i sqrt2)/2
        RingQuad::make(0, 0, 1, 0, 0),    // i
        RingQuad::make(0, -1, 0, 1, 1),   // (-sqrt2 + i sqrt2)/2
        RingQuad::make(-1, 0, 0, 0, 0),   // -1
        RingQuad::make(0, -1, 0, -1, 1),  // (-sqrt2 - i sqrt2)/2
        RingQuad::make(0, 0, -1, 0, 0),   // -i
        RingQuad::make(0, 1, 0, -1, 1),   // (sqrt2 - i sqrt2)/2
    };
    if (k < 0 || k > 7) {
        throw DomainError("phase index out of [0,7]");
    }
    return table[static_cast<std::size_t>(k)];
}

std::complex<double> to_complex(const RingQuad& x) {
    static const double s2 = std::sqrt(2.0);
    const double scale = std::ldexp(1.0, -x.exp);
    return {(double(x.a) + double(x.b) * s2) * scale,
            (double(x.c) + double(x.d) * s2) * scale};
}

std::string to_string(const RingQuad& x) {
    std::ostringstream os;
    os << "(" << x.a << " + " << x.b << "*sqrt2 + i*(" << x.c << " + " << x.d
       << "*sqrt2))/2^" << x.exp;
    return os.str();
}

} // namespace pzx

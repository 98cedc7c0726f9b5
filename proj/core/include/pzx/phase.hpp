#pragma once

#include <bit>
#include <cstdint>

#include "pzx/common.hpp"

namespace pzx {

/// Total assignment of boolean values to a set of parameters.
///
/// Bit i of `bits` is the value of parameter i; bit i of `defined` says
/// whether parameter i is covered at all.
struct ParamAssignment {
    std::uint64_t bits = 0;
    std::uint64_t defined = 0;

    static ParamAssignment total(std::uint64_t bits, unsigned n_params) {
        ParamAssignment a;
        a.bits = n_params >= 64 ? bits : (bits & ((std::uint64_t{1} << n_params) - 1));
        a.defined = n_params >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_params) - 1);
        return a;
    }

    bool covers(std::uint64_t mask) const { return (mask & ~defined) == 0; }
    bool bit(unsigned i) const { return (bits >> i) & 1; }

    friend bool operator==(const ParamAssignment&, const ParamAssignment&) = default;
};

/// A polarised phase: k*pi/4 plus pi times the XOR of the parameters in
/// `mask`. The parameter coefficient is structurally fixed at pi, so the
/// image of the phase is {k*pi/4, k*pi/4 + pi} whenever mask is non-empty.
struct ParamPhase {
    std::uint8_t k = 0;       // constant part, units of pi/4, mod 8
    std::uint64_t mask = 0;   // XOR-set of parameter indices

    constexpr ParamPhase() = default;
    constexpr ParamPhase(int k_, std::uint64_t mask_ = 0)
        : k(static_cast<std::uint8_t>(((k_ % 8) + 8) % 8)), mask(mask_) {}

    constexpr bool parametric() const { return mask != 0; }
    constexpr bool is_zero() const { return k == 0 && mask == 0; }
    /// Constant part is an odd multiple of pi/4.
    constexpr bool t_like() const { return (k & 1) != 0; }
    /// Image contained in {0, pi}.
    constexpr bool pauli_image() const { return k == 0 || k == 4; }
    /// Image contained in {pi/2, 3pi/2}.
    constexpr bool proper_clifford_image() const { return k == 2 || k == 6; }

    friend bool operator==(const ParamPhase&, const ParamPhase&) = default;
};

/// Sum of two phases modulo 2*pi: constants add mod 8, masks XOR.
constexpr ParamPhase phase_add(ParamPhase a, ParamPhase b) {
    ParamPhase r;
    r.k = static_cast<std::uint8_t>((a.k + b.k) & 7);
    r.mask = a.mask ^ b.mask;
    return r;
}

/// Negation modulo 2*pi. -pi == pi, so the mask is unchanged.
constexpr ParamPhase phase_neg(ParamPhase a) {
    ParamPhase r;
    r.k = static_cast<std::uint8_t>((8 - a.k) & 7);
    r.mask = a.mask;
    return r;
}

/// Resolve a phase under a total assignment; result in units of pi/4.
inline int instantiate_phase(ParamPhase p, const ParamAssignment& a) {
    if (!a.covers(p.mask)) {
        throw MissingParameter("assignment does not cover every parameter of the phase");
    }
    const int parity = std::popcount(p.mask & a.bits) & 1;
    return (p.k + 4 * parity) & 7;
}

} // namespace pzx

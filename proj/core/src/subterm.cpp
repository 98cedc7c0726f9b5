#include "pzx/subterm.hpp"

namespace pzx {

Subterm Subterm::half_pi(ParamPhase psi) {
    if (!psi.proper_clifford_image()) {
        throw DomainError("half-pi subterm needs Image(psi) in {pi/2, 3pi/2}");
    }
    return {SubtermKind::HalfPi, psi, {}};
}

Subterm Subterm::pi_pair(ParamPhase psi, ParamPhase phi) {
    // Keep the {0,pi}-image phase in the phi slot; the product is symmetric.
    if (phi.pauli_image()) {
        return {SubtermKind::PiPair, psi, phi};
    }
    if (psi.pauli_image()) {
        return {SubtermKind::PiPair, phi, psi};
    }
    throw DomainError("pi-pair subterm needs a phase with image in {0, pi}");
}

RingQuad phase_pair_value(int ka, int kb) {
    RingQuad v = ring_add(RingQuad::one(), phase_to_ring(ka & 7));
    v = ring_add(v, phase_to_ring(kb & 7));
    return ring_sub(v, phase_to_ring((ka + kb) & 7));
}

RingQuad subterm_value(const Subterm& s, const ParamAssignment& a) {
    switch (s.kind) {
    case SubtermKind::Node:
        return ring_add(RingQuad::one(), phase_to_ring(instantiate_phase(s.psi, a)));
    case SubtermKind::PhasePair:
        return phase_pair_value(instantiate_phase(s.psi, a), instantiate_phase(s.phi, a));
    case SubtermKind::HalfPi: {
        const int k = instantiate_phase(s.psi, a);
        if (k == 2) return phase_to_ring(1);
        if (k == 6) return phase_to_ring(7);
        throw DomainError("half-pi subterm instantiated outside {pi/2, 3pi/2}");
    }
    case SubtermKind::PiPair: {
        const int kphi = instantiate_phase(s.phi, a);
        if (kphi == 0) return RingQuad::one();
        if (kphi == 4) return phase_to_ring(instantiate_phase(s.psi, a));
        throw DomainError("pi-pair selector instantiated outside {0, pi}");
    }
    }
    throw DomainError("unknown subterm kind");
}

NormalizedSubterm normalize_subterm(const Subterm& s) {
    static const RingQuad kHalf = RingQuad::make(1, 0, 0, 0, 1);
    switch (s.kind) {
    case SubtermKind::PhasePair:
        if (!s.psi.parametric() && !s.phi.parametric()) {
            return {phase_pair_value(s.psi.k, s.phi.k), std::nullopt};
        }
        return {RingQuad::one(), s};
    case SubtermKind::Node: {
        if (!s.psi.parametric()) {
            return {ring_add(RingQuad::one(), phase_to_ring(s.psi.k)), std::nullopt};
        }
        // (1 + e^{i psi}) = (1-i)/2 * pair(psi + pi/2, pi/2)
        const RingQuad c = RingQuad::make(1, 0, -1, 0, 1);
        return {c, Subterm::phase_pair(phase_add(s.psi, ParamPhase(2)), ParamPhase(2))};
    }
    case SubtermKind::PiPair: {
        if (!s.phi.pauli_image()) {
            throw DomainError("pi-pair subterm invariant violated");
        }
        const bool const_phi = !s.phi.parametric();
        const bool const_psi = !s.psi.parametric();
        if (const_phi && const_psi) {
            return {s.phi.k == 4 ? phase_to_ring(s.psi.k) : RingQuad::one(), std::nullopt};
        }
        return {kHalf, Subterm::phase_pair(s.psi, s.phi)};
    }
    case SubtermKind::HalfPi: {
        if (!s.psi.proper_clifford_image()) {
            throw DomainError("half-pi subterm invariant violated");
        }
        // value = e^{+-i pi/4} * e^{i (-psi.k) pi/4 * P(mask)}; the change of
        // variable psi' = -psi + pi/2 has image in {0, pi}.
        const RingQuad c = phase_to_ring(s.psi.k == 2 ? 1 : 7);
        if (!s.psi.parametric()) {
            return {c, std::nullopt};
        }
        const ParamPhase selector(0, s.psi.mask);
        const ParamPhase base(8 - s.psi.k, 0);
        const NormalizedSubterm inner =
            normalize_subterm(Subterm::pi_pair(base, selector));
        return {ring_mul(c, inner.constant), inner.pair};
    }
    }
    throw DomainError("unknown subterm kind");
}

} // namespace pzx

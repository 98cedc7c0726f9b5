#pragma once

#include <optional>

#include "pzx/phase.hpp"
#include "pzx/ring.hpp"

namespace pzx {

/// The four scalar subterm shapes rewrites can emit.
///
///   Node       (1 + e^{i psi})
///   PhasePair  (1 + e^{i psi} + e^{i phi} - e^{i(psi+phi)})
///   HalfPi     the local-complementation factor with Image(psi) in
///              {pi/2, 3pi/2}; instantiates to e^{i pi/4} at pi/2 and
///              e^{-i pi/4} at 3pi/2
///   PiPair     e^{i psi phi / pi}, where at least one of the two phases has
///              image contained in {0, pi}
enum class SubtermKind : std::uint8_t { Node, PhasePair, HalfPi, PiPair };

struct Subterm {
    SubtermKind kind = SubtermKind::Node;
    ParamPhase psi;
    ParamPhase phi;  // unused for Node / HalfPi

    static Subterm node(ParamPhase psi) { return {SubtermKind::Node, psi, {}}; }
    static Subterm phase_pair(ParamPhase psi, ParamPhase phi) {
        return {SubtermKind::PhasePair, psi, phi};
    }
    static Subterm half_pi(ParamPhase psi);
    static Subterm pi_pair(ParamPhase psi, ParamPhase phi);

    std::uint64_t param_mask() const { return psi.mask | phi.mask; }

    friend bool operator==(const Subterm&, const Subterm&) = default;
};

/// 1 + e^{i a} + e^{i b} - e^{i(a+b)}, exact, with a and b in units of pi/4.
RingQuad phase_pair_value(int ka, int kb);

/// Exact value of a subterm under a total assignment.
RingQuad subterm_value(const Subterm& s, const ParamAssignment& a);

/// Result of rewriting a subterm into the canonical phase-pair shape:
/// subterm value == constant * (pair value) at every assignment, where a
/// missing pair means the subterm was assignment-independent.
struct NormalizedSubterm {
    RingQuad constant;
    std::optional<Subterm> pair;
};

NormalizedSubterm normalize_subterm(const Subterm& s);

} // namespace pzx

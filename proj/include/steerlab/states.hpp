#pragma once

#include "steerlab/qmat.hpp"

namespace steerlab::states {

/// Parameters of the isotropic-noise antisymmetric-projector family.
/// alpha must keep the resulting operator PSD; the admissible interval is
/// [-(d-1)/(d+1), 1].
struct WernerParams {
    int d;
    double alpha;

    static WernerParams checked(int d, double alpha);
};

struct WernerThresholds {
    double entanglement; // entangled strictly above this
    double povm_lhs;     // unsteerable for POVMs at or below this
};

/// Rank-1 projector onto (|01> - |10>)/sqrt(2), dims (2,2).
BipartiteState singlet();

/// alpha * 2 P_anti / (d(d-1)) + (1-alpha) * I / d^2, dims (d,d).
BipartiteState werner(int d, double alpha);

WernerThresholds werner_thresholds(int d);

/// Append a flag dimension on `side` carrying d copies of the opposite
/// marginal: (1/(d+1)) [rho (embedded) + d * P_perp (x) marginal]. The flag
/// is the last basis index of the extended side.
BipartiteState flag_extend(const BipartiteState& rho, Side side);

/// The 9x9 two-qutrit state mixing a qubit-subspace singlet with flagged
/// noise terms, dims (3,3). Requires 0 < q <= 1.
BipartiteState rho_g(double q);

/// alpha * singlet + (1-alpha) * I_2/2 (x) |2><2| with dims (2,3) when the
/// steered side is B; subsystems swapped for A. Requires 0 <= alpha <= 1.
BipartiteState erasure(double alpha, Side steered_side);

/// Two-qubit state (1/2)[singlet + (3/5)|1><1| (x) I/2 + (2/5) I/2 (x) |0><0|].
BipartiteState rho_1w();

/// flag_extend(rho_1w(), A): dims (3,2).
BipartiteState rho_1w_prime();

/// flag_extend applied twice (A then B) to werner(d, (d-1)/d); dims (d+1, d+1).
BipartiteState rho_hs(int d);

/// (1/(1+2/d)) [singlet + (2/d) I_4/4]; equals werner(2, d/(d+2)).
BipartiteState hidden_steering_target(int d);

/// True iff the partial transpose over B has minimum eigenvalue >= -1e-9.
bool is_ppt(const BipartiteState& rho);

enum class PptVerdict {
    NptEntangled,           // negative partial transpose
    PptSeparable,           // PPT and dims <= (2,3) up to ordering: conclusive
    PptInconclusive,        // PPT in higher dimension
};

PptVerdict ppt_verdict(const BipartiteState& rho);
const char* to_string(PptVerdict v);

} // namespace steerlab::states

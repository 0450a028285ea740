#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steerlab/qmat.hpp"

namespace steerlab::meas {

/// General quantum measurement: PSD elements summing to the identity.
struct Povm {
    int dim;
    std::vector<HermOp> elements;

    Povm(int dim, std::vector<HermOp> elements);
    int num_outcomes() const { return static_cast<int>(elements.size()); }
};

/// Ordered list of POVMs on the same space; houses the setting index.
struct MeasurementFamily {
    std::vector<Povm> settings;

    explicit MeasurementFamily(std::vector<Povm> settings);
    int dim() const { return settings.front().dim; }
    int num_settings() const { return static_cast<int>(settings.size()); }
    /// Largest outcome count over settings; shorter POVMs are padded with
    /// zero operators when a rectangular grid is needed.
    int max_outcomes() const;
    /// Element (x, a); a beyond the POVM's outcome count yields the zero
    /// operator of the right dimension.
    Mat element(int x, int a) const;
};

/// Conditional-state grid sigma_{a|x} held by the steered party. Members
/// are subnormalized and the grid is rectangular (zero-padded outcomes).
struct Assemblage {
    int n_x;
    int n_a;
    int dim_b;
    std::vector<std::vector<HermOp>> members; // [x][a]

    Assemblage(int n_x, int n_a, int dim_b, std::vector<std::vector<HermOp>> members);
    const HermOp& at(int x, int a) const { return members[x][a]; }
    /// Sum over outcomes of any setting (equal across settings by the
    /// no-signaling invariant).
    HermOp marginal() const;
};

/// Joint conditional distribution p(a,b|x,y), normalized and no-signaling.
struct Behavior {
    int n_x, n_y, n_a, n_b;
    std::vector<double> table; // index ((x*nY + y)*nA + a)*nB + b

    Behavior(int n_x, int n_y, int n_a, int n_b, std::vector<double> table);
    double at(int a, int b, int x, int y) const {
        return table[(static_cast<size_t>(x) * n_y + y) * n_a * n_b + static_cast<size_t>(a) * n_b + b];
    }
};

/// sigma_{a|x} = tr_A[(M_{a|x} (x) I) rho] for a family measured on A.
Assemblage assemblage(const BipartiteState& rho, const MeasurementFamily& family);

/// p(ab|xy) = tr[rho (M_{a|x} (x) M_{b|y})].
Behavior behavior(const BipartiteState& rho, const MeasurementFamily& fam_a,
                  const MeasurementFamily& fam_b);

/// Three projective qubit settings: Z, X, Y eigenbases.
MeasurementFamily pauli3();

/// Complete set of mutually unbiased bases; d in {2, 3} only.
MeasurementFamily mub(int d);

/// Single 3-outcome qubit POVM: (2/3)|v_k><v_k| at 120 degrees on the
/// Bloch equator.
MeasurementFamily trine_povm();

/// n Haar-random rank-1 projective bases in dimension d, deterministic
/// given the seed.
MeasurementFamily sphere_sample(int n_settings, std::uint64_t seed, int dim = 2);

/// Parse a family description: "pauli3", "mub2", "mub3", "trine",
/// "sphere:<n>" or "sphere:<n>:<dim>" (seeded).
MeasurementFamily family_from_spec(const std::string& spec, std::uint64_t seed);

/// Measurement pairs attaining the Tsirelson value on the singlet:
/// Alice {Z, X}, Bob {-(Z+X)/sqrt2, (X-Z)/sqrt2} eigenbases.
std::pair<MeasurementFamily, MeasurementFamily> chsh_optimal_settings();

/// CHSH combination E00 + E01 + E10 - E11 from a 2x2x2x2 behavior.
double chsh_value(const Behavior& p);

} // namespace steerlab::meas

#include "steerlab/meas.hpp"

#include <cmath>
#include <numbers>

#include "steerlab/random.hpp"

namespace steerlab::meas {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat pauli(char which) {
    Mat m(2, 2);
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Projective pair (I +- n.sigma)/2 for a unit Bloch vector.
Povm bloch_basis(double nx, double ny, double nz) {
    Mat n_sigma = nx * pauli('x') + ny * pauli('y') + nz * pauli('z');
    std::vector<HermOp> elems;
    elems.emplace_back(0.5 * (identity(2) + n_sigma));
    elems.emplace_back(0.5 * (identity(2) - n_sigma));
    return Povm(2, std::move(elems));
}

Povm basis_povm(const Mat& unitary_columns) {
    const int d = static_cast<int>(unitary_columns.rows());
    std::vector<HermOp> elems;
    elems.reserve(d);
    for (int k = 0; k < d; ++k) elems.emplace_back(projector(unitary_columns.col(k)));
    return Povm(d, std::move(elems));
}

} // namespace

Povm::Povm(int dim_, std::vector<HermOp> elements_) : dim(dim_), elements(std::move(elements_)) {
    if (elements.empty()) throw ValidationError("Povm: needs at least one element");
    Mat sum = Mat::Zero(dim, dim);
    for (const auto& e : elements) {
        if (e.dim() != dim) throw DimensionError("Povm: element dimension mismatch");
        if (min_eigenvalue(e) < -tol::psd) throw ValidationError("Povm: element is not PSD");
        sum += e.mat();
    }
    if ((sum - identity(dim)).cwiseAbs().maxCoeff() > tol::povm_sum) {
        throw ValidationError("Povm: elements do not sum to the identity");
    }
}

MeasurementFamily::MeasurementFamily(std::vector<Povm> settings_) : settings(std::move(settings_)) {
    if (settings.empty()) throw ValidationError("MeasurementFamily: needs at least one setting");
    for (const auto& p : settings) {
        if (p.dim != settings.front().dim) {
            throw DimensionError("MeasurementFamily: settings must share one dimension");
        }
    }
}

int MeasurementFamily::max_outcomes() const {
    int m = 0;
    for (const auto& p : settings) m = std::max(m, p.num_outcomes());
    return m;
}

Mat MeasurementFamily::element(int x, int a) const {
    const Povm& p = settings.at(x);
    if (a < p.num_outcomes()) return p.elements[a].mat();
    return Mat::Zero(p.dim, p.dim);
}

Assemblage::Assemblage(int n_x_, int n_a_, int dim_b_, std::vector<std::vector<HermOp>> members_)
    : n_x(n_x_), n_a(n_a_), dim_b(dim_b_), members(std::move(members_)) {
    if (n_x <= 0 || n_a <= 0 || dim_b <= 0 || static_cast<int>(members.size()) != n_x) {
        throw DimensionError("Assemblage: grid shape mismatch");
    }
    Mat first_marginal;
    for (int x = 0; x < n_x; ++x) {
        if (static_cast<int>(members[x].size()) != n_a) {
            throw DimensionError("Assemblage: grid shape mismatch at setting " + std::to_string(x));
        }
        Mat sum = Mat::Zero(dim_b, dim_b);
        double trace_sum = 0.0;
        for (int a = 0; a < n_a; ++a) {
            const HermOp& s = members[x][a];
            if (s.dim() != dim_b) throw DimensionError("Assemblage: member dimension mismatch");
            if (min_eigenvalue(s) < -tol::psd) {
                throw ValidationError("Assemblage: member (" + std::to_string(x) + "," +
                                      std::to_string(a) + ") is not PSD");
            }
            sum += s.mat();
            trace_sum += s.trace();
        }
        if (std::abs(trace_sum - 1.0) > tol::assemblage_trace) {
            throw ValidationError("Assemblage: outcome traces at setting " + std::to_string(x) +
                                  " sum to " + std::to_string(trace_sum) + ", not 1");
        }
        if (x == 0) {
            first_marginal = sum;
        } else if ((sum - first_marginal).cwiseAbs().maxCoeff() > tol::no_signaling) {
            throw ValidationError("Assemblage: no-signaling violated at setting " + std::to_string(x));
        }
    }
}

HermOp Assemblage::marginal() const {
    Mat sum = Mat::Zero(dim_b, dim_b);
    for (int a = 0; a < n_a; ++a) sum += members[0][a].mat();
    return HermOp(sum);
}

Behavior::Behavior(int n_x_, int n_y_, int n_a_, int n_b_, std::vector<double> table_)
    : n_x(n_x_), n_y(n_y_), n_a(n_a_), n_b(n_b_), table(std::move(table_)) {
    if (table.size() != static_cast<size_t>(n_x) * n_y * n_a * n_b) {
        throw DimensionError("Behavior: table size mismatch");
    }
    for (double v : table) {
        if (v < -1e-10) throw ValidationError("Behavior: negative probability entry");
    }
    for (int x = 0; x < n_x; ++x) {
        for (int y = 0; y < n_y; ++y) {
            double total = 0.0;
            for (int a = 0; a < n_a; ++a)
                for (int b = 0; b < n_b; ++b) total += at(a, b, x, y);
            if (std::abs(total - 1.0) > tol::no_signaling) {
                throw ValidationError("Behavior: setting pair (" + std::to_string(x) + "," +
                                      std::to_string(y) + ") sums to " + std::to_string(total));
            }
        }
    }
    // Alice's marginal must not depend on y, Bob's must not depend on x.
    for (int x = 0; x < n_x; ++x) {
        for (int a = 0; a < n_a; ++a) {
            double ref = 0.0;
            for (int b = 0; b < n_b; ++b) ref += at(a, b, x, 0);
            for (int y = 1; y < n_y; ++y) {
                double m = 0.0;
                for (int b = 0; b < n_b; ++b) m += at(a, b, x, y);
                if (std::abs(m - ref) > tol::no_signaling) {
                    throw ValidationError("Behavior: signaling from Bob to Alice detected");
                }
            }
        }
    }
    for (int y = 0; y < n_y; ++y) {
        for (int b = 0; b < n_b; ++b) {
            double ref = 0.0;
            for (int a = 0; a < n_a; ++a) ref += at(a, b, 0, y);
            for (int x = 1; x < n_x; ++x) {
                double m = 0.0;
                for (int a = 0; a < n_a; ++a) m += at(a, b, x, y);
                if (std::abs(m - ref) > tol::no_signaling) {
                    throw ValidationError("Behavior: signaling from Alice to Bob detected");
                }
            }
        }
    }
}

Assemblage assemblage(const BipartiteState& rho, const MeasurementFamily& family) {
    if (family.dim() != rho.dim_a) {
        throw DimensionError("assemblage: family dimension " + std::to_string(family.dim()) +
                             " does not match dimA = " + std::to_string(rho.dim_a));
    }
    const int n_x = family.num_settings();
    const int n_a = family.max_outcomes();
    const Mat eye_b = identity(rho.dim_b);
    std::vector<std::vector<HermOp>> grid;
    grid.reserve(n_x);
    for (int x = 0; x < n_x; ++x) {
        std::vector<HermOp> row;
        row.reserve(n_a);
        for (int a = 0; a < n_a; ++a) {
            Mat m = partial_trace_raw(kron(family.element(x, a), eye_b) * rho.op.mat(),
                                      rho.dim_a, rho.dim_b, Side::A);
            row.emplace_back(m);
        }
        grid.push_back(std::move(row));
    }
    return Assemblage(n_x, n_a, rho.dim_b, std::move(grid));
}

Behavior behavior(const BipartiteState& rho, const MeasurementFamily& fam_a,
                  const MeasurementFamily& fam_b) {
    if (fam_a.dim() != rho.dim_a || fam_b.dim() != rho.dim_b) {
        throw DimensionError("behavior: family dimensions do not match the state split");
    }
    const int n_x = fam_a.num_settings(), n_y = fam_b.num_settings();
    const int n_a = fam_a.max_outcomes(), n_b = fam_b.max_outcomes();
    std::vector<double> table(static_cast<size_t>(n_x) * n_y * n_a * n_b, 0.0);
    size_t idx = 0;
    for (int x = 0; x < n_x; ++x) {
        for (int y = 0; y < n_y; ++y) {
            for (int a = 0; a < n_a; ++a) {
                for (int b = 0; b < n_b; ++b) {
                    const double p =
                        (rho.op.mat() * kron(fam_a.element(x, a), fam_b.element(y, b))).trace().real();
                    table[idx++] = std::max(p, 0.0);
                }
            }
        }
    }
    return Behavior(n_x, n_y, n_a, n_b, std::move(table));
}

MeasurementFamily pauli3() {
    std::vector<Povm> settings;
    settings.push_back(bloch_basis(0, 0, 1));
    settings.push_back(bloch_basis(1, 0, 0));
    settings.push_back(bloch_basis(0, 1, 0));
    return MeasurementFamily(std::move(settings));
}

MeasurementFamily mub(int d) {
    if (d == 2) return pauli3();
    if (d != 3) throw DomainError("mub: explicit constructions only for d in {2, 3}");
    const cplx omega = std::exp(kI * (2.0 * std::numbers::pi / 3.0));
    std::vector<Povm> settings;
    settings.push_back(basis_povm(identity(3)));
    for (int b = 0; b < 3; ++b) {
        Mat u(3, 3);
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                u(m, j) = std::pow(omega, static_cast<double>((b * m * m + j * m) % 3)) / std::sqrt(3.0);
        settings.push_back(basis_povm(u));
    }
    return MeasurementFamily(std::move(settings));
}

MeasurementFamily trine_povm() {
    std::vector<HermOp> elems;
    for (int k = 0; k < 3; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 3.0;
        Vec v(2);
        v << 1.0 / std::sqrt(2.0), std::exp(kI * phi) / std::sqrt(2.0);
        elems.emplace_back((2.0 / 3.0) * projector(v));
    }
    std::vector<Povm> settings;
    settings.emplace_back(2, std::move(elems));
    return MeasurementFamily(std::move(settings));
}

MeasurementFamily sphere_sample(int n_settings, std::uint64_t seed, int dim) {
    if (n_settings < 1 || dim < 2) throw DomainError("sphere_sample: need n >= 1 and dim >= 2");
    Rng rng(seed);
    std::vector<Povm> settings;
    settings.reserve(n_settings);
    for (int i = 0; i < n_settings; ++i) settings.push_back(basis_povm(haar_unitary(dim, rng)));
    return MeasurementFamily(std::move(settings));
}

MeasurementFamily family_from_spec(const std::string& spec, std::uint64_t seed) {
    if (spec == "pauli3") return pauli3();
    if (spec == "mub2") return mub(2);
    if (spec == "mub3") return mub(3);
    if (spec == "trine") return trine_povm();
    if (spec.rfind("sphere:", 0) == 0) {
        const std::string rest = spec.substr(7);
        const auto colon = rest.find(':');
        try {
            const int n = std::stoi(rest.substr(0, colon));
            const int d = (colon == std::string::npos) ? 2 : std::stoi(rest.substr(colon + 1));
            return sphere_sample(n, seed, d);
        } catch (const std::logic_error&) {
            throw ValidationError("family_from_spec: bad sphere spec '" + spec + "'");
        }
    }
    throw ValidationError("family_from_spec: unknown family '" + spec + "'");
}

std::pair<MeasurementFamily, MeasurementFamily> chsh_optimal_settings() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Povm> alice;
    alice.push_back(bloch_basis(0, 0, 1));
    alice.push_back(bloch_basis(1, 0, 0));
    std::vector<Povm> bob;
    bob.push_back(bloch_basis(-s, 0, -s));
    bob.push_back(bloch_basis(s, 0, -s));
    return {MeasurementFamily(std::move(alice)), MeasurementFamily(std::move(bob))};
}

double chsh_value(const Behavior& p) {
    if (p.n_x != 2 || p.n_y != 2 || p.n_a != 2 || p.n_b != 2) {
        throw DimensionError("chsh_value: behavior is not a 2x2x2x2 table");
    }
    auto corr = [&](int x, int y) {
        double e = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) e += ((a + b) % 2 == 0 ? 1.0 : -1.0) * p.at(a, b, x, y);
        return e;
    };
    return corr(0, 0) + corr(0, 1) + corr(1, 0) - corr(1, 1);
}

} // namespace steerlab::meas

#pragma once

// Emitter configurations and the dimensionless interatomic interaction J.
// All rates are expressed in units of the single-emitter amplitude decay
// rate gamma = -Im[X], all lengths in units of 1/k0; no physical constants
// enter anywhere.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superrad/propagator.hpp"

namespace superrad {

struct EmitterSpec {
    Vec3 position = Vec3::Zero();  // k0 * r
    Vec3 dipole = Vec3::UnitX();   // unit orientation
    double detuning = 0.0;         // delta in gamma units

    void validate() const {
        if (std::abs(dipole.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("EmitterSpec: dipole must be a unit vector");
        if (!position.allFinite() || !std::isfinite(detuning))
            throw std::invalid_argument("EmitterSpec: non-finite field");
    }
};

using InteractionMatrix = Eigen::MatrixXcd;

namespace emitters {

// Parallel dipoles perpendicular to the separation axis (x-x) or along it
// (z-z); the separation is along z in both cases.
inline std::pair<EmitterSpec, EmitterSpec> xx_pair(double s) {
    return {EmitterSpec{Vec3::Zero(), Vec3::UnitX()},
            EmitterSpec{s * Vec3::UnitZ(), Vec3::UnitX()}};
}

inline std::pair<EmitterSpec, EmitterSpec> zz_pair(double s) {
    return {EmitterSpec{Vec3::Zero(), Vec3::UnitZ()},
            EmitterSpec{s * Vec3::UnitZ(), Vec3::UnitZ()}};
}

// Renormalized self-interaction X / gamma. The divergent real part is
// absorbed into the observable transition frequency, which makes it zero in
// these units; the imaginary part defines the unit of rate. Identical for
// the exact and RWA models.
inline complexd self_interaction(InteractionModel /*model*/) {
    return complexd(0.0, -1.0);
}

// Interatomic interaction J / gamma between two emitters.
//
// Vector waves:  J = 6 pi * mu1 . (K / k0) . mu2
// Scalar waves:  J = 4 pi * (K / k0)
//
// The prefactors are fixed by Im[J] -> -1 as s -> 0 for parallel dipoles,
// so that the identical-pair decay rates tend to {0, 2 gamma}.
inline complexd interaction(const EmitterSpec& e1, const EmitterSpec& e2,
                            InteractionModel model, FieldModel field = FieldModel::Vector) {
    e1.validate();
    e2.validate();
    const SeparationGeometry g = geometry_between(e1.position, e2.position);
    if (field == FieldModel::Scalar) {
        const complexd k = (model == InteractionModel::Exact)
                               ? propagator::scalar_green(g.s)
                               : propagator::scalar_rwa(g.s);
        return 4.0 * pi * k;
    }
    const Mat3c k = (model == InteractionModel::Exact) ? propagator::dyadic_green(g)
                                                       : propagator::dyadic_rwa(g);
    return 6.0 * pi * propagator::project(k, e1.dipole, e2.dipole);
}

// RWA-to-exact comparison of the interaction for one pair. re_ratio is
// empty when Re[J_exact] vanishes (the ratio is undefined there, not
// infinite); mag2_ratio likewise requires J_exact != 0.
struct InteractionRatio {
    std::optional<double> re_ratio;
    std::optional<double> mag2_ratio;
};

inline InteractionRatio interaction_ratio(const EmitterSpec& e1, const EmitterSpec& e2,
                                          FieldModel field = FieldModel::Vector) {
    const complexd je = interaction(e1, e2, InteractionModel::Exact, field);
    const complexd jr = interaction(e1, e2, InteractionModel::RWA, field);
    InteractionRatio out;
    if (je.real() != 0.0) out.re_ratio = jr.real() / je.real();
    const double mag2 = std::norm(je);
    if (mag2 != 0.0) out.mag2_ratio = std::norm(jr) / mag2;
    return out;
}

// The zero-diagonal complex symmetric matrix J'_mn = (1 - delta_mn) J_mn.
inline InteractionMatrix interaction_matrix(const std::vector<EmitterSpec>& specs,
                                            InteractionModel model,
                                            FieldModel field = FieldModel::Vector) {
    const auto n = static_cast<Eigen::Index>(specs.size());
    if (n < 2)
        throw std::invalid_argument("interaction_matrix: need at least 2 emitters");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if ((specs[i].position - specs[j].position).norm() == 0.0)
                throw std::invalid_argument("interaction_matrix: emitters " +
                                            std::to_string(i) + " and " + std::to_string(j) +
                                            " share a position");
    InteractionMatrix m = InteractionMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const complexd jij = interaction(specs[i], specs[j], model, field);
            m(i, j) = jij;
            m(j, i) = jij;
        }
    }
    return m;
}

} // namespace emitters
} // namespace superrad

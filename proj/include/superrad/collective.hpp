#pragma once

// Collective resonances of N coupled emitters: closed forms for two atoms,
// the dense complex-symmetric eigenproblem for general configurations,
// eigenvector-continuity branch tracking across parameter sweeps, and the
// crossing/avoided-crossing classifier for decay-rate branches.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superrad/emitters.hpp"

namespace superrad::collective {

// One collective resonance nu (an eigenvalue of J', gamma units). The mode
// frequency is Omega + X + nu, so the line shift is Re[nu] and the decay
// rate in gamma units is 1 - Im[nu].
struct CollectiveMode {
    complexd eigenvalue;
    Eigen::VectorXcd eigenvector;  // unit norm

    double shift() const { return eigenvalue.real(); }
    double decay_rate() const { return 1.0 - eigenvalue.imag(); }
};

// Decay rates of two identical emitters: nu = +/- J, rates 1 -/+ Im[J].
// Returned as (plus, minus) following the sign of the eigenvalue.
inline std::pair<CollectiveMode, CollectiveMode> two_atom_identical(complexd j) {
    Eigen::VectorXcd symmetric(2), antisymmetric(2);
    const double inv_sqrt2 = 0.70710678118654752440;
    symmetric << inv_sqrt2, inv_sqrt2;
    antisymmetric << inv_sqrt2, -inv_sqrt2;
    return {CollectiveMode{j, symmetric}, CollectiveMode{-j, antisymmetric}};
}

// Two emitters detuned by +/- delta: nu = +/- sqrt(delta^2 + J^2) with the
// principal square root (Re >= 0; on the cut, Im >= 0).
inline std::pair<CollectiveMode, CollectiveMode> two_atom_detuned(complexd j, double delta) {
    const complexd root = std::sqrt(delta * delta + j * j);
    auto eigvec = [&](complexd nu) {
        Eigen::VectorXcd v(2);
        v << j, nu - delta;
        const double n = v.norm();
        if (n < 1e-300) {
            v << 1.0, 0.0;  // decoupled, degenerate pair
            return v;
        }
        return Eigen::VectorXcd(v / n);
    };
    return {CollectiveMode{root, eigvec(root)}, CollectiveMode{-root, eigvec(-root)}};
}

// All collective modes of the interaction matrix J' (complex symmetric,
// zero diagonal). Not Hermitian, so a general dense complex solver is used.
inline std::vector<CollectiveMode> collective_modes(const InteractionMatrix& jp) {
    const Eigen::Index n = jp.rows();
    if (n < 2 || jp.cols() != n)
        throw std::invalid_argument("collective_modes: matrix must be square, N >= 2");
    const double scale = std::max(1.0, jp.norm());
    if ((jp - jp.transpose()).norm() > 1e-12 * scale)
        throw std::invalid_argument("collective_modes: matrix must be symmetric");
    if (jp.diagonal().norm() > 1e-12 * scale)
        throw std::invalid_argument("collective_modes: matrix must have zero diagonal");

    Eigen::ComplexEigenSolver<InteractionMatrix> solver(jp, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw numerical_error("collective_modes: eigensolver failed to converge");

    // Zero trace is exact for J'; a large residual means the decomposition
    // went wrong, not that the input was unusual.
    if (std::abs(solver.eigenvalues().sum()) > 1e-8 * scale * static_cast<double>(n))
        throw numerical_error("collective_modes: eigenvalue sum deviates from zero trace");

    std::vector<CollectiveMode> modes;
    modes.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        v /= v.norm();
        modes.push_back(CollectiveMode{solver.eigenvalues()[i], std::move(v)});
    }
    std::sort(modes.begin(), modes.end(), [](const CollectiveMode& a, const CollectiveMode& b) {
        if (a.decay_rate() != b.decay_rate()) return a.decay_rate() < b.decay_rate();
        return a.shift() < b.shift();
    });
    return modes;
}

// One point of a parameter sweep to be branch-tracked.
struct SweepPoint {
    double parameter;
    InteractionMatrix matrix;
};

// A mode followed through a sweep by eigenvector continuity. Indices where
// the best overlap fell below 0.5 are recorded as tracking discontinuities.
struct ModeBranch {
    std::vector<double> parameters;
    std::vector<CollectiveMode> modes;
    std::vector<std::size_t> discontinuities;

    double rate(std::size_t k) const { return modes[k].decay_rate(); }
    double shift(std::size_t k) const { return modes[k].shift(); }
    std::size_t size() const { return modes.size(); }
};

namespace detail {

// Permutation assigning each previous mode the best-overlapping new mode.
// Greedy maximum-overlap matching; near-ties (degenerate subspaces) are
// broken by eigenvalue proximity.
inline std::vector<std::size_t> match_modes(const std::vector<CollectiveMode>& prev,
                                            const std::vector<CollectiveMode>& next,
                                            std::vector<double>& best_overlap) {
    const std::size_t n = prev.size();
    Eigen::MatrixXd overlap(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::abs(prev[i].eigenvector.dot(next[j].eigenvector));

    std::vector<std::size_t> assignment(n, n);
    std::vector<bool> row_used(n, false), col_used(n, false);
    best_overlap.assign(n, 0.0);
    for (std::size_t pick = 0; pick < n; ++pick) {
        double best = -1.0;
        double best_dist = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (col_used[j]) continue;
                const double o = overlap(static_cast<Eigen::Index>(i),
                                         static_cast<Eigen::Index>(j));
                const double d = std::abs(prev[i].eigenvalue - next[j].eigenvalue);
                if (o > best + 1e-9 || (o > best - 1e-9 && d < best_dist)) {
                    best = o;
                    best_dist = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        row_used[bi] = true;
        col_used[bj] = true;
        assignment[bi] = bj;
        best_overlap[bi] = best;
    }
    return assignment;
}

} // namespace detail

// Follows each collective mode through the sweep, linking eigenvalues at
// consecutive points by eigenvector overlap. Branch order is fixed by the
// decay rates at the first sweep point (ascending).
inline std::vector<ModeBranch> track_modes(const std::vector<SweepPoint>& sweep) {
    if (sweep.size() < 2)
        throw std::invalid_argument("track_modes: need at least 2 sweep points");
    const Eigen::Index n = sweep.front().matrix.rows();
    for (const SweepPoint& p : sweep)
        if (p.matrix.rows() != n)
            throw std::invalid_argument("track_modes: emitter count changes across sweep");

    std::vector<CollectiveMode> current = collective_modes(sweep.front().matrix);
    std::vector<ModeBranch> branches(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < branches.size(); ++b) {
        branches[b].parameters.push_back(sweep.front().parameter);
        branches[b].modes.push_back(current[b]);
    }

    for (std::size_t k = 1; k < sweep.size(); ++k) {
        std::vector<CollectiveMode> next = collective_modes(sweep[k].matrix);
        std::vector<double> best_overlap;
        const std::vector<std::size_t> assign = detail::match_modes(current, next, best_overlap);
        std::vector<CollectiveMode> reordered(current.size());
        for (std::size_t b = 0; b < branches.size(); ++b) {
            reordered[b] = next[assign[b]];
            branches[b].parameters.push_back(sweep[k].parameter);
            branches[b].modes.push_back(reordered[b]);
            if (best_overlap[b] < 0.5) branches[b].discontinuities.push_back(k);
        }
        current = std::move(reordered);
    }
    return branches;
}

enum class CrossingKind { Crossing, AvoidedCrossing, Neither };

struct CrossingReport {
    CrossingKind kind = CrossingKind::Neither;
    double parameter = 0.0;  // where the event happens (or the gap minimum)
    double gap = 0.0;        // decay-rate gap at the event
};

// Default decay-rate gap (gamma units) below which a positive interior
// minimum counts as an avoided crossing.
inline constexpr double default_avoided_gap_threshold = 0.3;

// Classifies the topology of two decay-rate branches over a shared grid:
// a sign change of the gap is a crossing (branch identities, fixed by the
// eigenvectors, pass through each other); a positive interior minimum below
// the threshold is an avoided crossing.
inline CrossingReport classify_crossing(const ModeBranch& b1, const ModeBranch& b2,
                                        double gap_threshold = default_avoided_gap_threshold) {
    if (b1.parameters.size() != b2.parameters.size() || b1.parameters.empty())
        throw std::invalid_argument("classify_crossing: branches use different grids");
    const std::size_t npts = b1.parameters.size();
    for (std::size_t k = 0; k < npts; ++k)
        if (b1.parameters[k] != b2.parameters[k])
            throw std::invalid_argument("classify_crossing: branches use different grids");

    auto discontinuous_at = [&](std::size_t k) {
        return std::find(b1.discontinuities.begin(), b1.discontinuities.end(), k) !=
                   b1.discontinuities.end() ||
               std::find(b2.discontinuities.begin(), b2.discontinuities.end(), k) !=
                   b2.discontinuities.end();
    };

    std::vector<double> gap(npts);
    for (std::size_t k = 0; k < npts; ++k) gap[k] = b1.rate(k) - b2.rate(k);

    for (std::size_t k = 0; k + 1 < npts; ++k) {
        if (gap[k] == 0.0)
            return {CrossingKind::Crossing, b1.parameters[k], 0.0};
        if (gap[k] * gap[k + 1] < 0.0 && !discontinuous_at(k) && !discontinuous_at(k + 1)) {
            const double t = gap[k] / (gap[k] - gap[k + 1]);
            const double p = b1.parameters[k] + t * (b1.parameters[k + 1] - b1.parameters[k]);
            return {CrossingKind::Crossing, p, 0.0};
        }
    }

    double min_gap = std::numeric_limits<double>::infinity();
    double min_param = b1.parameters.front();
    bool found_local_min = false;
    for (std::size_t k = 1; k + 1 < npts; ++k) {
        const double g = std::abs(gap[k]);
        if (g <= std::abs(gap[k - 1]) && g <= std::abs(gap[k + 1]) && g < min_gap) {
            min_gap = g;
            min_param = b1.parameters[k];
            found_local_min = true;
        }
    }
    if (found_local_min && min_gap < gap_threshold)
        return {CrossingKind::AvoidedCrossing, min_param, min_gap};

    const auto it = std::min_element(gap.begin(), gap.end(),
                                     [](double a, double b) { return std::abs(a) < std::abs(b); });
    return {CrossingKind::Neither,
            b1.parameters[static_cast<std::size_t>(it - gap.begin())], std::abs(*it)};
}

// Two-atom emission spectrum |D(omega)|^-2 on a grid of frequencies around
// the common transition (gamma units), with D the resonance denominator
// D(w) = (w - delta - X)(w + delta - X) - J^2 and X = -i.
inline std::vector<double> two_atom_spectrum(const std::vector<double>& omega_grid,
                                             complexd j, double delta = 0.0) {
    const complexd x(0.0, -1.0);
    std::vector<double> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        if (!std::isfinite(w))
            throw std::invalid_argument("two_atom_spectrum: non-finite frequency");
        const complexd d = (w - delta - x) * (w + delta - x) - j * j;
        out.push_back(1.0 / std::norm(d));
    }
    return out;
}

// Rayleigh visibility of the two-peak collective spectrum: the splitting
// 2 |Re J| must reach the sum of the half-widths, 2 gamma.
inline bool rayleigh_visible(complexd j) { return std::abs(j.real()) >= 1.0; }

// Cooperativity C = (gamma_c - gamma) / gamma for a decay rate in gamma units.
inline double cooperativity(double decay_rate) {
    if (decay_rate < 0.0)
        throw std::invalid_argument("cooperativity: decay rate must be nonnegative");
    return decay_rate - 1.0;
}

} // namespace superrad::collective

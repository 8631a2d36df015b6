#pragma once

// Regular N-gon emitter rings. Their interaction matrix is circulant, so
// the collective eigenvalues follow from a cosine Fourier series in the
// first row; because the coefficients are real, the decay rates are immune
// to the purely real RWA error in the interactions.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "superrad/collective.hpp"
#include "superrad/emitters.hpp"

namespace superrad::ring {

enum class DipoleStyle { OutOfPlane, Radial, Tangential };

struct RingSpec {
    int n = 3;
    double circumradius = 1.0;  // k0 units
    DipoleStyle style = DipoleStyle::OutOfPlane;

    void validate() const {
        if (n < 3) throw std::invalid_argument("RingSpec: need at least 3 emitters");
        if (!std::isfinite(circumradius) || circumradius <= 0.0)
            throw std::invalid_argument("RingSpec: circumradius must be positive");
    }
};

// Emitters at angles 2 pi k / N on the circle, zero detuning, with dipole
// vectors that preserve the N-fold rotational symmetry.
inline std::vector<EmitterSpec> ring_emitters(const RingSpec& spec) {
    spec.validate();
    std::vector<EmitterSpec> out;
    out.reserve(static_cast<std::size_t>(spec.n));
    for (int k = 0; k < spec.n; ++k) {
        const double phi = 2.0 * pi * static_cast<double>(k) / static_cast<double>(spec.n);
        const double c = std::cos(phi), s = std::sin(phi);
        EmitterSpec e;
        e.position = spec.circumradius * Vec3(c, s, 0.0);
        switch (spec.style) {
            case DipoleStyle::OutOfPlane: e.dipole = Vec3::UnitZ(); break;
            case DipoleStyle::Radial: e.dipole = Vec3(c, s, 0.0); break;
            case DipoleStyle::Tangential: e.dipole = Vec3(-s, c, 0.0); break;
        }
        out.push_back(e);
    }
    return out;
}

// Collective eigenvalues of a circulant interaction matrix from its first
// row, in Bloch order k = 0 .. N-1:
//   N even: nu_k = (-1)^k J_{0,N/2} + 2 sum_{n=1}^{N/2-1} J_{0n} cos(2 pi n k / N)
//   N odd:  nu_k = 2 sum_{n=1}^{(N-1)/2} J_{0n} cos(2 pi n k / N)
inline std::vector<complexd> ring_eigenvalues_fourier(const std::vector<complexd>& first_row) {
    const auto n = first_row.size();
    if (n < 3)
        throw std::invalid_argument("ring_eigenvalues_fourier: need at least 3 entries");
    double scale = 0.0;
    for (const complexd& j : first_row) scale = std::max(scale, std::abs(j));
    if (std::abs(first_row[0]) > 1e-9 * std::max(1.0, scale))
        throw std::invalid_argument("ring_eigenvalues_fourier: first entry must be zero");
    for (std::size_t m = 1; m < n; ++m)
        if (std::abs(first_row[m] - first_row[n - m]) > 1e-9 * std::max(1.0, scale))
            throw std::invalid_argument(
                "ring_eigenvalues_fourier: first row violates the ring symmetry "
                "J_{0,n} = J_{0,N-n}");

    std::vector<complexd> nu(n);
    const bool even = (n % 2 == 0);
    const std::size_t half = even ? n / 2 - 1 : (n - 1) / 2;
    for (std::size_t k = 0; k < n; ++k) {
        complexd acc{0.0, 0.0};
        for (std::size_t m = 1; m <= half; ++m)
            acc += 2.0 * first_row[m] *
                   std::cos(2.0 * pi * static_cast<double>(m * k) / static_cast<double>(n));
        if (even) acc += (k % 2 == 0 ? 1.0 : -1.0) * first_row[n / 2];
        nu[k] = acc;
    }
    return nu;
}

// Extracts the first row of a ring interaction matrix after verifying the
// circulant structure the geometry is supposed to produce.
inline std::vector<complexd> circulant_first_row(const InteractionMatrix& m) {
    const auto n = static_cast<std::size_t>(m.rows());
    const double scale = std::max(1.0, m.norm());
    std::vector<complexd> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(0, static_cast<Eigen::Index>(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                         row[(j + n - i) % n]) > 1e-9 * scale)
                throw std::invalid_argument(
                    "circulant_first_row: matrix is not circulant (entry " + std::to_string(i) +
                    "," + std::to_string(j) + ")");
    return row;
}

struct RingCertification {
    double max_rate_difference = 0.0;   // dense-solver rates, exact vs RWA
    double max_shift_difference = 0.0;  // Fourier shifts, exact vs RWA
};

// Certifies that the ring's collective decay rates are identical with and
// without the RWA while the shifts are not. A rate difference above 1e-9
// contradicts the symmetry argument and therefore indicates a bug.
inline RingCertification certify_ring_rwa_invariance(const RingSpec& spec) {
    const std::vector<EmitterSpec> ring = ring_emitters(spec);
    const InteractionMatrix exact =
        emitters::interaction_matrix(ring, InteractionModel::Exact);
    const InteractionMatrix rwa = emitters::interaction_matrix(ring, InteractionModel::RWA);

    const std::vector<collective::CollectiveMode> me = collective::collective_modes(exact);
    const std::vector<collective::CollectiveMode> mr = collective::collective_modes(rwa);
    RingCertification cert;
    for (std::size_t i = 0; i < me.size(); ++i)
        cert.max_rate_difference = std::max(
            cert.max_rate_difference, std::abs(me[i].decay_rate() - mr[i].decay_rate()));

    const std::vector<complexd> nu_e = ring_eigenvalues_fourier(circulant_first_row(exact));
    const std::vector<complexd> nu_r = ring_eigenvalues_fourier(circulant_first_row(rwa));
    for (std::size_t k = 0; k < nu_e.size(); ++k)
        cert.max_shift_difference =
            std::max(cert.max_shift_difference, std::abs(nu_e[k].real() - nu_r[k].real()));

    if (cert.max_rate_difference > 1e-9)
        throw numerical_error(
            "certify_ring_rwa_invariance: decay rates differ between models by " +
            std::to_string(cert.max_rate_difference) +
            " although the ring symmetry forbids any difference");
    return cert;
}

} // namespace superrad::ring

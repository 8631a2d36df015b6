#pragma once

// Free-space propagators between two points, normalized by k0 so that every
// quantity is a function of the dimensionless separation s = k0 R alone.
// Both the full (Green-function) and rotating-wave propagators are provided,
// for scalar and vector waves, together with their purely real difference.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "superrad/errors.hpp"
#include "superrad/specfun.hpp"

namespace superrad {

using complexd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3c = Eigen::Matrix3cd;
using Mat3 = Eigen::Matrix3d;

enum class FieldModel { Scalar, Vector };
enum class InteractionModel { Exact, RWA };

inline constexpr double pi = 3.14159265358979323846;

// Distance and direction between two emitter positions, the sole spatial
// input of all propagator math. s = k0 R; rhat is the unit separation.
struct SeparationGeometry {
    double s = 0.0;
    Vec3 rhat = Vec3::UnitZ();

    void validate() const {
        if (!std::isfinite(s) || s <= 0.0)
            throw std::invalid_argument("SeparationGeometry: s must be positive and finite");
        if (std::abs(rhat.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("SeparationGeometry: rhat must be a unit vector");
    }
};

// Separation along the z axis; the canonical two-dipole configurations
// (x-x and z-z) both use this geometry.
inline SeparationGeometry axial_geometry(double s) {
    SeparationGeometry g{s, Vec3::UnitZ()};
    g.validate();
    return g;
}

inline SeparationGeometry geometry_between(const Vec3& p1, const Vec3& p2) {
    const Vec3 d = p2 - p1;
    const double s = d.norm();
    if (s <= 0.0)
        throw std::invalid_argument("geometry_between: coincident positions");
    return SeparationGeometry{s, d / s};
}

namespace propagator {

// Scalar Helmholtz Green function, G0 / k0 = -e^{i s} / (4 pi s).
inline complexd scalar_green(double s) {
    if (!std::isfinite(s) || s <= 0.0)
        throw std::invalid_argument("scalar_green: s must be positive and finite");
    return -std::exp(complexd(0.0, s)) / (4.0 * pi * s);
}

// Scalar rotating-wave propagator, K+ / k0. Differs from the Green function
// by a real term, so the imaginary parts coincide identically.
inline complexd scalar_rwa(double s, double rel_tol = specfun::default_rel_tol) {
    const complexd g = scalar_green(s);
    const double c = 2.0 * pi * s;
    return g - specfun::integral_In(2, s, rel_tol) / (c * c);
}

// Full dyadic Green function G0 / k0 with its near-, intermediate- and
// far-field terms.
inline Mat3c dyadic_green(const SeparationGeometry& g) {
    g.validate();
    const double s = g.s;
    const Mat3 rr = g.rhat * g.rhat.transpose();
    const Mat3 transverse = Mat3::Identity() - rr;          // I - r r
    const Mat3 longitudinal = Mat3::Identity() - 3.0 * rr;  // I - 3 r r
    const complexd pref = -std::exp(complexd(0.0, s)) / (4.0 * pi * s);
    return pref * (transverse.cast<complexd>() +
                   (complexd(0.0, 1.0) / s - 1.0 / (s * s)) * longitudinal.cast<complexd>());
}

// Rotating-wave dyadic propagator K+ / k0 = G0 / k0 minus the real error
// dyad built from the I_n family.
inline Mat3c dyadic_rwa(const SeparationGeometry& g,
                        double rel_tol = specfun::default_rel_tol) {
    g.validate();
    const double s = g.s;
    const double c = 2.0 * pi * s;
    const double c2 = specfun::integral_In(2, s, rel_tol) / (c * c);
    const double c01 = (specfun::integral_In(1, s, rel_tol) +
                        specfun::integral_In(0, s, rel_tol)) / (c * c);
    const Mat3 rr = g.rhat * g.rhat.transpose();
    const Mat3 error = c2 * (Mat3::Identity() - rr) +
                       c01 * (Mat3::Identity() - 3.0 * rr);
    return dyadic_green(g) - error.cast<complexd>();
}

namespace detail {

inline void check_real(double im, double scale, const char* what) {
    if (std::abs(im) > 1e-12 * scale)
        throw numerical_error(std::string(what) +
                              ": RWA error term has a non-negligible imaginary part "
                              "(quadrature failure)");
}

} // namespace detail

// K_RWA - G for scalar waves. The result is real; a residual imaginary part
// signals a quadrature failure and raises.
inline double scalar_rwa_error(double s, double rel_tol = specfun::default_rel_tol) {
    const complexd diff = scalar_rwa(s, rel_tol) - scalar_green(s);
    detail::check_real(diff.imag(), std::abs(diff), "scalar_rwa_error");
    return diff.real();
}

// K_RWA - G for vector waves, returned as a real 3x3 matrix.
inline Mat3 dyadic_rwa_error(const SeparationGeometry& g,
                             double rel_tol = specfun::default_rel_tol) {
    const Mat3c diff = dyadic_rwa(g, rel_tol) - dyadic_green(g);
    detail::check_real(diff.imag().norm(), diff.norm(), "dyadic_rwa_error");
    return diff.real();
}

// Bilinear projection mu1 . d . mu2 used for every dipole-dipole coupling.
// Bilinear, not sesquilinear: no conjugation of either dipole.
inline complexd project(const Mat3c& d, const Vec3& mu1, const Vec3& mu2) {
    if (std::abs(mu1.norm() - 1.0) > 1e-9 || std::abs(mu2.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("project: dipole vectors must be unit vectors");
    complexd out{0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += mu1[i] * d(i, j) * mu2[j];
    return out;
}

} // namespace propagator
} // namespace superrad

#pragma once

// Named scenarios reproducing the reference sweeps: interaction ratios,
// interaction curves, detuned-pair decay rates, the symmetry-broken
// triangle branches, and the crossing-topology comparison.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "superrad/scenario.hpp"

namespace superrad::scenario {

namespace detail {

inline NamedConfig pair_config(const std::string& name, const Vec3& dipole,
                               double separation = 1.0, double delta = 0.0) {
    NamedConfig cfg;
    cfg.name = name;
    cfg.emitters = {EmitterSpec{Vec3::Zero(), dipole, delta},
                    EmitterSpec{separation * Vec3::UnitZ(), dipole, -delta}};
    return cfg;
}

// Unit-side equilateral triangle in the xy plane with in-plane dipoles: the
// two base dipoles point along y (perpendicular to the base edge) and the
// apex dipole is rotated by `angle_deg` from y.
inline NamedConfig triangle_config(const std::string& name, double angle_deg) {
    const double a = angle_deg * pi / 180.0;
    NamedConfig cfg;
    cfg.name = name;
    cfg.emitters = {
        EmitterSpec{Vec3::Zero(), Vec3::UnitY()},
        EmitterSpec{Vec3::UnitX(), Vec3::UnitY()},
        EmitterSpec{Vec3(0.5, std::sqrt(3.0) / 2.0, 0.0), Vec3(-std::sin(a), std::cos(a), 0.0)}};
    return cfg;
}

inline SweepSpec scale_sweep(double from, double to, int points,
                             Spacing spacing = Spacing::Linear) {
    return SweepSpec{SweepParameter::Scale, from, to, points, spacing};
}

} // namespace detail

inline std::vector<std::pair<std::string, std::string>> list_presets() {
    return {
        {"fig2", "scalar pair interaction, exact vs RWA, vs separation"},
        {"fig3a", "ratio of Re[J] (RWA/exact) for the x-x and z-z pairs vs separation"},
        {"fig3b", "|J_RWA/J_exact|^2 for the x-x and z-z pairs, log-spaced separations"},
        {"fig4a", "Re and Im of J for the x-x pair, exact vs RWA, vs separation"},
        {"fig4b", "Re and Im of J for the z-z pair, exact vs RWA, vs separation"},
        {"fig5a", "detuned-pair decay rates at k0R = 1 (x-x) vs detuning"},
        {"fig5b", "detuned-pair decay rates at delta = 2 gamma (x-x) vs separation"},
        {"fig6b", "decay-rate branches of the 15-degree triangle vs separation"},
        {"fig6c", "near-field zoom of the 15-degree triangle branches"},
        {"fig7", "decay-rate branches of the 50-degree triangle (crossing topology)"},
    };
}

inline Scenario make_preset(const std::string& name) {
    Scenario sc;
    sc.models = {InteractionModel::Exact, InteractionModel::RWA};
    if (name == "fig2") {
        sc.field_model = FieldModel::Scalar;
        sc.configs = {detail::pair_config("pair", Vec3::UnitX())};
        sc.sweep = detail::scale_sweep(0.05, 3.0, 400);
        sc.outputs = {Quantity::ReJ, Quantity::ImJ};
    } else if (name == "fig3a") {
        sc.configs = {detail::pair_config("xx", Vec3::UnitX()),
                      detail::pair_config("zz", Vec3::UnitZ())};
        sc.sweep = detail::scale_sweep(0.05, 6.0, 600);
        sc.outputs = {Quantity::ReRatio};
    } else if (name == "fig3b") {
        sc.configs = {detail::pair_config("xx", Vec3::UnitX()),
                      detail::pair_config("zz", Vec3::UnitZ())};
        sc.sweep = detail::scale_sweep(0.05, 20.0, 400, Spacing::Log);
        sc.outputs = {Quantity::Mag2Ratio};
    } else if (name == "fig4a") {
        sc.configs = {detail::pair_config("xx", Vec3::UnitX())};
        sc.sweep = detail::scale_sweep(0.1, 6.0, 600);
        sc.outputs = {Quantity::ReJ, Quantity::ImJ};
    } else if (name == "fig4b") {
        sc.configs = {detail::pair_config("zz", Vec3::UnitZ())};
        sc.sweep = detail::scale_sweep(0.1, 6.0, 600);
        sc.outputs = {Quantity::ReJ, Quantity::ImJ};
    } else if (name == "fig5a") {
        sc.configs = {detail::pair_config("xx", Vec3::UnitX())};
        sc.sweep = SweepSpec{SweepParameter::Detuning, 0.0, 10.0, 1001, Spacing::Linear};
        sc.outputs = {Quantity::RateK};
    } else if (name == "fig5b") {
        sc.configs = {detail::pair_config("xx", Vec3::UnitX(), 1.0, 2.0)};
        sc.sweep = detail::scale_sweep(0.05, 6.0, 600);
        sc.outputs = {Quantity::RateK};
    } else if (name == "fig6b") {
        sc.configs = {detail::triangle_config("triangle15", 15.0)};
        sc.sweep = detail::scale_sweep(0.1, 3.0, 291);
        sc.outputs = {Quantity::RateK};
    } else if (name == "fig6c") {
        sc.configs = {detail::triangle_config("triangle15", 15.0)};
        sc.sweep = detail::scale_sweep(0.1, 1.5, 281);
        sc.outputs = {Quantity::RateK};
    } else if (name == "fig7") {
        sc.configs = {detail::triangle_config("triangle50", 50.0)};
        sc.sweep = detail::scale_sweep(0.3, 2.0, 341);
        sc.outputs = {Quantity::RateK};
    } else {
        throw config_error("unknown preset \"" + name + "\"");
    }
    return sc;
}

} // namespace superrad::scenario

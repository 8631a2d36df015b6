#pragma once

// Declarative scenario runner behind the command-line tool: a JSON-shaped
// configuration selects emitters, an interaction model set, a sweep and the
// quantities to tabulate; the runner evaluates the grid (optionally across
// a thread pool) and emits deterministic CSV or JSON tables.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superrad/collective.hpp"
#include "superrad/emitters.hpp"
#include "superrad/ring.hpp"
#include "superrad/version.hpp"

namespace superrad::scenario {

using json = nlohmann::json;

// A malformed or inconsistent scenario; the message carries the offending
// field path.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

enum class SweepParameter { Scale, Detuning, Omega };
enum class Spacing { Linear, Log };

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Scale;
    double from = 0.1;
    double to = 1.0;
    int points = 2;
    Spacing spacing = Spacing::Linear;
};

enum class Quantity { ReJ, ImJ, ReRatio, Mag2Ratio, RateK, ShiftK, Spectrum };

// One named emitter set; built either from an explicit list or a ring spec
// (kept for faithful serialization).
struct NamedConfig {
    std::string name;
    std::vector<EmitterSpec> emitters;
    std::optional<ring::RingSpec> ring_spec;
};

struct Scenario {
    FieldModel field_model = FieldModel::Vector;
    std::vector<InteractionModel> models;
    std::vector<NamedConfig> configs;
    SweepSpec sweep;
    std::vector<Quantity> outputs;
};

struct ResultTable {
    std::vector<std::string> columns;  // "param" first
    std::vector<std::vector<double>> rows;
    std::string config_json;  // canonical one-line dump of the scenario
    std::uint64_t config_hash = 0;

    std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::out_of_range("ResultTable: no column named " + name);
    }
};

namespace detail {

inline const std::map<std::string, Quantity>& quantity_names() {
    static const std::map<std::string, Quantity> m = {
        {"re_J", Quantity::ReJ},           {"im_J", Quantity::ImJ},
        {"re_ratio", Quantity::ReRatio},   {"mag2_ratio", Quantity::Mag2Ratio},
        {"rate_k", Quantity::RateK},       {"shift_k", Quantity::ShiftK},
        {"spectrum", Quantity::Spectrum}};
    return m;
}

inline std::string quantity_name(Quantity q) {
    for (const auto& [name, qq] : quantity_names())
        if (qq == q) return name;
    return "?";
}

inline void require_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    if (!obj.is_object()) throw config_error(path + ": expected an object");
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw config_error(path + "." + item.key() + ": unknown key");
}

inline double get_number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw config_error(path + "." + key + ": missing");
    if (!obj[key].is_number()) throw config_error(path + "." + key + ": expected a number");
    return obj[key].get<double>();
}

inline Vec3 get_vec3(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw config_error(path + "." + key + ": missing");
    const json& a = obj[key];
    if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
        !a[2].is_number())
        throw config_error(path + "." + key + ": expected [x, y, z]");
    return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace detail

inline json scenario_to_json(const Scenario& sc) {
    json j;
    j["field_model"] = sc.field_model == FieldModel::Vector ? "vector" : "scalar";
    json models = json::array();
    for (InteractionModel m : sc.models)
        models.push_back(m == InteractionModel::Exact ? "exact" : "rwa");
    j["models"] = models;
    json configs = json::array();
    for (const NamedConfig& c : sc.configs) {
        json jc;
        jc["name"] = c.name;
        if (c.ring_spec) {
            json r;
            r["n"] = c.ring_spec->n;
            r["circumradius"] = c.ring_spec->circumradius;
            switch (c.ring_spec->style) {
                case ring::DipoleStyle::OutOfPlane: r["dipole_style"] = "out_of_plane"; break;
                case ring::DipoleStyle::Radial: r["dipole_style"] = "radial"; break;
                case ring::DipoleStyle::Tangential: r["dipole_style"] = "tangential"; break;
            }
            jc["ring"] = r;
        } else {
            json es = json::array();
            for (const EmitterSpec& e : c.emitters) {
                json je;
                je["position"] = {e.position[0], e.position[1], e.position[2]};
                je["dipole"] = {e.dipole[0], e.dipole[1], e.dipole[2]};
                je["detuning"] = e.detuning;
                es.push_back(je);
            }
            jc["emitters"] = es;
        }
        configs.push_back(jc);
    }
    j["configs"] = configs;
    json sw;
    switch (sc.sweep.parameter) {
        case SweepParameter::Scale: sw["parameter"] = "scale"; break;
        case SweepParameter::Detuning: sw["parameter"] = "detuning"; break;
        case SweepParameter::Omega: sw["parameter"] = "omega"; break;
    }
    sw["from"] = sc.sweep.from;
    sw["to"] = sc.sweep.to;
    sw["points"] = sc.sweep.points;
    sw["spacing"] = sc.sweep.spacing == Spacing::Linear ? "linear" : "log";
    j["sweep"] = sw;
    json outs = json::array();
    for (Quantity q : sc.outputs) outs.push_back(detail::quantity_name(q));
    j["outputs"] = outs;
    return j;
}

inline Scenario parse_scenario(const json& j) {
    Scenario sc;
    detail::require_keys(j, {"field_model", "models", "configs", "sweep", "outputs"}, "config");

    if (!j.contains("field_model") || !j["field_model"].is_string())
        throw config_error("config.field_model: expected \"scalar\" or \"vector\"");
    const std::string fm = j["field_model"].get<std::string>();
    if (fm == "vector") sc.field_model = FieldModel::Vector;
    else if (fm == "scalar") sc.field_model = FieldModel::Scalar;
    else throw config_error("config.field_model: expected \"scalar\" or \"vector\"");

    if (!j.contains("models") || !j["models"].is_array() || j["models"].empty())
        throw config_error("config.models: expected a non-empty array");
    for (std::size_t i = 0; i < j["models"].size(); ++i) {
        const json& m = j["models"][i];
        const std::string path = "config.models[" + std::to_string(i) + "]";
        if (!m.is_string()) throw config_error(path + ": expected \"exact\" or \"rwa\"");
        const std::string name = m.get<std::string>();
        InteractionModel model;
        if (name == "exact") model = InteractionModel::Exact;
        else if (name == "rwa") model = InteractionModel::RWA;
        else throw config_error(path + ": expected \"exact\" or \"rwa\"");
        if (std::find(sc.models.begin(), sc.models.end(), model) != sc.models.end())
            throw config_error(path + ": duplicate model");
        sc.models.push_back(model);
    }

    if (!j.contains("configs") || !j["configs"].is_array() || j["configs"].empty())
        throw config_error("config.configs: expected a non-empty array");
    for (std::size_t ci = 0; ci < j["configs"].size(); ++ci) {
        const json& jc = j["configs"][ci];
        const std::string path = "config.configs[" + std::to_string(ci) + "]";
        detail::require_keys(jc, {"name", "emitters", "ring"}, path);
        NamedConfig cfg;
        if (!jc.contains("name") || !jc["name"].is_string() ||
            jc["name"].get<std::string>().empty())
            throw config_error(path + ".name: expected a non-empty string");
        cfg.name = jc["name"].get<std::string>();
        for (const NamedConfig& other : sc.configs)
            if (other.name == cfg.name)
                throw config_error(path + ".name: duplicate configuration name");
        if (jc.contains("ring") == jc.contains("emitters"))
            throw config_error(path + ": provide exactly one of \"emitters\" or \"ring\"");
        if (jc.contains("ring")) {
            const json& r = jc["ring"];
            detail::require_keys(r, {"n", "circumradius", "dipole_style"}, path + ".ring");
            ring::RingSpec rs;
            const double n = detail::get_number(r, "n", path + ".ring");
            if (n != std::floor(n) || n < 3)
                throw config_error(path + ".ring.n: expected an integer >= 3");
            rs.n = static_cast<int>(n);
            rs.circumradius = detail::get_number(r, "circumradius", path + ".ring");
            if (!(rs.circumradius > 0.0))
                throw config_error(path + ".ring.circumradius: must be positive");
            if (!r.contains("dipole_style") || !r["dipole_style"].is_string())
                throw config_error(path + ".ring.dipole_style: missing");
            const std::string style = r["dipole_style"].get<std::string>();
            if (style == "out_of_plane") rs.style = ring::DipoleStyle::OutOfPlane;
            else if (style == "radial") rs.style = ring::DipoleStyle::Radial;
            else if (style == "tangential") rs.style = ring::DipoleStyle::Tangential;
            else
                throw config_error(path + ".ring.dipole_style: expected out_of_plane, "
                                          "radial, or tangential");
            cfg.ring_spec = rs;
            cfg.emitters = ring::ring_emitters(rs);
        } else {
            const json& es = jc["emitters"];
            if (!es.is_array() || es.size() < 2)
                throw config_error(path + ".emitters: expected an array of >= 2 emitters");
            for (std::size_t ei = 0; ei < es.size(); ++ei) {
                const std::string epath = path + ".emitters[" + std::to_string(ei) + "]";
                detail::require_keys(es[ei], {"position", "dipole", "detuning"}, epath);
                EmitterSpec e;
                e.position = detail::get_vec3(es[ei], "position", epath);
                e.dipole = detail::get_vec3(es[ei], "dipole", epath);
                if (es[ei].contains("detuning"))
                    e.detuning = detail::get_number(es[ei], "detuning", epath);
                try {
                    e.validate();
                } catch (const std::invalid_argument& err) {
                    throw config_error(epath + ": " + err.what());
                }
                cfg.emitters.push_back(e);
            }
        }
        sc.configs.push_back(std::move(cfg));
    }

    if (!j.contains("sweep")) throw config_error("config.sweep: missing");
    const json& sw = j["sweep"];
    detail::require_keys(sw, {"parameter", "from", "to", "points", "spacing"}, "config.sweep");
    if (!sw.contains("parameter") || !sw["parameter"].is_string())
        throw config_error("config.sweep.parameter: expected scale, detuning, or omega");
    const std::string par = sw["parameter"].get<std::string>();
    if (par == "scale") sc.sweep.parameter = SweepParameter::Scale;
    else if (par == "detuning") sc.sweep.parameter = SweepParameter::Detuning;
    else if (par == "omega") sc.sweep.parameter = SweepParameter::Omega;
    else throw config_error("config.sweep.parameter: expected scale, detuning, or omega");
    sc.sweep.from = detail::get_number(sw, "from", "config.sweep");
    sc.sweep.to = detail::get_number(sw, "to", "config.sweep");
    const double pts = detail::get_number(sw, "points", "config.sweep");
    if (pts != std::floor(pts) || pts < 2)
        throw config_error("config.sweep.points: expected an integer >= 2");
    sc.sweep.points = static_cast<int>(pts);
    if (sw.contains("spacing")) {
        if (!sw["spacing"].is_string())
            throw config_error("config.sweep.spacing: expected linear or log");
        const std::string sp = sw["spacing"].get<std::string>();
        if (sp == "linear") sc.sweep.spacing = Spacing::Linear;
        else if (sp == "log") sc.sweep.spacing = Spacing::Log;
        else throw config_error("config.sweep.spacing: expected linear or log");
    }
    if (!(sc.sweep.from < sc.sweep.to))
        throw config_error("config.sweep: require from < to");
    if (sc.sweep.spacing == Spacing::Log && !(sc.sweep.from > 0.0))
        throw config_error("config.sweep.from: log spacing requires from > 0");
    if (sc.sweep.parameter == SweepParameter::Scale && !(sc.sweep.from > 0.0))
        throw config_error("config.sweep.from: scale sweep requires from > 0");

    if (!j.contains("outputs") || !j["outputs"].is_array() || j["outputs"].empty())
        throw config_error("config.outputs: expected a non-empty array");
    for (std::size_t i = 0; i < j["outputs"].size(); ++i) {
        const std::string path = "config.outputs[" + std::to_string(i) + "]";
        if (!j["outputs"][i].is_string()) throw config_error(path + ": expected a string");
        const std::string name = j["outputs"][i].get<std::string>();
        const auto it = detail::quantity_names().find(name);
        if (it == detail::quantity_names().end())
            throw config_error(path + ": unknown quantity \"" + name + "\"");
        if (std::find(sc.outputs.begin(), sc.outputs.end(), it->second) != sc.outputs.end())
            throw config_error(path + ": duplicate quantity");
        sc.outputs.push_back(it->second);
    }

    // Cross-field consistency.
    const bool has_both_models = sc.models.size() == 2;
    for (Quantity q : sc.outputs) {
        const bool pairwise = q == Quantity::ReJ || q == Quantity::ImJ ||
                              q == Quantity::ReRatio || q == Quantity::Mag2Ratio ||
                              q == Quantity::Spectrum;
        if ((q == Quantity::ReRatio || q == Quantity::Mag2Ratio) && !has_both_models)
            throw config_error("config.outputs: " + detail::quantity_name(q) +
                               " requires models [exact, rwa]");
        if (q == Quantity::Spectrum && sc.sweep.parameter != SweepParameter::Omega)
            throw config_error("config.outputs: spectrum requires an omega sweep");
        if (q != Quantity::Spectrum && sc.sweep.parameter == SweepParameter::Omega)
            throw config_error("config.outputs: omega sweeps support only spectrum");
        if ((q == Quantity::RateK || q == Quantity::ShiftK) &&
            sc.sweep.parameter == SweepParameter::Omega)
            throw config_error("config.outputs: omega sweeps support only spectrum");
        for (const NamedConfig& c : sc.configs) {
            if (pairwise && c.emitters.size() != 2)
                throw config_error("config.configs (" + c.name + "): " +
                                   detail::quantity_name(q) + " requires exactly 2 emitters");
            const bool detuned = std::any_of(c.emitters.begin(), c.emitters.end(),
                                             [](const EmitterSpec& e) { return e.detuning != 0.0; });
            if (detuned && c.emitters.size() != 2 &&
                (q == Quantity::RateK || q == Quantity::ShiftK))
                throw config_error("config.configs (" + c.name +
                                   "): detuned configurations support exactly 2 emitters");
        }
    }
    if (sc.sweep.parameter == SweepParameter::Detuning)
        for (const NamedConfig& c : sc.configs)
            if (c.emitters.size() != 2)
                throw config_error("config.configs (" + c.name +
                                   "): detuning sweeps require exactly 2 emitters");

    return sc;
}

inline std::vector<double> sweep_grid(const SweepSpec& sw) {
    std::vector<double> grid(static_cast<std::size_t>(sw.points));
    const double n1 = static_cast<double>(sw.points - 1);
    for (int i = 0; i < sw.points; ++i) {
        const double t = static_cast<double>(i) / n1;
        grid[static_cast<std::size_t>(i)] =
            sw.spacing == Spacing::Linear
                ? sw.from + (sw.to - sw.from) * t
                : std::exp(std::log(sw.from) + (std::log(sw.to) - std::log(sw.from)) * t);
    }
    return grid;
}

namespace detail {

struct ColumnSpec {
    Quantity quantity;
    std::size_t cfg = 0;
    std::size_t model = 0;  // index into scenario.models (ratios ignore it)
    std::size_t k = 0;      // branch index for rate_k / shift_k
};

inline std::string column_name(const Scenario& sc, const ColumnSpec& col) {
    std::string name = quantity_name(col.quantity);
    if (col.quantity == Quantity::RateK || col.quantity == Quantity::ShiftK) {
        name = (col.quantity == Quantity::RateK ? "rate_" : "shift_") + std::to_string(col.k);
    }
    if (col.quantity != Quantity::ReRatio && col.quantity != Quantity::Mag2Ratio)
        name += sc.models[col.model] == InteractionModel::Exact ? "_exact" : "_rwa";
    if (sc.configs.size() > 1) name += "_" + sc.configs[col.cfg].name;
    return name;
}

inline std::vector<EmitterSpec> scaled_emitters(const std::vector<EmitterSpec>& base,
                                                double scale) {
    std::vector<EmitterSpec> out = base;
    for (EmitterSpec& e : out) e.position *= scale;
    return out;
}

inline double pair_delta(const std::vector<EmitterSpec>& pair) {
    return 0.5 * (pair[0].detuning - pair[1].detuning);
}

} // namespace detail

// Evaluates the scenario on its sweep grid. Grid points are independent and
// are dispatched across `threads` workers with a static partition; rows are
// assembled in ascending parameter order, so repeated runs (any thread
// count) produce identical tables.
inline ResultTable run_scenario(const Scenario& sc, int threads = 1) {
    const std::vector<double> grid = sweep_grid(sc.sweep);
    const std::size_t npts = grid.size();

    // Column layout.
    std::vector<detail::ColumnSpec> cols;
    for (Quantity q : sc.outputs) {
        for (std::size_t ci = 0; ci < sc.configs.size(); ++ci) {
            const std::size_t nmodes = sc.configs[ci].emitters.size();
            switch (q) {
                case Quantity::ReRatio:
                case Quantity::Mag2Ratio:
                    cols.push_back({q, ci, 0, 0});
                    break;
                case Quantity::RateK:
                case Quantity::ShiftK:
                    for (std::size_t mi = 0; mi < sc.models.size(); ++mi)
                        for (std::size_t k = 0; k < nmodes; ++k) cols.push_back({q, ci, mi, k});
                    break;
                default:
                    for (std::size_t mi = 0; mi < sc.models.size(); ++mi)
                        cols.push_back({q, ci, mi, 0});
            }
        }
    }

    ResultTable table;
    table.columns.push_back("param");
    for (const detail::ColumnSpec& c : cols) table.columns.push_back(detail::column_name(sc, c));
    const json cfg_json = scenario_to_json(sc);
    table.config_json = cfg_json.dump();
    table.config_hash = detail::fnv1a(table.config_json);
    table.rows.assign(npts, std::vector<double>(cols.size() + 1, 0.0));

    // Which (config, model) combinations need the tracked N-atom eigenroute.
    const bool wants_modes =
        std::find_if(sc.outputs.begin(), sc.outputs.end(), [](Quantity q) {
            return q == Quantity::RateK || q == Quantity::ShiftK;
        }) != sc.outputs.end();

    struct TrackedSet {
        std::size_t cfg, model;
        std::vector<InteractionMatrix> mats;
        std::vector<collective::ModeBranch> branches;
    };
    std::vector<TrackedSet> tracked;
    if (wants_modes && sc.sweep.parameter == SweepParameter::Scale) {
        for (std::size_t ci = 0; ci < sc.configs.size(); ++ci) {
            if (sc.configs[ci].emitters.size() == 2 &&
                detail::pair_delta(sc.configs[ci].emitters) != 0.0)
                continue;  // pair closed form handles detuned pairs
            for (std::size_t mi = 0; mi < sc.models.size(); ++mi) {
                TrackedSet ts;
                ts.cfg = ci;
                ts.model = mi;
                ts.mats.resize(npts);
                tracked.push_back(std::move(ts));
            }
        }
    }

    // Interactions that are constant across detuning / omega sweeps.
    std::vector<std::vector<complexd>> fixed_j(sc.configs.size(),
                                               std::vector<complexd>(sc.models.size()));
    if (sc.sweep.parameter != SweepParameter::Scale) {
        for (std::size_t ci = 0; ci < sc.configs.size(); ++ci)
            for (std::size_t mi = 0; mi < sc.models.size(); ++mi)
                fixed_j[ci][mi] =
                    emitters::interaction(sc.configs[ci].emitters[0], sc.configs[ci].emitters[1],
                                          sc.models[mi], sc.field_model);
    }

    std::vector<std::exception_ptr> failures(npts);

    auto eval_point = [&](std::size_t p) {
        const double param = grid[p];
        std::vector<double>& row = table.rows[p];
        row[0] = param;

        for (TrackedSet& ts : tracked)
            ts.mats[p] = emitters::interaction_matrix(
                detail::scaled_emitters(sc.configs[ts.cfg].emitters, param),
                sc.models[ts.model], sc.field_model);

        for (std::size_t c = 0; c < cols.size(); ++c) {
            const detail::ColumnSpec& col = cols[c];
            const NamedConfig& cfg = sc.configs[col.cfg];
            double value = std::numeric_limits<double>::quiet_NaN();
            switch (col.quantity) {
                case Quantity::ReJ:
                case Quantity::ImJ: {
                    const auto pair = detail::scaled_emitters(cfg.emitters, param);
                    const complexd jj = emitters::interaction(pair[0], pair[1],
                                                              sc.models[col.model],
                                                              sc.field_model);
                    value = col.quantity == Quantity::ReJ ? jj.real() : jj.imag();
                    break;
                }
                case Quantity::ReRatio:
                case Quantity::Mag2Ratio: {
                    const auto pair = detail::scaled_emitters(cfg.emitters, param);
                    const emitters::InteractionRatio r =
                        emitters::interaction_ratio(pair[0], pair[1], sc.field_model);
                    const auto& opt =
                        col.quantity == Quantity::ReRatio ? r.re_ratio : r.mag2_ratio;
                    if (opt) value = *opt;
                    break;
                }
                case Quantity::RateK:
                case Quantity::ShiftK: {
                    const bool pair_route =
                        cfg.emitters.size() == 2 &&
                        (sc.sweep.parameter == SweepParameter::Detuning ||
                         detail::pair_delta(cfg.emitters) != 0.0);
                    if (!pair_route) break;  // filled by the tracking pass
                    const double delta = sc.sweep.parameter == SweepParameter::Detuning
                                             ? param
                                             : detail::pair_delta(cfg.emitters);
                    complexd jj;
                    if (sc.sweep.parameter == SweepParameter::Detuning) {
                        jj = fixed_j[col.cfg][col.model];
                    } else {
                        const auto pair = detail::scaled_emitters(cfg.emitters, param);
                        jj = emitters::interaction(pair[0], pair[1], sc.models[col.model],
                                                   sc.field_model);
                    }
                    const auto [plus, minus] = collective::two_atom_detuned(jj, delta);
                    const collective::CollectiveMode& mode = col.k == 0 ? plus : minus;
                    value = col.quantity == Quantity::RateK ? mode.decay_rate() : mode.shift();
                    break;
                }
                case Quantity::Spectrum: {
                    const complexd jj = fixed_j[col.cfg][col.model];
                    value = collective::two_atom_spectrum({param}, jj,
                                                          detail::pair_delta(cfg.emitters))[0];
                    break;
                }
            }
            row[c + 1] = value;
        }
    };

    int nthreads = std::max(1, threads);
    nthreads = std::min<int>(nthreads, static_cast<int>(npts));
    if (nthreads <= 1) {
        for (std::size_t p = 0; p < npts; ++p) {
            try {
                eval_point(p);
            } catch (...) {
                failures[p] = std::current_exception();
            }
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t p = static_cast<std::size_t>(t); p < npts;
                     p += static_cast<std::size_t>(nthreads)) {
                    try {
                        eval_point(p);
                    } catch (...) {
                        failures[p] = std::current_exception();
                    }
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    for (std::size_t p = 0; p < npts; ++p) {
        if (!failures[p]) continue;
        try {
            std::rethrow_exception(failures[p]);
        } catch (const config_error&) {
            throw;
        } catch (const std::exception& e) {
            throw numerical_error("row " + std::to_string(p) +
                                  " (param=" + std::to_string(grid[p]) + "): " + e.what());
        }
    }

    // Sequential branch-matching pass for the tracked eigenroutes.
    for (TrackedSet& ts : tracked) {
        std::vector<collective::SweepPoint> sweep;
        sweep.reserve(npts);
        for (std::size_t p = 0; p < npts; ++p)
            sweep.push_back({grid[p], std::move(ts.mats[p])});
        ts.branches = collective::track_modes(sweep);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const detail::ColumnSpec& col = cols[c];
            if ((col.quantity != Quantity::RateK && col.quantity != Quantity::ShiftK) ||
                col.cfg != ts.cfg || col.model != ts.model)
                continue;
            for (std::size_t p = 0; p < npts; ++p)
                table.rows[p][c + 1] = col.quantity == Quantity::RateK
                                           ? ts.branches[col.k].rate(p)
                                           : ts.branches[col.k].shift(p);
        }
    }

    return table;
}

namespace detail {

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace detail

inline void write_csv(const ResultTable& table, std::ostream& os) {
    os << "# superrad " << version_string << "\n";
    os << "# config-hash: " << detail::hash_hex(table.config_hash) << "\n";
    os << "# config: " << table.config_json << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const std::vector<double>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << detail::format_value(row[i]);
        os << "\n";
    }
}

inline void write_json(const ResultTable& table, std::ostream& os) {
    json j;
    j["tool"] = "superrad";
    j["version"] = version_string;
    j["config_hash"] = detail::hash_hex(table.config_hash);
    j["config"] = json::parse(table.config_json);
    j["columns"] = table.columns;
    json rows = json::array();
    for (const std::vector<double>& row : table.rows) rows.push_back(row);
    j["rows"] = rows;
    os << j.dump(2) << "\n";
}

} // namespace superrad::scenario

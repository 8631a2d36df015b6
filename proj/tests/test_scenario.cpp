#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "superrad/presets.hpp"
#include "superrad/scenario.hpp"

using namespace superrad;
using namespace superrad::scenario;

namespace {

json minimal_config() {
    return json::parse(R"({
        "field_model": "vector",
        "models": ["exact", "rwa"],
        "configs": [{"name": "xx", "emitters": [
            {"position": [0, 0, 0], "dipole": [1, 0, 0], "detuning": 0.0},
            {"position": [0, 0, 1], "dipole": [1, 0, 0], "detuning": 0.0}]}],
        "sweep": {"parameter": "scale", "from": 0.5, "to": 2.0, "points": 4,
                  "spacing": "linear"},
        "outputs": ["re_J"]
    })");
}

std::string csv_of(const ResultTable& table) {
    std::ostringstream os;
    write_csv(table, os);
    return os.str();
}

} // namespace

TEST_CASE("config schema violations carry field paths", "[scenario]") {
    auto expect_error = [](json j, const std::string& fragment) {
        try {
            parse_scenario(j);
            FAIL("expected config_error for " + fragment);
        } catch (const config_error& e) {
            INFO(e.what());
            REQUIRE(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };

    json j = minimal_config();
    j["typo_key"] = 1;
    expect_error(j, "typo_key");

    j = minimal_config();
    j["sweep"]["points"] = 1;
    expect_error(j, "sweep.points");

    j = minimal_config();
    j["sweep"]["spacing"] = "log";
    j["sweep"]["from"] = -1.0;
    expect_error(j, "sweep");

    j = minimal_config();
    j["sweep"]["from"] = 3.0;  // from >= to
    expect_error(j, "sweep");

    j = minimal_config();
    j["configs"][0]["emitters"][0]["dipole"] = {1, 1, 0};
    expect_error(j, "emitters[0]");

    j = minimal_config();
    j["configs"][0]["emitters"][0]["positionn"] = {0, 0, 0};
    expect_error(j, "positionn");

    j = minimal_config();
    j["outputs"] = {"re_J", "re_J"};
    expect_error(j, "outputs[1]");

    j = minimal_config();
    j["outputs"] = {"spectrum"};
    expect_error(j, "spectrum");

    j = minimal_config();
    j["models"] = {"exact"};
    j["outputs"] = {"re_ratio"};
    expect_error(j, "re_ratio");

    j = minimal_config();
    j["configs"].push_back(j["configs"][0]);
    expect_error(j, "name");

    j = minimal_config();
    j["configs"][0]["ring"] = {{"n", 2}, {"circumradius", 1.0}, {"dipole_style", "radial"}};
    expect_error(j, "ring");
}

TEST_CASE("presets are listed and round-trip through serialization", "[scenario]") {
    const auto presets = list_presets();
    REQUIRE(presets.size() >= 10);
    bool has_fig7 = false;
    for (const auto& [name, desc] : presets) {
        CAPTURE(name);
        REQUIRE_FALSE(desc.empty());
        if (name == "fig7") has_fig7 = true;
        const Scenario sc = make_preset(name);
        const json round = scenario_to_json(parse_scenario(scenario_to_json(sc)));
        REQUIRE(round.dump() == scenario_to_json(sc).dump());
    }
    REQUIRE(has_fig7);
    REQUIRE_THROWS_AS(make_preset("fig99"), config_error);
}

TEST_CASE("degenerate far-field sweep decouples the pair", "[scenario]") {
    json j = minimal_config();
    j["sweep"] = {{"parameter", "scale"}, {"from", 40.0}, {"to", 60.0},
                  {"points", 2}, {"spacing", "linear"}};
    j["outputs"] = {"rate_k"};
    const ResultTable t = run_scenario(parse_scenario(j));
    REQUIRE(t.rows.size() == 2);
    for (const std::string col : {"rate_0_exact", "rate_1_exact", "rate_0_rwa", "rate_1_rwa"})
        for (const auto& row : t.rows)
            REQUIRE(row[t.column_index(col)] == Catch::Approx(1.0).margin(0.02));
}

TEST_CASE("scale sweep matches direct library calls", "[scenario]") {
    const Scenario sc = parse_scenario(minimal_config());
    const ResultTable t = run_scenario(sc);
    REQUIRE(t.columns.size() == 3);
    REQUIRE(t.rows.size() == 4);
    for (const auto& row : t.rows) {
        const double s = row[0];
        const auto [e1, e2] = emitters::xx_pair(s);
        REQUIRE(row[t.column_index("re_J_exact")] ==
                emitters::interaction(e1, e2, InteractionModel::Exact).real());
        REQUIRE(row[t.column_index("re_J_rwa")] ==
                emitters::interaction(e1, e2, InteractionModel::RWA).real());
    }
    // ascending parameter order
    for (std::size_t i = 1; i < t.rows.size(); ++i) REQUIRE(t.rows[i][0] > t.rows[i - 1][0]);
}

TEST_CASE("detuning sweep uses the closed-form pair rates", "[scenario]") {
    json j = minimal_config();
    j["sweep"] = {{"parameter", "detuning"}, {"from", 0.0}, {"to", 5.0},
                  {"points", 6}, {"spacing", "linear"}};
    j["outputs"] = {"rate_k", "shift_k"};
    const ResultTable t = run_scenario(parse_scenario(j));
    const auto [e1, e2] = emitters::xx_pair(1.0);
    const complexd jj = emitters::interaction(e1, e2, InteractionModel::Exact);
    for (const auto& row : t.rows) {
        const auto [plus, minus] = collective::two_atom_detuned(jj, row[0]);
        REQUIRE(row[t.column_index("rate_0_exact")] == plus.decay_rate());
        REQUIRE(row[t.column_index("rate_1_exact")] == minus.decay_rate());
        REQUIRE(row[t.column_index("shift_0_exact")] == plus.shift());
    }
}

TEST_CASE("omega sweep produces the two-atom spectrum", "[scenario]") {
    json j = minimal_config();
    j["sweep"] = {{"parameter", "omega"}, {"from", -6.0}, {"to", 6.0},
                  {"points", 121}, {"spacing", "linear"}};
    j["outputs"] = {"spectrum"};
    const ResultTable t = run_scenario(parse_scenario(j));
    const auto [e1, e2] = emitters::xx_pair(1.0);
    for (auto [mi, name] : {std::pair<InteractionModel, std::string>{
                                InteractionModel::Exact, "spectrum_exact"},
                            {InteractionModel::RWA, "spectrum_rwa"}}) {
        const complexd jj = emitters::interaction(e1, e2, mi);
        for (const auto& row : t.rows)
            REQUIRE(row[t.column_index(name)] ==
                    collective::two_atom_spectrum({row[0]}, jj, 0.0)[0]);
    }
}

TEST_CASE("tracked triangle branches fill rate and shift columns", "[scenario]") {
    const Scenario sc = make_preset("fig7");
    Scenario small = sc;
    small.sweep.points = 41;
    const ResultTable t = run_scenario(small, 3);
    REQUIRE(t.columns.size() == 1 + 2 * 3);
    // branches are decay-rate continuous; mean rate is one at every point
    for (const auto& row : t.rows) {
        double sum_exact = 0.0;
        for (int k = 0; k < 3; ++k)
            sum_exact += row[t.column_index("rate_" + std::to_string(k) + "_exact")];
        REQUIRE(sum_exact == Catch::Approx(3.0).margin(1e-9));
    }
}

TEST_CASE("runs are deterministic across thread counts", "[scenario]") {
    const Scenario sc = make_preset("fig3a");
    Scenario small = sc;
    small.sweep.points = 60;
    const std::string t1 = csv_of(run_scenario(small, 1));
    const std::string t4 = csv_of(run_scenario(small, 4));
    const std::string t4b = csv_of(run_scenario(small, 4));
    REQUIRE(t1 == t4);
    REQUIRE(t4 == t4b);
}

TEST_CASE("CSV and JSON outputs carry the audit header", "[scenario]") {
    const Scenario sc = parse_scenario(minimal_config());
    const ResultTable t = run_scenario(sc);
    const std::string csv = csv_of(t);
    REQUIRE(csv.rfind("# superrad", 0) == 0);
    REQUIRE(csv.find("# config-hash: ") != std::string::npos);
    REQUIRE(csv.find("param,re_J_exact,re_J_rwa") != std::string::npos);
    // no missing cells: every data line has the full column count
    std::istringstream lines(csv);
    std::string line;
    std::size_t data_lines = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("param", 0) == 0) continue;
        REQUIRE(std::count(line.begin(), line.end(), ',') ==
                static_cast<long>(t.columns.size() - 1));
        ++data_lines;
    }
    REQUIRE(data_lines == t.rows.size());

    std::ostringstream jo;
    write_json(t, jo);
    const json parsed = json::parse(jo.str());
    REQUIRE(parsed["columns"].size() == t.columns.size());
    REQUIRE(parsed["rows"].size() == t.rows.size());
    REQUIRE(parsed["config"]["sweep"]["points"] == 4);
}

TEST_CASE("column lookup", "[scenario]") {
    const ResultTable t = run_scenario(parse_scenario(minimal_config()));
    REQUIRE(t.column_index("param") == 0);
    REQUIRE_THROWS_AS(t.column_index("nope"), std::out_of_range);
}

// superrad: scenario runner for collective-emission sweeps.
//
//   superrad run <config-file> [--out <path>] [--format csv|json] [--threads N]
//   superrad preset <name> [--out <path>] [--format csv|json] [--threads N]
//   superrad list-presets
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "superrad/superrad.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

int emit_table(const superrad::scenario::ResultTable& table, const std::string& out_path,
               const std::string& format) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return exit_config;
        }
        os = &file;
    }
    if (format == "json")
        superrad::scenario::write_json(table, *os);
    else
        superrad::scenario::write_csv(table, *os);
    return exit_ok;
}

int run_and_emit(const superrad::scenario::Scenario& sc, const std::string& out_path,
                 const std::string& format, int threads) {
    const superrad::scenario::ResultTable table = superrad::scenario::run_scenario(sc, threads);
    return emit_table(table, out_path, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"collective spontaneous emission with and without the rotating-wave "
                 "approximation"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_path;
    std::string format = "csv";
    int threads = 1;

    CLI::App* run = app.add_subcommand("run", "run a scenario from a JSON config file");
    run->add_option("config-file", config_path, "scenario configuration file")->required();
    run->add_option("--out", out_path, "output path (default: stdout)");
    run->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--threads", threads, "worker threads for the sweep grid")
        ->check(CLI::PositiveNumber);

    CLI::App* preset = app.add_subcommand("preset", "run a named preset scenario");
    preset->add_option("name", preset_name, "preset name (see list-presets)")->required();
    preset->add_option("--out", out_path, "output path (default: stdout)");
    preset->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    preset->add_option("--threads", threads, "worker threads for the sweep grid")
        ->check(CLI::PositiveNumber);

    CLI::App* list = app.add_subcommand("list-presets", "list available presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (list->parsed()) {
            for (const auto& [name, description] : superrad::scenario::list_presets())
                std::cout << name << "\t" << description << "\n";
            return exit_ok;
        }
        if (preset->parsed())
            return run_and_emit(superrad::scenario::make_preset(preset_name), out_path, format,
                                threads);

        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config file " << config_path << "\n";
            return exit_config;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "error: " << config_path << " is not valid JSON: " << e.what() << "\n";
            return exit_config;
        }
        return run_and_emit(superrad::scenario::parse_scenario(j), out_path, format, threads);
    } catch (const superrad::scenario::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const superrad::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
}

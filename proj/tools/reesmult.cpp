#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "reesmult/job.hpp"

namespace {

using reesmult::errc;
using reesmult::Error;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) reesmult::fail(errc::bad_request, "cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Overrides {
    std::string input = "-";
    std::optional<std::string> mode;
    std::optional<std::string> format;
    std::optional<int> workers;
    std::optional<int> offset;
    std::optional<int> shells;
    std::optional<int> offset_cap;
    std::optional<int> box_margin;
    std::optional<int> box_cap;
};

void add_common(CLI::App* sub, Overrides& ov) {
    sub->add_option("job", ov.input, "job document path, or - for stdin");
    sub->add_flag_callback("--formula", [&ov] { ov.mode = "formula"; },
                           "evaluate the closed form only");
    sub->add_flag_callback("--oracle", [&ov] { ov.mode = "oracle"; },
                           "run the graded-piece computation only");
    sub->add_flag_callback("--verify", [&ov] { ov.mode = "verify"; },
                           "run both and compare (default)");
    sub->add_option("--format", ov.format, "json or table");
    sub->add_option("--workers", ov.workers, "worker threads; 1 = serial, 0 = all");
    sub->add_option("--offset", ov.offset, "first sample offset for fits");
    sub->add_option("--shells", ov.shells, "validation shells after each fit");
    sub->add_option("--offset-cap", ov.offset_cap, "give up doubling the offset here");
    sub->add_option("--box-margin", ov.box_margin, "margin added to graded sum boxes");
    sub->add_option("--box-cap", ov.box_cap, "hard limit for box doubling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicities of Rees and extended Rees algebras of monomial ideals"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> kCommands = {
        {"run", "execute the command named inside the job document"},
        {"colength", "vector space dimension of R modulo a zero-dimensional ideal"},
        {"mixed-mult", "mixed multiplicity table of an m-primary ideal with companions"},
        {"rees-mult", "multiplicity of the multi-graded Rees algebra"},
        {"ext-rees-mult", "multiplicity of the multi-graded extended Rees algebra"},
        {"katz-verma", "two-ideal multiplicity of (t^-1, J, It) on the extended Rees algebra"},
        {"identity-check", "compare both sides of a mixed-multiplicity identity"},
        {"remark-check", "extended Rees value against e(R) plus Rees subfamily values"},
    };

    std::map<std::string, Overrides> per_command;
    for (const auto& [name, desc] : kCommands) {
        auto* sub = app.add_subcommand(name, desc);
        add_common(sub, per_command[name]);
    }

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const Overrides& ov = per_command[name];
    std::string format = ov.format.value_or("json");
    try {
        std::string text = read_input(ov.input);
        reesmult::JobSpec spec = reesmult::parse_job(text, name == "run" ? "" : name);
        if (ov.mode) spec.mode = *ov.mode == "formula"  ? reesmult::Mode::FormulaOnly
                                 : *ov.mode == "oracle" ? reesmult::Mode::OracleOnly
                                                        : reesmult::Mode::Verify;
        if (ov.format) spec.format = *ov.format;
        if (const char* env = std::getenv("REESMULT_WORKERS")) {
            try {
                spec.options.workers = std::stoi(env);
            } catch (const std::exception&) {
                reesmult::fail(errc::bad_request, "REESMULT_WORKERS must be an integer");
            }
        }
        if (ov.workers) spec.options.workers = *ov.workers;
        if (ov.offset) spec.options.offset = *ov.offset;
        if (ov.shells) spec.options.validation_shells = *ov.shells;
        if (ov.offset_cap) spec.options.offset_cap = *ov.offset_cap;
        if (ov.box_margin) spec.options.box_margin = *ov.box_margin;
        if (ov.box_cap) spec.options.box_cap = *ov.box_cap;
        format = spec.format;

        auto result = reesmult::run_job(spec);
        std::cout << reesmult::render_report(result.report, spec.format);
        return result.exit_code;
    } catch (const Error& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"code", reesmult::errc_name(e.code())}, {"message", e.what()}};
        std::cout << reesmult::render_report(err, format == "table" ? "table" : "json");
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"code", "Internal"}, {"message", e.what()}};
        std::cout << reesmult::render_report(err, format == "table" ? "table" : "json");
        return 1;
    }
}

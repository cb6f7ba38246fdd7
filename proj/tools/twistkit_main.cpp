#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistkit/checks.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/zoo.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw twistkit::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistkit - exact twist constructions on invariant coframe models"};
    app.require_subcommand(1);

    std::string check_file, only, format = "text";
    std::uint64_t seed = 0;
    CLI::App* check = app.add_subcommand("check", "parse a model file and run its checks");
    check->add_option("file", check_file, "model file")->required();
    check->add_option("--only", only, "comma-separated subset of check names to run");
    check->add_option("--format", format, "text|machine")->check(CLI::IsMember({"text", "machine"}));
    check->add_option("--seed", seed, "seed recorded in machine reports");

    std::string example_name;
    bool emit_model = false;
    CLI::App* example = app.add_subcommand("example", "print a registry example");
    example->add_option("name", example_name, "registry name, e.g. halfline_t3")->required();
    example->add_flag("--emit-model", emit_model, "print the example as a model file");

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "parse a model file and validate d^2 = 0");
    validate->add_option("file", validate_file, "model file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            twistkit::ModelFile file = twistkit::parse_model_file(read_file(check_file));
            if (!only.empty()) {
                auto keep = split_csv(only);
                std::vector<twistkit::CheckInvocation> filtered;
                for (const auto& inv : file.checks) {
                    for (const auto& name : keep) {
                        if (inv.name == name) {
                            filtered.push_back(inv);
                            break;
                        }
                    }
                }
                file.checks = filtered;
            }
            auto reports = twistkit::run_checks(file);
            if (format == "machine") {
                std::cout << twistkit::render_machine(reports, check_file, seed);
            } else {
                std::cout << twistkit::render_text(reports, check_file);
            }
            return twistkit::exit_code(reports);
        }
        if (example->parsed()) {
            twistkit::NamedExample ex = twistkit::make_example(example_name);
            if (emit_model) {
                std::cout << twistkit::print_model_file(ex.file);
            } else {
                std::cout << ex.name << "\n";
                if (!ex.domain_note.empty()) std::cout << "note: " << ex.domain_note << "\n";
                std::cout << "checks:";
                for (size_t k = 0; k < ex.file.checks.size(); ++k) {
                    std::cout << " " << ex.file.checks[k].name
                              << (ex.expected[k] ? "(expect pass)" : "(expect fail)");
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (validate->parsed()) {
            twistkit::ModelFile file = twistkit::parse_model_file(read_file(validate_file));
            twistkit::ValidationReport report = twistkit::validate_model(file.model);
            std::cout << report.summary();
            return report.ok() ? 0 : 1;
        }
    } catch (const twistkit::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

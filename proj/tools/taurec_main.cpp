#include "taurec/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

taurec::ReportFormat to_format(const std::string& s) {
    return s == "json" ? taurec::ReportFormat::json : taurec::ReportFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact recursive tau-method solver for linear ODEs with polynomial coefficients"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    unsigned bound = 12;
    unsigned order = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "problem file")->required();
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_analyze = app.add_subcommand(
        "analyze", "operator profile, echelon reduction, kernel and inaccessible degrees");
    add_common(c_analyze);

    CLI::App* c_canonical =
        app.add_subcommand("canonical", "table of canonical polynomials and residuals");
    add_common(c_canonical);
    c_canonical->add_option("--bound", bound, "largest index to generate")->required();

    CLI::App* c_solve = app.add_subcommand("solve", "solve the perturbed problem at a given order");
    add_common(c_solve);
    c_solve->add_option("--order", order, "approximation order n")->required();

    CLI::App* c_check = app.add_subcommand("check", "run the invariant suite on the problem file");
    c_check->add_option("file", path, "problem file")->required();
    c_check->add_option("--bound", bound, "index bound for the identity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    taurec::ProblemFile file;
    try {
        file = taurec::load_problem_file(path);
    } catch (const taurec::ProblemParseError& e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return 2;
    }

    // The --format flag wins; otherwise a format fixed in [options] applies.
    CLI::App* active = app.get_subcommands().front();
    const CLI::Option* fopt = active->get_option_no_throw("--format");
    std::string effective = format;
    if ((fopt == nullptr || fopt->count() == 0) && file.options.format)
        effective = *file.options.format;
    const taurec::ReportFormat fmt = to_format(effective);

    if (c_analyze->parsed()) return taurec::cmd_analyze(file, fmt, std::cout, std::cerr);
    if (c_canonical->parsed())
        return taurec::cmd_canonical(file, bound, fmt, std::cout, std::cerr);
    if (c_solve->parsed()) return taurec::cmd_solve(file, order, fmt, std::cout, std::cerr);
    if (c_check->parsed()) {
        std::optional<unsigned> check_bound;
        if (c_check->count("--bound") > 0) check_bound = bound;
        return taurec::cmd_check(file, check_bound, std::cout, std::cerr);
    }
    return 2;
}

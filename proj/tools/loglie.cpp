#include "loglie/analysis.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace loglie;

namespace {

int analyze(const std::string& path, bool as_json, std::optional<unsigned> jet, std::optional<std::size_t> budget)
{
    InputSpec input;
    try {
        input = read_input(path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    AnalyzeOptions options;
    options.jet = jet;
    if (budget)
        input.budget = budget;
    AnalysisReport r = run_analyze(input, options);
    std::cout << emit_report(r, as_json ? Format::Json : Format::Text);
    for (const auto& e : r.errors)
        std::cerr << "error: " << e << "\n";
    return r.exit_code;
}

int free_check(const std::string& path)
{
    InputSpec input;
    try {
        input = read_input(path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    FreeResult r = run_free(input);
    (r.exit_code == kOk ? std::cout : std::cerr) << r.message << "\n";
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"logarithmic derivations and initial Lie algebras of hypersurface singularities"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    std::optional<unsigned> jet;
    std::optional<std::size_t> budget;
    auto* an = app.add_subcommand("analyze", "run the full pipeline on an input file");
    an->add_option("file", path, "input file")->required();
    an->add_flag("--json", as_json, "emit JSON");
    an->add_option("--jet", jet, "also report dim of the k-jet Lie algebra");
    an->add_option("--budget", budget, "node budget for the sumset search");

    std::string free_path;
    auto* fr = app.add_subcommand("free", "check a candidate basis with Saito's criterion");
    fr->add_option("file", free_path, "input file with basis.1 .. basis.n")->required();

    std::string filter;
    auto* co = app.add_subcommand("corpus", "run the built-in examples");
    co->add_option("--filter", filter, "substring of entry names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }
    try {
        if (*an)
            return analyze(path, as_json, jet, budget);
        if (*fr)
            return free_check(free_path);
        return run_corpus(builtin_corpus(), filter, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

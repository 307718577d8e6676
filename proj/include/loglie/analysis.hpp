#pragma once

#include "loglie/weights.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loglie {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of an input file: `key = value` lines, `#` comments.
struct InputSpec {
    std::vector<std::string> vars;
    std::string f;
    std::vector<std::vector<std::string>> basis; ///< basis.1 .. basis.n
    std::optional<unsigned> jet;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> bound;
};

InputSpec parse_input(const std::string& text);
InputSpec read_input(const std::string& path);

enum ExitCode { kOk = 0, kInputError = 1, kUnsupported = 2, kInternal = 3 };

struct AnalysisReport {
    std::optional<unsigned> order;
    std::optional<std::vector<Rational>> qh_weights;
    std::optional<bool> product_test;
    std::optional<bool> free;
    std::optional<std::string> saito_det;
    std::optional<std::string> saito_unit;
    std::optional<std::size_t> initial_dim;
    std::optional<bool> solvable;
    std::optional<bool> nilpotent;
    std::optional<std::size_t> levi_dim;
    std::optional<std::size_t> levi_rank;
    std::optional<std::size_t> radical_dim;
    std::optional<std::size_t> kernel_dim;
    std::optional<bool> reductive;
    std::optional<std::string> linear_verdict;
    std::optional<std::size_t> rank_l0;
    std::optional<std::size_t> n_D;
    std::optional<std::size_t> s_D;
    std::vector<Weight> weights;
    std::vector<std::size_t> multiplicities;
    std::optional<std::size_t> M; ///< nullopt with bound set means -infinity
    std::vector<Weight> maximizer;
    std::optional<Dimension> sing_dim;
    std::optional<std::string> bound;
    std::optional<std::size_t> jet_dim;
    std::vector<std::string> flags;
    std::vector<std::string> errors;
    int exit_code = kOk;

    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
    std::optional<unsigned> jet;
    SearchLimits limits;
};

/// Full pipeline; stage failures are recorded in `errors` and set `exit_code`.
AnalysisReport run_analyze(const InputSpec& input, AnalyzeOptions options = {});

/// Violated report invariants, empty when consistent.
std::vector<std::string> report_inconsistencies(const AnalysisReport& r, std::size_t n);

enum class Format { Json, Text };
std::string emit_report(const AnalysisReport& r, Format format);
AnalysisReport report_from_json(const std::string& text);

struct FreeResult {
    SaitoCheck check;
    int exit_code = kOk;
    std::string message;
};
FreeResult run_free(const InputSpec& input);

struct CorpusEntry {
    std::string name;
    InputSpec input;
    /// Mismatches against the expected values.
    std::function<std::vector<std::string>(const AnalysisReport&)> expect;
};

const std::vector<CorpusEntry>& builtin_corpus();

/// Runs entries whose name contains `filter`; prints a table and returns the exit code.
int run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter, std::ostream& out);

} // namespace loglie

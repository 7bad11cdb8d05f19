#ifndef FA_ANALYSIS_HPP
#define FA_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fa/automaton.hpp"
#include "fa/powers.hpp"
#include "fa/verdict.hpp"

namespace fa {

/// One requested property row.  k-power, ge-k-power and non-k-power carry k;
/// pattern carries the variable sequence.
struct PropertySpec {
    std::string name;
    int k = 0;
    std::optional<Pattern> pattern;
};

struct AnalysisRequest {
    Automaton automaton;
    std::vector<PropertySpec> properties;  // empty selects a default set
    std::string mode = "exists";           // exists | infinite | shortest | all
    bool verify = false;
    Budgets budgets;
};

struct RowReport {
    std::string property;  // display name, e.g. "k-power(k=2)"
    std::string mode;
    std::string verdict;       // yes | no | inconclusive
    std::string witness;       // formatted word, "" when absent
    int witness_len = -1;      // -1 when absent
    std::string bound_text;    // instantiated formula, e.g. "2n^2-1=31"
    std::string method;
    std::string note;
    std::string oracle;        // agree | disagree | skipped | "" when not verifying
    double elapsed_ms = 0;
};

struct AnalysisReport {
    int n = 0;
    int t = 0;
    std::string kind;
    std::vector<RowReport> rows;
    bool any_disagreement = false;
};

/// Runs every requested property under the requested mode.  Budget overruns
/// surface as inconclusive verdicts on the affected row, never as crashes.
AnalysisReport run(const AnalysisRequest& request);

/// Aligned human-readable table.  stable=true drops the timing column so
/// repeated runs are byte-identical.
std::string render_table(const AnalysisReport& report, bool stable);

/// Machine-readable JSON document with the same fields.
std::string render_json(const AnalysisReport& report, bool stable);

} // namespace fa

#endif

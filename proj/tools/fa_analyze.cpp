#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fa/analysis.hpp"
#include "fa/automaton.hpp"
#include "fa/errors.hpp"

namespace {

fa::PropertySpec parse_property(const std::string& text) {
    std::string name = text;
    std::string arg;
    if (auto pos = text.find('='); pos != std::string::npos) {
        name = text.substr(0, pos);
        arg = text.substr(pos + 1);
    }
    fa::PropertySpec spec;
    spec.name = name;
    bool wants_k = (name == "k-power" || name == "non-k-power" || name == "ge-k-power");
    if (wants_k) {
        if (arg.empty()) throw fa::Error(name + " needs =k, e.g. --property " + name + "=2");
        spec.k = std::stoi(arg);
        if (spec.k < 2) throw fa::Error(name + ": k must be at least 2");
    } else if (name == "pattern") {
        spec.pattern = fa::Pattern::parse(arg);
    } else if (!arg.empty()) {
        throw fa::Error(name + " takes no argument");
    }
    static const std::vector<std::string> known{
        "palindrome", "non-palindrome", "k-power",  "ge-k-power", "non-k-power",
        "power",      "non-power",      "bordered", "unbordered", "pattern"};
    if (std::find(known.begin(), known.end(), name) == known.end())
        throw fa::Error("unknown property '" + name + "'");
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-automata word-combinatorics analyzer"};
    std::string input_path;
    std::vector<std::string> property_args;
    std::string mode = "exists";
    std::string format = "table";
    bool verify = false;
    bool stable = false;
    fa::Budgets budgets;

    app.add_option("input", input_path, "automaton description file")->required();
    app.add_option("--property", property_args,
                   "property to analyze: palindrome, non-palindrome, k-power=K, ge-k-power=K, "
                   "non-k-power=K, power, non-power, bordered, unbordered, pattern=\"1 2 1 2\" "
                   "(repeatable; default: a standard set)");
    app.add_option("--mode", mode, "exists | infinite | shortest | all")
        ->check(CLI::IsMember({"exists", "infinite", "shortest", "all"}));
    app.add_flag("--verify", verify, "cross-check each verdict against the brute-force oracle");
    app.add_flag("--stable", stable, "suppress timing so repeated runs are byte-identical");
    app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--budget-states", budgets.states, "state ceiling for tuple constructions");
    app.add_option("--budget-words", budgets.words, "total enumerated-word ceiling per search");
    app.add_option("--budget-monoid", budgets.monoid, "transition-monoid element cap");
    CLI11_PARSE(app, argc, argv);

    try {
        if (budgets.states < 1 || budgets.words < 1 || budgets.monoid < 1)
            throw fa::Error("budgets must be positive");
        fa::AnalysisRequest request;
        request.automaton = fa::parse_automaton_file(input_path);
        for (const auto& text : property_args) request.properties.push_back(parse_property(text));
        request.mode = mode;
        request.verify = verify;
        request.budgets = budgets;

        fa::AnalysisReport report = fa::run(request);
        std::cout << (format == "json" ? fa::render_json(report, stable)
                                       : fa::render_table(report, stable));
        if (report.any_disagreement) {
            std::cerr << "error: oracle disagreement detected\n";
            return 1;
        }
        return 0;
    } catch (const fa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

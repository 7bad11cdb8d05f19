#include "fa/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "fa/borders.hpp"
#include "fa/core.hpp"
#include "fa/errors.hpp"
#include "fa/oracle.hpp"
#include "fa/palindromes.hpp"
#include "fa/wordops.hpp"

namespace fa {

namespace {

int property_rank(const std::string& name) {
    if (name == "palindrome") return 0;
    if (name == "non-palindrome") return 1;
    if (name == "k-power") return 2;
    if (name == "ge-k-power") return 3;
    if (name == "non-k-power") return 4;
    if (name == "power") return 5;
    if (name == "non-power") return 6;
    if (name == "bordered") return 7;
    if (name == "unbordered") return 8;
    if (name == "pattern") return 9;
    return 10;
}

long long sat_mul(long long a, long long b) {
    const long long limit = 1LL << 62;
    if (a != 0 && b > limit / a) return limit;
    return a * b;
}

long long sat_pow(long long n, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r = sat_mul(r, n);
    return r;
}

struct Context {
    const Automaton& a;
    Budgets budgets;
    long long n_trim;   // trimmed, epsilon-free state count
    bool dfa_refined;   // complete DFA over >= 2 letters with >= 2 states
};

/// Formula instantiated with the same n the deciding module uses.
std::string bound_text(const Context& ctx, const std::string& name, const std::string& mode,
                       int k) {
    const long long n = ctx.dfa_refined ? ctx.a.n_states : ctx.n_trim;
    const long long nt = ctx.n_trim;
    auto fmt = [](const std::string& formula, long long value) {
        return formula + "=" + std::to_string(value);
    };
    std::string cutoff_f = ctx.dfa_refined ? "3n-3" : "3n";
    long long cutoff_v = ctx.dfa_refined ? 3 * n - 3 : 3 * n;
    std::string nonpal_f = ctx.dfa_refined ? "3n-4" : "3n-1";
    long long nonpal_v = ctx.dfa_refined ? 3 * n - 4 : 3 * nt - 1;
    bool searching = (mode == "exists" || mode == "shortest");

    if (name == "palindrome") {
        if (searching) return fmt("2n^2-1", 2 * nt * nt - 1);
        if (mode == "all") return fmt(nonpal_f, nonpal_v);
    } else if (name == "non-palindrome") {
        if (searching) return fmt(nonpal_f, nonpal_v);
        if (mode == "all") return fmt("2n^2-1", 2 * nt * nt - 1);
    } else if (name == "k-power") {
        if (searching) return fmt("kn^k", sat_mul(k, sat_pow(nt, k)));
        if (mode == "all") return fmt(cutoff_f, cutoff_v);
    } else if (name == "non-k-power") {
        if (searching || mode == "infinite") return fmt(cutoff_f, cutoff_v);
        if (mode == "all") return fmt("kn^k", sat_mul(k, sat_pow(nt, k)));
    } else if (name == "power") {
        if (searching) return fmt("(n+1)n^(n+1)", sat_mul(nt + 1, sat_pow(nt, nt + 1)));
        if (mode == "all") return fmt(cutoff_f, cutoff_v);
    } else if (name == "non-power") {
        if (searching || mode == "infinite") return fmt(cutoff_f, cutoff_v);
        if (mode == "all") return fmt("(n+1)n^(n+1)", sat_mul(nt + 1, sat_pow(nt, nt + 1)));
    } else if (name == "bordered") {
        if (searching) return fmt("2n^2+n-1", 2 * nt * nt + nt - 1);
    } else if (name == "unbordered") {
        if (searching) return fmt("6n+1", 6 * nt + 1);
        if (mode == "infinite") return fmt("8n^2+18n+5", 8 * nt * nt + 18 * nt + 5);
    }
    return "-";
}

Verdict unsupported(const std::string& why) {
    return Verdict::inconclusive("unsupported", why);
}

Verdict ge_k_power_infinite(const Context& ctx, int k) {
    Automaton b = trim(eliminate_epsilon(ctx.a));
    const int n = b.n_states;
    if (n == 0) return Verdict::no("kth-root-infiniteness");
    bool incomplete = false;
    for (int l = k; l < k + n; ++l) {
        try {
            Verdict v = accepts_infinitely_many_k_powers(b, l, ctx.budgets);
            if (v.holds()) {
                v.note = "l=" + std::to_string(l);
                return v;
            }
        } catch (const StateBudgetExceeded&) {
            incomplete = true;
        }
    }
    if (incomplete)
        return Verdict::inconclusive("kth-root-infiniteness", "state budget cut the l range");
    return Verdict::no("kth-root-infiniteness");
}

Verdict power_infinite(const Context& ctx) {
    Automaton b = trim(eliminate_epsilon(ctx.a));
    const int n = b.n_states;
    if (!is_infinite(b).holds()) return Verdict::no("finite-language");
    bool incomplete = false;
    for (int k = 2; k <= n + 1; ++k) {
        try {
            Verdict v = accepts_infinitely_many_k_powers(b, k, ctx.budgets);
            if (v.holds()) {
                v.note = "k=" + std::to_string(k);
                return v;
            }
        } catch (const StateBudgetExceeded&) {
            incomplete = true;
        }
    }
    return Verdict::inconclusive("kth-root-infiniteness",
                                 incomplete ? "state budget cut the k range"
                                            : "no k in 2..n+1 has infinitely many k-powers");
}

Verdict dispatch(const Context& ctx, const PropertySpec& spec, const std::string& mode) {
    const Automaton& a = ctx.a;
    const Budgets& budgets = ctx.budgets;
    const std::string& name = spec.name;
    bool searching = (mode == "exists" || mode == "shortest");

    if (name == "palindrome") {
        if (searching) return accepts_palindrome(a);
        if (mode == "infinite") return accepts_infinitely_many_palindromes(a);
        return is_palindromic(a);
    }
    if (name == "non-palindrome") {
        if (searching) return negate(is_palindromic(a));
        if (mode == "infinite") return accepts_infinitely_many_nonpalindromes(a);
        return negate(accepts_palindrome(a));
    }
    if (name == "k-power") {
        if (searching) return accepts_k_power(a, spec.k, budgets);
        if (mode == "infinite") return accepts_infinitely_many_k_powers(a, spec.k, budgets);
        return all_k_powers(a, spec.k);
    }
    if (name == "ge-k-power") {
        if (searching) return accepts_ge_k_power(a, spec.k, budgets);
        if (mode == "infinite") return ge_k_power_infinite(ctx, spec.k);
        return unsupported("no bounded test for \"every word has exponent >= k\"");
    }
    if (name == "non-k-power") {
        if (searching) return negate(all_k_powers(a, spec.k));
        if (mode == "infinite") return negate(all_but_finitely_many_k_powers(a, spec.k));
        return negate(accepts_k_power(a, spec.k, budgets));
    }
    if (name == "power") {
        if (searching) return accepts_power(a, budgets);
        if (mode == "infinite") return power_infinite(ctx);
        return all_powers(a);
    }
    if (name == "non-power") {
        if (searching) return negate(all_powers(a));
        if (mode == "infinite") return negate(all_but_finitely_many_powers(a));
        return negate(accepts_power(a, budgets));
    }
    if (name == "bordered") {
        if (searching) return accepts_bordered(a);
        if (mode == "infinite") return accepts_infinitely_many_bordered(a);
        return unsupported("no bounded test for \"every word is bordered\"");
    }
    if (name == "unbordered") {
        if (searching) return accepts_unbordered(a, budgets);
        if (mode == "infinite") return accepts_infinitely_many_unbordered(a, budgets);
        return unsupported("no bounded test for \"every word is unbordered\"");
    }
    if (name == "pattern") {
        if (mode == "exists") return pattern_acceptance(a, *spec.pattern, budgets);
        if (mode == "shortest") {
            Verdict v = pattern_acceptance(a, *spec.pattern, budgets);
            if (v.holds()) v.note = "witness not guaranteed minimal";
            return v;
        }
        return unsupported("pattern supports mode exists only");
    }
    throw Error("unknown property '" + name + "'");
}

/// Exists-style word property checked by the oracle for a row, if any.
std::optional<WordProperty> oracle_target(const std::string& name, const std::string& mode,
                                          bool* negated_all) {
    *negated_all = false;
    if (mode == "exists" || mode == "shortest") {
        if (name == "palindrome") return WordProperty::Palindrome;
        if (name == "non-palindrome") return WordProperty::NonPalindrome;
        if (name == "k-power") return WordProperty::KPower;
        if (name == "ge-k-power") return WordProperty::GeKPower;
        if (name == "non-k-power") return WordProperty::NonKPower;
        if (name == "power") return WordProperty::Power;
        if (name == "non-power") return WordProperty::NonPower;
        if (name == "bordered") return WordProperty::Bordered;
        if (name == "unbordered") return WordProperty::Unbordered;
        return std::nullopt;
    }
    if (mode == "all") {
        *negated_all = true;  // module says yes iff no counterexample exists
        if (name == "palindrome") return WordProperty::NonPalindrome;
        if (name == "non-palindrome") return WordProperty::Palindrome;
        if (name == "k-power") return WordProperty::NonKPower;
        if (name == "non-k-power") return WordProperty::KPower;
        if (name == "power") return WordProperty::NonPower;
        if (name == "non-power") return WordProperty::Power;
        return std::nullopt;
    }
    return std::nullopt;
}

std::string cross_check(const Context& ctx, const PropertySpec& spec, const std::string& mode,
                        const Verdict& v) {
    if (v.outcome == Outcome::Inconclusive) return "skipped";
    bool negated_all = false;
    auto target = oracle_target(spec.name, mode, &negated_all);
    if (!target) return "skipped";

    // Module claims "a word with property P exists" (or, for all-mode rows,
    // "no counterexample with property P exists").
    bool module_exists = negated_all ? !v.holds() : v.holds();

    if (module_exists && v.witness) {
        bool ok = accepts(ctx.a, *v.witness) && word_satisfies(*target, *v.witness, spec.k);
        return ok ? "agree" : "disagree";
    }
    long long bound = decision_bound(*target, ctx.n_trim, spec.k);
    int max_len = static_cast<int>(std::min<long long>(bound, 60));
    OracleReport rep = oracle_decide(ctx.a, *target, spec.k, max_len, ctx.budgets.words);
    bool exhaustive = rep.exhaustive && max_len >= bound;
    if (rep.holds) return module_exists ? "agree" : "disagree";
    if (exhaustive) return module_exists ? "disagree" : "agree";
    return "skipped";
}

} // namespace

AnalysisReport run(const AnalysisRequest& request) {
    const Automaton& a = request.automaton;
    Context ctx{a, request.budgets, trim(eliminate_epsilon(a)).n_states,
                a.kind == Kind::Dfa && a.alphabet.size() >= 2 && a.n_states >= 2};

    std::vector<PropertySpec> props = request.properties;
    if (props.empty()) {
        props = {{"palindrome", 0, std::nullopt}, {"non-palindrome", 0, std::nullopt},
                 {"k-power", 2, std::nullopt},    {"non-k-power", 2, std::nullopt},
                 {"power", 0, std::nullopt},      {"non-power", 0, std::nullopt},
                 {"bordered", 0, std::nullopt},   {"unbordered", 0, std::nullopt}};
    }
    std::stable_sort(props.begin(), props.end(), [](const PropertySpec& x, const PropertySpec& y) {
        if (property_rank(x.name) != property_rank(y.name))
            return property_rank(x.name) < property_rank(y.name);
        return x.k < y.k;
    });

    AnalysisReport report;
    report.n = a.n_states;
    report.t = static_cast<int>(a.transitions.size());
    report.kind = a.kind == Kind::Dfa ? "dfa" : (a.has_epsilon() ? "nfa-eps" : "nfa");

    for (const auto& spec : props) {
        RowReport row;
        row.property = spec.name;
        if (spec.k > 0) row.property += "(k=" + std::to_string(spec.k) + ")";
        if (spec.pattern) {
            row.property += "(";
            for (size_t i = 0; i < spec.pattern->variables.size(); ++i) {
                if (i) row.property += " ";
                row.property += std::to_string(spec.pattern->variables[i]);
            }
            row.property += ")";
        }
        row.mode = request.mode;

        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = dispatch(ctx, spec, request.mode);
        } catch (const StateBudgetExceeded& e) {
            v = Verdict::inconclusive("budget", e.what());
        } catch (const CapExceeded& e) {
            v = Verdict::inconclusive("budget", e.what());
        } catch (const SearchBudgetExceeded& e) {
            v = Verdict::inconclusive("budget", e.what());
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        row.verdict = to_string(v.outcome);
        if (v.witness) {
            row.witness = format_word(*v.witness, a.alphabet);
            row.witness_len = static_cast<int>(v.witness->size());
        }
        row.method = v.method;
        row.note = v.note;
        row.bound_text = bound_text(ctx, spec.name, request.mode, spec.k);
        if (request.verify) {
            row.oracle = cross_check(ctx, spec, request.mode, v);
            if (row.oracle == "disagree") report.any_disagreement = true;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string render_table(const AnalysisReport& report, bool stable) {
    std::vector<std::string> headers{"property", "mode",  "verdict", "witness",
                                     "len",      "bound", "method",  "note"};
    bool verifying = false;
    for (const auto& r : report.rows) verifying |= !r.oracle.empty();
    if (verifying) headers.push_back("oracle");
    if (!stable) headers.push_back("ms");

    std::vector<std::vector<std::string>> cells;
    for (const auto& r : report.rows) {
        std::vector<std::string> row{
            r.property,
            r.mode,
            r.verdict,
            r.witness.empty() ? "-" : r.witness,
            r.witness_len < 0 ? "-" : std::to_string(r.witness_len),
            r.bound_text,
            r.method,
            r.note.empty() ? "-" : r.note,
        };
        if (verifying) row.push_back(r.oracle.empty() ? "-" : r.oracle);
        if (!stable) {
            std::ostringstream ms;
            ms.precision(2);
            ms << std::fixed << r.elapsed_ms;
            row.push_back(ms.str());
        }
        cells.push_back(std::move(row));
    }

    // Column widths measured in code points so the epsilon glyph aligns.
    auto display_len = [](const std::string& s) {
        size_t len = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++len;
        return len;
    };
    std::vector<size_t> width(headers.size());
    for (size_t i = 0; i < headers.size(); ++i) width[i] = display_len(headers[i]);
    for (const auto& row : cells)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_len(row[i]));

    std::ostringstream out;
    out << "automaton: n=" << report.n << " t=" << report.t << " kind=" << report.kind << "\n";
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << row[i];
            for (size_t pad = display_len(row[i]); pad < width[i]; ++pad) out << ' ';
        }
        out << "\n";
    };
    emit(headers);
    {
        std::vector<std::string> rule;
        for (size_t w : width) rule.push_back(std::string(w, '-'));
        emit(rule);
    }
    for (const auto& row : cells) emit(row);
    return out.str();
}

std::string render_json(const AnalysisReport& report, bool stable) {
    nlohmann::json doc;
    doc["automaton"] = {{"n", report.n}, {"t", report.t}, {"kind", report.kind}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["property"] = r.property;
        row["mode"] = r.mode;
        row["verdict"] = r.verdict;
        if (r.witness_len >= 0) {
            row["witness"] = r.witness;
            row["witness_len"] = r.witness_len;
        }
        row["bound"] = r.bound_text;
        row["method"] = r.method;
        if (!r.note.empty()) row["note"] = r.note;
        if (!r.oracle.empty()) row["oracle"] = r.oracle;
        if (!stable) row["elapsed_ms"] = r.elapsed_ms;
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace fa

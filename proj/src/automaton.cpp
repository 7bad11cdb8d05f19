#include "fa/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fa/errors.hpp"

namespace fa {

namespace {

void check_state(State q, int n, const char* what) {
    if (q < 0 || q >= n)
        throw Error(std::string(what) + " state " + std::to_string(q) + " out of range [0, " +
                    std::to_string(n) + ")");
}

void sort_unique(std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Automaton::Automaton(int n, Alphabet sigma, std::vector<Transition> trans,
                     std::vector<State> init, std::vector<State> fin, Kind k)
    : n_states(n),
      alphabet(std::move(sigma)),
      transitions(std::move(trans)),
      initials(std::move(init)),
      finals(std::move(fin)),
      kind(k) {
    if (n_states < 0) throw Error("negative state count");
    {
        std::set<std::string> names(alphabet.begin(), alphabet.end());
        if (names.size() != alphabet.size()) throw Error("duplicate symbol names in alphabet");
    }
    sort_unique(initials);
    sort_unique(finals);
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    for (State q : initials) check_state(q, n_states, "initial");
    for (State q : finals) check_state(q, n_states, "final");
    const int sigma_n = static_cast<int>(alphabet.size());
    for (const auto& t : transitions) {
        check_state(t.from, n_states, "transition source");
        check_state(t.to, n_states, "transition target");
        if (t.label != kEpsilon && (t.label < 0 || t.label >= sigma_n))
            throw Error("transition label out of range");
    }
    if (kind == Kind::Nfa || kind == Kind::Dfa) {
        for (const auto& t : transitions)
            if (t.label == kEpsilon) throw Error("epsilon transition in non-epsilon automaton");
    }
    if (kind == Kind::Dfa) {
        if (initials.size() != 1) throw NotADfa();
        // Completeness: exactly one successor per (state, symbol).
        std::vector<std::vector<int>> deg(static_cast<size_t>(n_states),
                                          std::vector<int>(alphabet.size(), 0));
        for (const auto& t : transitions) deg[static_cast<size_t>(t.from)][static_cast<size_t>(t.label)]++;
        for (const auto& row : deg)
            for (int d : row)
                if (d != 1) throw NotADfa();
    }
}

bool Automaton::is_initial(State q) const {
    return std::binary_search(initials.begin(), initials.end(), q);
}

bool Automaton::is_final(State q) const {
    return std::binary_search(finals.begin(), finals.end(), q);
}

bool Automaton::has_epsilon() const {
    for (const auto& t : transitions)
        if (t.label == kEpsilon) return true;
    return false;
}

std::vector<std::vector<std::pair<Symbol, State>>> Automaton::out_edges() const {
    std::vector<std::vector<std::pair<Symbol, State>>> out(static_cast<size_t>(n_states));
    for (const auto& t : transitions) out[static_cast<size_t>(t.from)].emplace_back(t.label, t.to);
    return out;
}

namespace {

std::vector<std::string> tokens_after_colon(const std::string& line) {
    auto pos = line.find(':');
    std::istringstream in(line.substr(pos + 1));
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int to_int(const std::string& s, int line_no) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + s + "'");
    }
}

} // namespace

Automaton parse_automaton(std::istream& in) {
    Alphabet alphabet;
    bool saw_alphabet = false;
    int n_states = -1;
    std::vector<State> initials, finals;
    std::vector<Transition> transitions;
    bool want_dfa = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream probe(line);
        std::string key;
        if (!(probe >> key)) continue;  // blank line
        auto toks = tokens_after_colon(line);
        if (key == "alphabet:") {
            alphabet = toks;
            saw_alphabet = true;
        } else if (key == "states:") {
            if (toks.size() != 1) throw ParseError(line_no, "states: wants one number");
            n_states = to_int(toks[0], line_no);
        } else if (key == "initial:") {
            for (const auto& t : toks) initials.push_back(to_int(t, line_no));
        } else if (key == "final:") {
            for (const auto& t : toks) finals.push_back(to_int(t, line_no));
        } else if (key == "trans:") {
            if (toks.size() != 3) throw ParseError(line_no, "trans: wants 'from label to'");
            Symbol label;
            if (toks[1] == "-") {
                label = kEpsilon;
            } else {
                auto it = std::find(alphabet.begin(), alphabet.end(), toks[1]);
                if (it == alphabet.end())
                    throw ParseError(line_no, "symbol '" + toks[1] + "' not in alphabet");
                label = static_cast<Symbol>(it - alphabet.begin());
            }
            transitions.push_back({to_int(toks[0], line_no), label, to_int(toks[2], line_no)});
        } else if (key == "kind:") {
            if (toks.size() != 1 || toks[0] != "dfa")
                throw ParseError(line_no, "only 'kind: dfa' is recognized");
            want_dfa = true;
        } else {
            throw ParseError(line_no, "unknown directive '" + key + "'");
        }
    }
    if (!saw_alphabet) throw ParseError(line_no, "missing 'alphabet:' line");
    if (n_states < 0) throw ParseError(line_no, "missing 'states:' line");

    bool eps = false;
    for (const auto& t : transitions) eps |= (t.label == kEpsilon);
    Kind kind = want_dfa ? Kind::Dfa : (eps ? Kind::NfaEpsilon : Kind::Nfa);
    try {
        return Automaton(n_states, alphabet, transitions, initials, finals, kind);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line_no, e.what());
    }
}

Automaton parse_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_automaton(in);
}

std::string format_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& s : a.alphabet) out << ' ' << s;
    out << "\nstates: " << a.n_states << "\ninitial:";
    for (State q : a.initials) out << ' ' << q;
    out << "\nfinal:";
    for (State q : a.finals) out << ' ' << q;
    out << '\n';
    if (a.kind == Kind::Dfa) out << "kind: dfa\n";
    for (const auto& t : a.transitions) {
        out << "trans: " << t.from << ' '
            << (t.label == kEpsilon ? std::string("-") : a.alphabet[static_cast<size_t>(t.label)])
            << ' ' << t.to << '\n';
    }
    return out.str();
}

} // namespace fa

#include "fa/word.hpp"

#include <sstream>

#include "fa/errors.hpp"

namespace fa {

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "ε";
    std::string r;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) r += ' ';
        r += alphabet.at(static_cast<size_t>(w[i]));
    }
    return r;
}

namespace {

Symbol lookup(const std::string& name, const Alphabet& alphabet) {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<Symbol>(i);
    throw Error("unknown symbol '" + name + "'");
}

} // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
    Word w;
    if (text.find(' ') == std::string::npos) {
        // Compact form: only valid when every symbol name is one character.
        bool compact = true;
        for (const auto& s : alphabet)
            if (s.size() != 1) compact = false;
        if (compact) {
            for (char c : text) w.push_back(lookup(std::string(1, c), alphabet));
            return w;
        }
    }
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(lookup(tok, alphabet));
    return w;
}

} // namespace fa

#include "twistkit/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistkit {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (l == 0) throw std::invalid_argument("word letter 0");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat_reduce(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Word cyclically_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t b = 0, e = r.size();
    while (e > b + 1 && r[b] == -r[e - 1]) {
        ++b;
        --e;
    }
    return Word(r.begin() + static_cast<long>(b), r.begin() + static_cast<long>(e));
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    bool first = true;
    for (int l : w) {
        if (!first) os << ' ';
        os << (l > 0 ? 'x' : 'X') << (l > 0 ? l : -l);
        first = false;
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
            throw std::invalid_argument("bad word token '" + tok + "'");
        int idx = 0;
        try {
            size_t used = 0;
            idx = std::stoi(tok.substr(1), &used);
            if (used + 1 != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token '" + tok + "'");
        }
        if (idx <= 0) throw std::invalid_argument("bad word token '" + tok + "'");
        out.push_back(tok[0] == 'x' ? idx : -idx);
    }
    return out;
}

} // namespace twistkit

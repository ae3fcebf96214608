#include "twistkit/presentation.hpp"

#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistkit {

void Presentation::validate() const {
    if (generators < 0) throw std::invalid_argument("negative generator count");
    if (static_cast<int>(epsilon.size()) != generators)
        throw std::invalid_argument("epsilon size != generator count");
    if (meridian != -1 && (meridian < 0 || meridian >= generators))
        throw std::invalid_argument("meridian index out of range");
    for (const Word& r : relators) {
        long weight = 0;
        for (int l : r) {
            int idx = std::abs(l);
            if (idx < 1 || idx > generators)
                throw std::invalid_argument("relator letter out of range");
            weight += (l > 0 ? 1 : -1) * epsilon[static_cast<size_t>(idx - 1)];
        }
        if (weight != 0) throw std::invalid_argument("relator with nonzero epsilon weight");
    }
}

bool Presentation::is_wirtinger_like() const {
    if (meridian < 0) return false;
    if (static_cast<int>(relators.size()) != generators - 1) return false;
    for (int e : epsilon)
        if (e != 1) return false;
    return true;
}

long exponent_sum(const Word& w, const Presentation& pres) {
    long s = 0;
    for (int l : w) {
        int idx = std::abs(l);
        if (idx < 1 || idx > pres.generators)
            throw std::invalid_argument("word letter out of range");
        s += (l > 0 ? 1 : -1) * pres.epsilon[static_cast<size_t>(idx - 1)];
    }
    return s;
}

Presentation wirtinger_from_braid(const std::vector<int>& braid, int strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    for (int l : braid)
        if (l == 0 || std::abs(l) >= strands)
            throw std::invalid_argument("braid letter out of range");

    // Closure must be a knot: the underlying permutation is an s-cycle.
    std::vector<int> perm(static_cast<size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : braid) {
        int a = std::abs(l) - 1;
        std::swap(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(a + 1)]);
    }
    {
        int seen = 1, at = perm[0];
        while (at != 0) {
            at = perm[static_cast<size_t>(at)];
            ++seen;
        }
        if (seen != strands)
            throw std::invalid_argument("braid closure has more than one component");
    }

    // Artin action, letters applied left to right: new images are the old
    // images substituted into the one-letter rule.
    std::vector<Word> img(static_cast<size_t>(strands));
    for (int i = 0; i < strands; ++i) img[static_cast<size_t>(i)] = {i + 1};
    for (int l : braid) {
        size_t a = static_cast<size_t>(std::abs(l) - 1);
        if (l > 0) {
            Word na = concat_reduce(concat_reduce(img[a], img[a + 1]), inverse_word(img[a]));
            img[a + 1] = img[a];
            img[a] = na;
        } else {
            Word nb =
                concat_reduce(concat_reduce(inverse_word(img[a + 1]), img[a]), img[a + 1]);
            img[a] = img[a + 1];
            img[a + 1] = nb;
        }
    }

    Presentation pres;
    pres.generators = strands;
    pres.meridian = 0;
    pres.epsilon.assign(static_cast<size_t>(strands), 1);
    for (int i = 0; i + 1 < strands; ++i) {
        // Never empty: the closure permutation is an s-cycle, so beta moves
        // every strand.
        pres.relators.push_back(concat_reduce(Word{-(i + 1)}, img[static_cast<size_t>(i)]));
    }
    pres.validate();
    return pres;
}

Presentation parse_presentation(std::istream& in) {
    Presentation pres;
    bool have_generators = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key[0] == '#') continue;
        if (key == "generators") {
            if (!(ls >> pres.generators) || pres.generators < 0)
                throw std::invalid_argument("bad generators line");
            have_generators = true;
        } else if (key == "meridian") {
            int m = 0;
            if (!(ls >> m) || m < 1) throw std::invalid_argument("bad meridian line");
            pres.meridian = m - 1;
        } else if (key == "epsilon") {
            pres.epsilon.clear();
            int e;
            while (ls >> e) pres.epsilon.push_back(e);
        } else if (key == "relator") {
            std::string rest;
            std::getline(ls, rest);
            pres.relators.push_back(free_reduce(parse_word(rest)));
        } else {
            throw std::invalid_argument("unknown presentation keyword '" + key + "'");
        }
    }
    if (!have_generators) throw std::invalid_argument("presentation missing generators line");
    if (pres.epsilon.empty()) pres.epsilon.assign(static_cast<size_t>(pres.generators), 1);
    pres.validate();
    return pres;
}

} // namespace twistkit

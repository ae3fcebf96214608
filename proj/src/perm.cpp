#include "twistkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistkit {

Permutation::Permutation(int degree) : images_(static_cast<size_t>(degree)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        out[i] = images_[static_cast<size_t>(q.images_[i])];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        out[static_cast<size_t>(images_[i])] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, at = i;
        while (!seen[static_cast<size_t>(at)]) {
            seen[static_cast<size_t>(at)] = true;
            at = images_[static_cast<size_t>(at)];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

int Permutation::order() const {
    long acc = 1;
    for (int len : cycle_type()) acc = std::lcm(acc, static_cast<long>(len));
    return static_cast<int>(acc);
}

std::string Permutation::cycle_str() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) {
            seen[static_cast<size_t>(i)] = true;
            continue;
        }
        os << '(';
        int at = i;
        bool first = true;
        while (!seen[static_cast<size_t>(at)]) {
            seen[static_cast<size_t>(at)] = true;
            if (!first) os << ' ';
            os << at;
            first = false;
            at = images_[static_cast<size_t>(at)];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<int> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycles");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced cycles");
        std::istringstream body(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        int v;
        while (body >> v) cyc.push_back(v);
        for (int x : cyc)
            if (x < 0 || x >= degree) throw std::invalid_argument("cycle point out of range");
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            images[static_cast<size_t>(from)] = to;
        }
        pos = close + 1;
        skip_ws();
    }
    return Permutation(std::move(images));
}

} // namespace twistkit

#include "permfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permfact {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation image table");
        seen[v] = 1;
    }
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("composed permutations must share a degree");
    Perm r;
    r.img_.resize(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p(j);
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

int cycle_count(const Perm& p) {
    int cycles = 0;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p(j);
        }
    }
    return cycles;
}

namespace {

Perm parse_cycles(const std::string& text, int n) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    int max_sym = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle notation");
        std::string body = text.substr(i + 1, close - i - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::vector<int> cyc;
        int sym;
        while (in >> sym) {
            if (sym < 1) throw std::invalid_argument("cycle symbols are 1-based positive");
            cyc.push_back(sym);
            max_sym = std::max(max_sym, sym);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    int deg = std::max(n, max_sym);
    std::vector<int> img(deg);
    for (int k = 0; k < deg; ++k) img[k] = k;
    std::vector<char> used(deg + 1, 0);
    for (const auto& cyc : cycles) {
        for (int sym : cyc) {
            if (used[sym])
                throw std::invalid_argument("symbol " + std::to_string(sym) +
                                            " appears in two cycles");
            used[sym] = 1;
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    }
    return Perm(std::move(img));
}

Perm parse_image_table(const std::string& text, int n) {
    size_t open = text.find('[');
    size_t close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("image table must look like [2,1,3]");
    std::string body = text.substr(open + 1, close - open - 1);
    std::vector<int> img;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) img.push_back(std::stoi(tok) - 1);
    while (static_cast<int>(img.size()) < n) img.push_back(static_cast<int>(img.size()));
    return Perm(std::move(img));
}

}  // namespace

Perm parse_perm(const std::string& text, int n) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty permutation literal");
    if (text[first] == '[') return parse_image_table(text, n);
    return parse_cycles(text, n);
}

std::string format_perm(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        out += "(";
        int j = i;
        bool head = true;
        while (!seen[j]) {
            if (!head) out += " ";
            head = false;
            out += std::to_string(j + 1);
            seen[j] = 1;
            j = p(j);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

namespace {

struct ClassGen {
    int n;
    std::vector<std::pair<int, int>> remaining;  // (length, count), decreasing lengths
    std::vector<int> img;
    std::vector<char> used;
    const std::function<bool(const Perm&)>* visit;
    long index = 0;
    int offset = 0, stride = 1;

    bool emit() {
        bool keep = true;
        if (stride == 1 || index % stride == offset) keep = (*visit)(Perm(img));
        ++index;
        return keep;
    }

    // Fill one cycle of length len starting at symbol start (its minimum);
    // chosen holds the cycle so far.
    bool fill_cycle(int len, int start, int prev, int left) {
        if (left == 0) {
            img[prev] = start;
            return place_next();
        }
        for (int s = start + 1; s < n; ++s) {
            if (used[s]) continue;
            used[s] = 1;
            img[prev] = s;
            if (!fill_cycle(len, start, s, left - 1)) {
                used[s] = 0;
                return false;
            }
            used[s] = 0;
        }
        return true;
    }

    bool place_next() {
        int start = -1;
        for (int s = 0; s < n; ++s)
            if (!used[s]) {
                start = s;
                break;
            }
        if (start < 0) return emit();
        bool ok = true;
        for (auto& [len, count] : remaining) {
            if (count == 0) continue;
            --count;
            used[start] = 1;
            ok = fill_cycle(len, start, start, len - 1);
            used[start] = 0;
            ++count;
            if (!ok) break;
        }
        return ok;
    }
};

}  // namespace

bool class_elements_strided(const Partition& beta, int offset, int stride,
                            const std::function<bool(const Perm&)>& visit) {
    ClassGen g;
    g.n = beta.weight();
    for (int p : beta.parts()) {
        if (!g.remaining.empty() && g.remaining.back().first == p)
            ++g.remaining.back().second;
        else
            g.remaining.push_back({p, 1});
    }
    g.img.assign(g.n, 0);
    g.used.assign(g.n, 0);
    g.visit = &visit;
    g.offset = offset;
    g.stride = stride;
    return g.place_next();
}

bool class_elements(const Partition& beta, const std::function<bool(const Perm&)>& visit) {
    return class_elements_strided(beta, 0, 1, visit);
}

}  // namespace permfact

#include "permfact/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permfact {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        weight_ += p;
    }
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_)
        if (p == i) ++m;
    return m;
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

bool Partition::contains(const Partition& sub) const {
    // Both sorted decreasing: sweep with two fingers.
    size_t i = 0;
    for (int s : sub.parts_) {
        while (i < parts_.size() && parts_[i] > s) ++i;
        if (i == parts_.size() || parts_[i] != s) return false;
        ++i;
    }
    return true;
}

Partition Partition::minus(const Partition& sub) const {
    std::vector<int> rest;
    size_t i = 0;
    for (int s : sub.parts_) {
        while (i < parts_.size() && parts_[i] > s) rest.push_back(parts_[i++]);
        if (i == parts_.size() || parts_[i] != s)
            throw std::invalid_argument("minus: not a sub-multiset");
        ++i;
    }
    rest.insert(rest.end(), parts_.begin() + i, parts_.end());
    Partition r;
    r.parts_ = std::move(rest);
    r.weight_ = weight_ - sub.weight_;
    return r;
}

std::string format_partition(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    s += "]";
    return s;
}

Partition parse_partition(const std::string& text) {
    size_t a = text.find('[');
    size_t b = text.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw std::invalid_argument("partition literal must look like [3,1,1], got \"" + text +
                                    "\"");
    std::string body = text.substr(a + 1, b - a - 1);
    std::vector<int> parts;
    if (body.find_first_not_of(" \t") != std::string::npos) {
        if (body.back() == ',')  // getline would drop the trailing empty field
            throw std::invalid_argument("empty entry in partition literal");
        std::string tok;
        std::istringstream in(body);
        while (std::getline(in, tok, ',')) {
            size_t s = tok.find_first_not_of(" \t");
            if (s == std::string::npos)
                throw std::invalid_argument("empty entry in partition literal");
            size_t e = tok.find_last_not_of(" \t");
            tok = tok.substr(s, e - s + 1);
            size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition entry " + tok);
            }
            if (used != tok.size()) throw std::invalid_argument("bad partition entry " + tok);
            parts.push_back(value);
        }
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> parts = acc;
        out.push_back(Partition(std::move(parts)));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return false;
    long sl = 0, sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += i < lambda.length() ? lambda.part(i) : 0;
        sm += i < mu.length() ? mu.part(i) : 0;
        if (sl < sm) return false;
    }
    return true;
}

namespace {

void sub_multisets_rec(const std::vector<std::pair<int, int>>& dist, size_t idx,
                       int remaining, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (idx == dist.size()) return;
    auto [value, mult] = dist[idx];
    int max_take = std::min(mult, remaining / value);
    for (int take = 0; take <= max_take; ++take) {
        for (int t = 0; t < take; ++t) acc.push_back(value);
        sub_multisets_rec(dist, idx + 1, remaining - take * value, acc, out);
        for (int t = 0; t < take; ++t) acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> sub_multisets_of_weight(const Partition& p, int w) {
    if (w < 0) return {};
    std::vector<std::pair<int, int>> dist;  // (part value, multiplicity)
    for (int x : p.parts()) {
        if (!dist.empty() && dist.back().first == x)
            ++dist.back().second;
        else
            dist.push_back({x, 1});
    }
    std::vector<Partition> out;
    std::vector<int> acc;
    sub_multisets_rec(dist, 0, w, acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int centralizer_order(const Partition& alpha) {
    Int z = 1;
    int run_value = 0, run_len = 0;
    for (int p : alpha.parts()) {
        if (p == run_value) {
            ++run_len;
        } else {
            run_value = p;
            run_len = 1;
        }
        z *= run_value;   // i^{m_i} accumulated one factor at a time
        z *= run_len;     // m_i! accumulated one factor at a time
    }
    return z;
}

Int class_size(const Partition& alpha) {
    return factorial(alpha.weight()) / centralizer_order(alpha);
}

Int aut_order(const Partition& alpha) {
    Int a = 1;
    int run_value = 0, run_len = 0;
    for (int p : alpha.parts()) {
        if (p == run_value) {
            ++run_len;
        } else {
            run_value = p;
            run_len = 1;
        }
        a *= run_len;
    }
    return a;
}

Int hook_product(const Partition& lambda) {
    // Hook of cell (i,j): arm + leg + 1, via the conjugate column lengths.
    std::vector<int> conj;  // conj[j] = number of parts > j
    for (int j = 0; j < (lambda.length() ? lambda.part(0) : 0); ++j) {
        int c = 0;
        for (int i = 0; i < lambda.length(); ++i)
            if (lambda.part(i) > j) ++c;
        conj.push_back(c);
    }
    Int h = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            h *= (lambda.part(i) - j - 1) + (conj[j] - i - 1) + 1;
    return h;
}

Int hook_dimension(const Partition& lambda) {
    return factorial(lambda.weight()) / hook_product(lambda);
}

GenusResult rh_genus(const Partition& alpha, const std::vector<Partition>& betas) {
    int n = alpha.weight();
    for (const auto& b : betas)
        if (b.weight() != n)
            throw std::invalid_argument("rh_genus: factor weight differs from target weight");
    long defect = 0;
    for (const auto& b : betas) defect += n - b.length();
    Rat raw = Rat(defect - n - alpha.length() + 2, 2);
    GenusResult r;
    r.raw = raw;
    if (!is_integer(raw)) {
        r.status = GenusResult::Status::non_integer;
    } else if (raw < 0) {
        r.status = GenusResult::Status::negative;
    } else {
        r.status = GenusResult::Status::ok;
        r.genus = static_cast<int>(numerator(raw));
    }
    return r;
}

}  // namespace permfact

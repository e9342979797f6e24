#include "permfact/zseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfact {

void PSeries::add_term(int degree, const Partition& monomial, const Rat& c) {
    if (degree < 0 || degree > trunc || c == 0) return;
    auto [it, fresh] = slices[degree].emplace(monomial, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) slices[degree].erase(it);
    }
}

Rat PSeries::coefficient(int degree, const Partition& monomial) const {
    if (degree < 0 || degree > trunc) return Rat(0);
    auto it = slices[degree].find(monomial);
    return it == slices[degree].end() ? Rat(0) : it->second;
}

bool PSeries::is_zero() const {
    for (const auto& s : slices)
        if (!s.empty()) return false;
    return true;
}

PSeries operator+(const PSeries& a, const PSeries& b) {
    PSeries out(std::max(a.trunc, b.trunc));
    for (int d = 0; d <= a.trunc; ++d)
        for (const auto& [m, c] : a.slices[d]) out.add_term(d, m, c);
    for (int d = 0; d <= b.trunc; ++d)
        for (const auto& [m, c] : b.slices[d]) out.add_term(d, m, c);
    return out;
}

PSeries operator-(const PSeries& a, const PSeries& b) {
    return a + scale(b, Rat(-1));
}

PSeries operator*(const PSeries& a, const PSeries& b) {
    PSeries out(std::min(a.trunc, b.trunc));
    for (int da = 0; da <= std::min(a.trunc, out.trunc); ++da) {
        for (const auto& [ma, ca] : a.slices[da]) {
            for (int db = 0; da + db <= out.trunc && db <= b.trunc; ++db)
                for (const auto& [mb, cb] : b.slices[db])
                    out.add_term(da + db, ma.merged(mb), ca * cb);
        }
    }
    return out;
}

PSeries scale(const PSeries& a, const Rat& c) {
    PSeries out(a.trunc);
    if (c == 0) return out;
    for (int d = 0; d <= a.trunc; ++d)
        for (const auto& [m, x] : a.slices[d]) out.slices[d].emplace(m, x * c);
    return out;
}

PSeries times_power_sum(const PSeries& a, int k) {
    PSeries out(a.trunc);
    Partition unit({k});
    for (int d = 0; d <= a.trunc; ++d)
        for (const auto& [m, c] : a.slices[d]) out.slices[d].emplace(m.merged(unit), c);
    return out;
}

PSeries p_derivative(const PSeries& a, int k) {
    PSeries out(a.trunc);
    for (int d = 0; d <= a.trunc; ++d) {
        for (const auto& [m, c] : a.slices[d]) {
            int mult = m.multiplicity(k);
            if (mult == 0) continue;
            out.add_term(d, m.minus(Partition({k})), c * mult);
        }
    }
    return out;
}

PSeries euler(const PSeries& a) {
    PSeries out(a.trunc);
    for (int d = 1; d <= a.trunc; ++d)
        for (const auto& [m, c] : a.slices[d]) out.slices[d].emplace(m, c * d);
    return out;
}

PSeries exp_of(const PSeries& u) {
    if (!u.slices[0].empty())
        throw std::invalid_argument("exp_of needs a series with no degree-0 part");
    PSeries out(u.trunc);
    out.add_term(0, Partition(), Rat(1));
    PSeries pw = u;  // u^k / k!
    for (int k = 1; k <= u.trunc; ++k) {
        if (k > 1) pw = scale(pw * u, Rat(1, k));
        for (int d = 0; d <= u.trunc; ++d)
            for (const auto& [m, c] : pw.slices[d]) out.add_term(d, m, c);
    }
    return out;
}

}  // namespace permfact

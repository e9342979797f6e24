#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "permfact/jack.hpp"

namespace permfact {
namespace jack {

/// Index of one p_lambda(x) p_mu(y) p_tau(z) monomial; the three partitions
/// share a weight, which is also the t degree of the slice holding it.
struct TripleKey {
    Partition lambda, mu, tau;
    auto operator<=>(const TripleKey&) const = default;
};

/// Truncated formal series in t over three sets of power-sum variables.
template <class R>
struct TripleSeries {
    int trunc = 0;
    std::vector<std::map<TripleKey, R>> slices;  // index = t degree

    explicit TripleSeries(int n) : trunc(n), slices(static_cast<size_t>(n) + 1) {}

    static TripleSeries one(int n) {
        TripleSeries s(n);
        s.slices[0].emplace(TripleKey{}, R(1));
        return s;
    }

    R coefficient(const TripleKey& key) const {
        int w = key.lambda.weight();
        if (w > trunc) return R(0);
        auto it = slices[w].find(key);
        return it == slices[w].end() ? R(0) : it->second;
    }
};

template <class R>
TripleSeries<R> multiply(const TripleSeries<R>& a, const TripleSeries<R>& b) {
    TripleSeries<R> out(std::min(a.trunc, b.trunc));
    for (int wa = 0; wa <= std::min(a.trunc, out.trunc); ++wa) {
        for (const auto& [ka, ca] : a.slices[wa]) {
            for (int wb = 0; wa + wb <= out.trunc && wb <= b.trunc; ++wb) {
                for (const auto& [kb, cb] : b.slices[wb]) {
                    TripleKey key{ka.lambda.merged(kb.lambda), ka.mu.merged(kb.mu),
                                  ka.tau.merged(kb.tau)};
                    auto [it, fresh] = out.slices[wa + wb].emplace(key, ca * cb);
                    if (!fresh) it->second = it->second + ca * cb;
                }
            }
        }
    }
    return out;
}

/// log(1 + u) = sum_k (-1)^{k+1} u^k / k, truncated. u needs an empty
/// degree-0 slice, which makes the sum finite.
template <class R>
TripleSeries<R> log_one_plus(const TripleSeries<R>& u) {
    TripleSeries<R> acc(u.trunc);
    TripleSeries<R> pw = u;
    for (int k = 1; k <= u.trunc; ++k) {
        R coeff = R(Rat(k % 2 == 1 ? 1 : -1, k));
        for (int w = 0; w <= u.trunc; ++w) {
            for (const auto& [key, c] : pw.slices[w]) {
                auto [it, fresh] = acc.slices[w].emplace(key, coeff * c);
                if (!fresh) it->second = it->second + coeff * c;
            }
        }
        if (k < u.trunc) pw = multiply(pw, u);
    }
    return acc;
}

/// sum over theta of w(theta) f_theta(x) f_theta(y) f_theta(z) t^{|theta|},
/// assembled from per-weight expansions in the p basis.
template <class R>
TripleSeries<R> diagonal_triple_series(
    int trunc,
    const std::function<std::map<Partition, std::pair<std::map<Partition, R>, R>>(int)>&
        weight_for) {
    auto s = TripleSeries<R>::one(trunc);
    for (int n = 1; n <= trunc; ++n) {
        for (const auto& [theta, data] : weight_for(n)) {
            const auto& [expansion, w] = data;
            for (const auto& [l, cl] : expansion) {
                for (const auto& [m, cm] : expansion) {
                    R clm = cl * cm * w;
                    for (const auto& [t, ct] : expansion) {
                        TripleKey key{l, m, t};
                        auto [it, fresh] = s.slices[n].emplace(key, clm * ct);
                        if (!fresh) it->second = it->second + clm * ct;
                    }
                }
            }
        }
    }
    return s;
}

/// The deformed triple generating function: alpha t d/dt of
/// log sum_theta t^{|theta|} J_theta(x) J_theta(y) J_theta(z) / <J,J>,
/// with the Jack parameter symbolic.
TripleSeries<AlphaRat> psi_series(int trunc);

/// Same construction at a fixed rational parameter value.
TripleSeries<Rat> psi_series_at(const Rat& alpha, int trunc);

/// t d/dt log sum_theta (n!/f_theta) s_theta(x) s_theta(y) s_theta(z)
/// t^{|theta|}; the independent route the deformed series must match at
/// parameter value 1.
TripleSeries<Rat> schur_triple_series(int trunc);

/// One Psi coefficient, symbolic in the parameter. Weights must agree.
AlphaRat psi_coefficient(const Partition& lambda, const Partition& mu, const Partition& tau);

/// One coefficient of Psi, examined as a polynomial in b = alpha - 1.
struct BPolynomialReport {
    TripleKey triple;
    AlphaRat coefficient;  // in the parameter alpha
    bool alpha_polynomial = false;
    Poly b_poly;  // coefficient rewritten at alpha = 1 + b; valid when alpha_polynomial
    bool integer_coefficients = false;
    bool nonnegative_coefficients = false;
    bool pass() const {
        return alpha_polynomial && integer_coefficients && nonnegative_coefficients;
    }
};

/// Every nonzero Psi coefficient through the given weight, checked for
/// polynomiality in b with nonnegative integer coefficients.
std::vector<BPolynomialReport> b_conjecture_scan(int max_weight);

}  // namespace jack
}  // namespace permfact

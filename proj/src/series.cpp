#include "permfact/series.hpp"

#include <stdexcept>

namespace permfact {
namespace jack {

namespace {

template <class R>
TripleSeries<R> scaled_log_derivative(TripleSeries<R> s, const R& alpha) {
    // Drop the constant term, take log, then apply alpha t d/dt: the
    // degree-n slice picks up a factor n alpha.
    s.slices[0].clear();
    auto lg = log_one_plus(s);
    for (int n = 0; n <= lg.trunc; ++n) {
        R factor = R(Rat(n)) * alpha;
        for (auto& [key, c] : lg.slices[n]) c = c * factor;
        std::erase_if(lg.slices[n], [](const auto& kv) { return kv.second == R(0); });
    }
    return lg;
}

std::map<Partition, std::pair<std::map<Partition, Rat>, Rat>> rat_jack_weight(int n,
                                                                              const Rat& alpha) {
    auto w = build_jack_weight<Rat>(n, alpha);
    std::map<Partition, std::pair<std::map<Partition, Rat>, Rat>> out;
    for (auto& [theta, expansion] : w.in_power_sums)
        out.emplace(theta, std::make_pair(std::move(expansion), Rat(1) / w.norm.at(theta)));
    return out;
}

}  // namespace

TripleSeries<AlphaRat> psi_series(int trunc) {
    auto& table = jack_table();
    auto weight_for = [&table](int n) {
        table.warm(n);
        std::map<Partition, std::pair<std::map<Partition, AlphaRat>, AlphaRat>> out;
        for (const auto& theta : partitions_of(n)) {
            auto f = table.expansion(theta);
            out.emplace(theta, std::make_pair(std::move(f.p), AlphaRat(1) / table.norm(theta)));
        }
        return out;
    };
    auto s = diagonal_triple_series<AlphaRat>(trunc, weight_for);
    return scaled_log_derivative(std::move(s), AlphaRat::alpha());
}

TripleSeries<Rat> psi_series_at(const Rat& alpha, int trunc) {
    auto weight_for = [&alpha](int n) { return rat_jack_weight(n, alpha); };
    auto s = diagonal_triple_series<Rat>(trunc, weight_for);
    return scaled_log_derivative(std::move(s), alpha);
}

TripleSeries<Rat> schur_triple_series(int trunc) {
    auto weight_for = [](int n) {
        std::map<Partition, std::pair<std::map<Partition, Rat>, Rat>> out;
        for (const auto& theta : partitions_of(n)) {
            auto f = schur_in_power_sums(theta);
            std::map<Partition, Rat> expansion;
            for (const auto& [rho, c] : f.p) expansion.emplace(rho, c.eval(Rat(1)));
            // n!/f_theta is the product of hook lengths.
            out.emplace(theta, std::make_pair(std::move(expansion), Rat(hook_product(theta))));
        }
        return out;
    };
    auto s = diagonal_triple_series<Rat>(trunc, weight_for);
    return scaled_log_derivative(std::move(s), Rat(1));
}

AlphaRat psi_coefficient(const Partition& lambda, const Partition& mu, const Partition& tau) {
    if (lambda.weight() != mu.weight() || mu.weight() != tau.weight())
        throw std::invalid_argument("psi coefficient needs three partitions of equal weight");
    auto psi = psi_series(lambda.weight());
    return psi.coefficient(TripleKey{lambda, mu, tau});
}

std::vector<BPolynomialReport> b_conjecture_scan(int max_weight) {
    auto psi = psi_series(max_weight);
    std::vector<BPolynomialReport> reports;
    for (int n = 1; n <= max_weight; ++n) {
        for (const auto& [key, c] : psi.slices[n]) {
            if (c.is_zero()) continue;
            BPolynomialReport rep;
            rep.triple = key;
            rep.coefficient = c;
            rep.alpha_polynomial = c.is_polynomial();
            if (rep.alpha_polynomial) {
                rep.b_poly = c.num().shifted(Rat(1));
                rep.integer_coefficients = true;
                rep.nonnegative_coefficients = true;
                for (const auto& coeff : rep.b_poly.coeffs()) {
                    if (!is_integer(coeff)) rep.integer_coefficients = false;
                    if (coeff < 0) rep.nonnegative_coefficients = false;
                }
            }
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

}  // namespace jack
}  // namespace permfact

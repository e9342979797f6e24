#pragma once

#include <map>

#include "permfact/alpha.hpp"
#include "permfact/partition.hpp"

namespace permfact {
namespace jack {

/// Homogeneous symmetric function of one weight in the power-sum basis,
/// coefficients rational functions in the Jack parameter.
struct SymFunc {
    int weight = 0;
    std::map<Partition, AlphaRat> p;  // coefficient of p_theta
};

/// p_theta expanded in monomial symmetric functions: integer coefficients.
/// Cached per weight. The matrix is dominance-triangular.
const std::map<Partition, std::map<Partition, Int>>& power_to_monomial(int n);

/// m_lambda expanded in power sums: rational coefficients, cached per weight.
const std::map<Partition, std::map<Partition, Rat>>& monomial_to_power(int n);

/// s_theta = sum_{theta'} (|C_theta'|/n!) chi^theta(theta') p_theta'.
SymFunc schur_in_power_sums(const Partition& theta);

/// <p_lambda, p_mu> = delta z_lambda alpha^{len(lambda)}, extended bilinearly.
AlphaRat alpha_inner_product(const SymFunc& f, const SymFunc& g);

/// Generic inner product over any scalar ring, with alpha given in the ring.
template <class R>
R alpha_inner_product_t(const std::map<Partition, R>& f, const std::map<Partition, R>& g,
                        const R& alpha) {
    R acc = R(0);
    auto it = f.begin();
    auto jt = g.begin();
    while (it != f.end() && jt != g.end()) {
        if (it->first < jt->first) {
            ++it;
        } else if (jt->first < it->first) {
            ++jt;
        } else {
            R weight = R(Rat(centralizer_order(it->first)));
            R apow = R(1);
            for (int i = 0; i < it->first.length(); ++i) apow = apow * alpha;
            acc = acc + it->second * jt->second * weight * apow;
            ++it;
            ++jt;
        }
    }
    return acc;
}

}  // namespace jack
}  // namespace permfact

#pragma once

#include <map>
#include <vector>

#include "permfact/numbers.hpp"
#include "permfact/partition.hpp"

namespace permfact {

/// Truncated formal series in z whose coefficients are finite rational
/// combinations of power-sum monomials; the monomial p_{l1} p_{l2} ... is
/// keyed by the partition (l1, l2, ...). Zero coefficients are never stored.
struct PSeries {
    int trunc = 0;
    std::vector<std::map<Partition, Rat>> slices;  // index = z degree

    PSeries() : slices(1) {}
    explicit PSeries(int n) : trunc(n), slices(static_cast<size_t>(n) + 1) {}

    void add_term(int degree, const Partition& monomial, const Rat& c);
    Rat coefficient(int degree, const Partition& monomial) const;
    bool is_zero() const;
};

PSeries operator+(const PSeries& a, const PSeries& b);
PSeries operator-(const PSeries& a, const PSeries& b);
PSeries operator*(const PSeries& a, const PSeries& b);
PSeries scale(const PSeries& a, const Rat& c);

/// Multiply by the single power sum p_k.
PSeries times_power_sum(const PSeries& a, int k);

/// Formal partial derivative with respect to p_k.
PSeries p_derivative(const PSeries& a, int k);

/// The Euler operator z d/dz: multiplies the degree-d slice by d.
PSeries euler(const PSeries& a);

/// exp(u) for u with an empty degree-0 slice (makes the sum finite).
PSeries exp_of(const PSeries& u);

}  // namespace permfact

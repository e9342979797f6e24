#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permfact/charalg.hpp"
#include "permfact/permutation.hpp"

namespace permfact {
namespace brute {

/// Explicit cap on search work plus a worker count. Exceeding the cap throws;
/// results never silently truncate.
struct SearchBudget {
    std::uint64_t max_tuples = 200'000'000;
    int workers = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t cap)
        : std::runtime_error("search budget of " + std::to_string(cap) +
                             " visited tuples exceeded") {}
};

/// True when the group generated by the words acts transitively on {0..n-1}.
/// Union-find over the functional graphs of the generators.
bool is_transitive(const std::vector<Perm>& generators, int n);

/// Depth-first count of factor tuples (pi_1..pi_m), pi_i in C_{factor_i},
/// with pi_1 * ... * pi_m = rho. The last factor is solved algebraically.
/// With fixed_target set, rho is that permutation; otherwise rho ranges over
/// the whole target class (the count is then class-summed).
Int enumerate_factorizations(const charalg::FactorizationSpec& spec,
                             const std::optional<Perm>& fixed_target = std::nullopt,
                             const SearchBudget& budget = {});

/// As above, restricted to tuples whose factors generate a transitive group.
Int enumerate_transitive_factorizations(const charalg::FactorizationSpec& spec,
                                        const std::optional<Perm>& fixed_target = std::nullopt,
                                        const SearchBudget& budget = {});

/// Pairs (nu, eps) with nu in C_lambda, eps in C_tau, eps*nu in C_mu and
/// <nu, eps> transitive. Dividing by (N-1)! (N the common weight) gives the
/// number of rooted embeddings with vertex degrees lambda and face degrees mu.
Int enumerate_decorated_maps(const Partition& lambda, const Partition& mu,
                             const Partition& tau, const SearchBudget& budget = {});

}  // namespace brute
}  // namespace permfact

#pragma once

#include <map>
#include <shared_mutex>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {
namespace charalg {

/// Memoized irreducible characters of symmetric groups, keyed by
/// (lambda, theta). Reads may run concurrently; writes are serialized.
class CharacterTable {
public:
    /// chi^lambda(theta); both partitions of the same n.
    Int character(const Partition& lambda, const Partition& theta);

    /// Fill every (lambda, theta) pair for this n.
    void warm(int n);

    std::map<std::pair<Partition, Partition>, Int> snapshot() const;
    void insert(const Partition& lambda, const Partition& theta, Int value);
    void clear();

private:
    Int compute(const Partition& lambda, const Partition& theta);

    mutable std::shared_mutex mutex_;
    std::map<std::pair<Partition, Partition>, Int> values_;
};

/// Process-wide table shared by the algebraic routes and warmed from the cache.
CharacterTable& character_table();

Int character(const Partition& lambda, const Partition& theta);

/// Element of the centre of the group algebra of S_n in the class-sum basis.
/// Supports conversion to the idempotent basis, where multiplication is
/// diagonal; used as a cross-check of the closed product formula.
struct ClassVector {
    int n = 0;
    std::map<Partition, Rat> coords;  // coefficient of K_theta

    static ClassVector class_sum(const Partition& theta);
    /// Coordinates in the orthogonal idempotent basis, indexed by lambda.
    std::map<Partition, Rat> idempotent_coords() const;
    static ClassVector from_idempotent_coords(int n, const std::map<Partition, Rat>& f);
    ClassVector multiplied_by(const ClassVector& other) const;
};

/// Target class plus an ordered list of factor classes, all of one weight.
struct FactorizationSpec {
    Partition target;
    std::vector<Partition> factors;

    int weight() const { return target.weight(); }
    void validate() const;
};

/// [K_target] prod_i K_{factor_i} as an exact rational (it is in fact a
/// nonnegative integer; returned as Rat so internal bugs surface as a
/// nonzero denominator rather than silent truncation).
Rat product_class_coefficient(const FactorizationSpec& spec);

/// Number of tuples (rho, pi_1..pi_m) with rho in C_target, pi_i in
/// C_{factor_i} and pi_1 * ... * pi_m = rho (right factor applied first).
Int factorization_count(const FactorizationSpec& spec);

/// As above, restricted to tuples whose factors generate a transitive group.
Int transitive_factorization_count(const FactorizationSpec& spec);

}  // namespace charalg
}  // namespace permfact

#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permfact/numbers.hpp"

namespace permfact {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is allowed and is the identity for multiset union.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }

    /// Multiplicity of i as a part.
    int multiplicity(int i) const;

    /// Multiset union.
    Partition merged(const Partition& other) const;

    /// Remove one copy of each part in `sub`; sub must be a sub-multiset.
    Partition minus(const Partition& sub) const;

    bool contains(const Partition& sub) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// "[3,1,1]"; the empty partition renders as "[]".
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

/// All partitions of n, ascending lexicographic (so [1,...,1] first, [n] last).
/// This order refines dominance: mu dominated by lambda implies mu earlier.
std::vector<Partition> partitions_of(int n);

/// lambda dominates mu: prefix sums of lambda >= prefix sums of mu.
/// Only meaningful for equal weights.
bool dominates(const Partition& lambda, const Partition& mu);

/// Distinct sub-multisets of p with the given weight.
std::vector<Partition> sub_multisets_of_weight(const Partition& p, int w);

/// z_alpha = prod i^{m_i} m_i!; |C_alpha| = n!/z_alpha; |Aut alpha| = prod m_i!.
Int centralizer_order(const Partition& alpha);
Int class_size(const Partition& alpha);
Int aut_order(const Partition& alpha);

/// Hook lengths product and the hook-length dimension n!/prod(hooks).
Int hook_product(const Partition& lambda);
Int hook_dimension(const Partition& lambda);

struct GenusResult {
    enum class Status { ok, non_integer, negative } status;
    /// Valid when status == ok.
    int genus = 0;
    /// The raw value of (sum(n - len(beta_i)) - n - len(alpha) + 2) / 2.
    Rat raw;
};

/// Genus forced by sum over factors of (n - len(beta_i)) = n + len(alpha) + 2g - 2.
/// All partitions must have weight n.
GenusResult rh_genus(const Partition& alpha, const std::vector<Partition>& betas);

}  // namespace permfact

#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "permfact/symfunc.hpp"

namespace permfact {
namespace jack {

/// Jack symmetric functions of one weight over a scalar field R, either Rat
/// with a concrete parameter value or AlphaRat with the parameter symbolic.
/// Normalization: [m_{(1^n)}] J_theta = n!, equivalently [p_{(1^n)}] = 1.
template <class R>
struct JackWeight {
    std::map<Partition, std::map<Partition, R>> in_power_sums;
    std::map<Partition, R> norm;  // <J_theta, J_theta> under the alpha product
};

/// Gram-Schmidt against the deformed power-sum product, run over the
/// monomial start vectors in a total order refining dominance. Throws
/// std::runtime_error when the parameter value degenerates the basis (zero
/// norm or vanishing leading coefficient); cannot happen for positive alpha
/// or for the symbolic parameter.
template <class R>
JackWeight<R> build_jack_weight(int n, const R& alpha);

extern template JackWeight<Rat> build_jack_weight<Rat>(int, const Rat&);
extern template JackWeight<AlphaRat> build_jack_weight<AlphaRat>(int, const AlphaRat&);

/// Memoized symbolic Jack expansions, whole weights at a time.
class JackTable {
public:
    SymFunc expansion(const Partition& theta);
    AlphaRat norm(const Partition& theta);
    void warm(int n);

    /// Cache persistence hooks. Preloaded entries are trusted verbatim; a
    /// weight with any entry missing is rebuilt in full (deterministically),
    /// so a partial preload is a warm start, not a correctness input.
    using Snapshot = std::pair<std::map<Partition, std::map<Partition, AlphaRat>>,
                               std::map<Partition, AlphaRat>>;
    Snapshot snapshot() const;
    void insert(const Partition& theta, std::map<Partition, AlphaRat> p_expansion,
                AlphaRat norm_value);
    void clear();

private:
    void ensure_weight_locked(int n);

    mutable std::mutex mutex_;
    std::map<Partition, std::map<Partition, AlphaRat>> expansions_;
    std::map<Partition, AlphaRat> norms_;
};

/// Process-wide table shared by the series engine and the CLI.
JackTable& jack_table();

SymFunc jack_in_power_sums(const Partition& theta);
AlphaRat jack_norm(const Partition& theta);

}  // namespace jack
}  // namespace permfact

#include "permfact/jack.hpp"

#include <stdexcept>
#include <vector>

namespace permfact {
namespace jack {

// Orthogonalize the monomial basis from the bottom of the dominance order
// up. The output is triangular (J_theta = m_theta + lower terms) and
// orthogonal, which pins it down to one scalar per theta; fixing the pure
// p_1^n coefficient to 1 is then the J normalization, since
//   [m_{(1^n)}] p_rho = n! delta_{rho,(1^n)}.
template <class R>
JackWeight<R> build_jack_weight(int n, const R& alpha) {
    JackWeight<R> out;
    const auto& m_to_p = monomial_to_power(n);
    Partition ones(std::vector<int>(n, 1));
    std::vector<Partition> built;
    for (const auto& theta : partitions_of(n)) {
        std::map<Partition, R> v;
        for (const auto& [rho, c] : m_to_p.at(theta)) v.emplace(rho, R(c));
        for (const auto& mu : built) {
            const auto& jmu = out.in_power_sums.at(mu);
            R proj = alpha_inner_product_t(v, jmu, alpha);
            if (proj == R(0)) continue;
            R scale = proj / out.norm.at(mu);
            for (const auto& [rho, c] : jmu) {
                auto it = v.find(rho);
                if (it == v.end())
                    v.emplace(rho, R(0) - scale * c);
                else
                    it->second = it->second - scale * c;
            }
        }
        std::erase_if(v, [](const auto& kv) { return kv.second == R(0); });
        auto lead = v.find(ones);
        if (lead == v.end())
            throw std::runtime_error("jack basis degenerates: p_1^n coefficient vanishes");
        R s = lead->second;
        for (auto& [rho, c] : v) c = c / s;
        R nrm = alpha_inner_product_t(v, v, alpha);
        if (nrm == R(0)) throw std::runtime_error("jack basis degenerates: zero norm");
        out.norm.emplace(theta, std::move(nrm));
        out.in_power_sums.emplace(theta, std::move(v));
        built.push_back(theta);
    }
    return out;
}

template JackWeight<Rat> build_jack_weight<Rat>(int, const Rat&);
template JackWeight<AlphaRat> build_jack_weight<AlphaRat>(int, const AlphaRat&);

void JackTable::ensure_weight_locked(int n) {
    bool complete = true;
    for (const auto& theta : partitions_of(n)) {
        if (!expansions_.count(theta) || !norms_.count(theta)) {
            complete = false;
            break;
        }
    }
    if (complete) return;
    auto weight = build_jack_weight<AlphaRat>(n, AlphaRat::alpha());
    for (auto& [theta, expansion] : weight.in_power_sums)
        expansions_.insert_or_assign(theta, std::move(expansion));
    for (auto& [theta, nrm] : weight.norm) norms_.insert_or_assign(theta, std::move(nrm));
}

SymFunc JackTable::expansion(const Partition& theta) {
    std::lock_guard lock(mutex_);
    ensure_weight_locked(theta.weight());
    SymFunc f;
    f.weight = theta.weight();
    f.p = expansions_.at(theta);
    return f;
}

AlphaRat JackTable::norm(const Partition& theta) {
    std::lock_guard lock(mutex_);
    ensure_weight_locked(theta.weight());
    return norms_.at(theta);
}

void JackTable::warm(int n) {
    std::lock_guard lock(mutex_);
    ensure_weight_locked(n);
}

JackTable::Snapshot JackTable::snapshot() const {
    std::lock_guard lock(mutex_);
    return {expansions_, norms_};
}

void JackTable::insert(const Partition& theta, std::map<Partition, AlphaRat> p_expansion,
                       AlphaRat norm_value) {
    std::lock_guard lock(mutex_);
    expansions_.insert_or_assign(theta, std::move(p_expansion));
    norms_.insert_or_assign(theta, std::move(norm_value));
}

void JackTable::clear() {
    std::lock_guard lock(mutex_);
    expansions_.clear();
    norms_.clear();
}

JackTable& jack_table() {
    static JackTable table;
    return table;
}

SymFunc jack_in_power_sums(const Partition& theta) { return jack_table().expansion(theta); }

AlphaRat jack_norm(const Partition& theta) { return jack_table().norm(theta); }

}  // namespace jack
}  // namespace permfact

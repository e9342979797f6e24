#include "permfact/charalg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace permfact {
namespace charalg {

namespace {

// First-column hook lengths ("beta numbers") of lambda padded to `rows` rows.
std::vector<int> beta_set(const Partition& lambda, int rows) {
    std::vector<int> beta(rows, 0);
    for (int i = 0; i < rows; ++i) {
        int part = i < lambda.length() ? lambda.part(i) : 0;
        beta[i] = part + (rows - 1 - i);
    }
    return beta;  // strictly decreasing
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    std::vector<int> parts;
    for (size_t i = 0; i < beta.size(); ++i) {
        int part = beta[i] - (static_cast<int>(beta.size()) - 1 - static_cast<int>(i));
        if (part > 0) parts.push_back(part);
        if (part < 0) throw std::logic_error("invalid beta set");
    }
    return Partition(std::move(parts));
}

}  // namespace

Int CharacterTable::character(const Partition& lambda, const Partition& theta) {
    if (lambda.weight() != theta.weight())
        throw std::invalid_argument("character: partitions must share a weight");
    {
        std::shared_lock lock(mutex_);
        auto it = values_.find({lambda, theta});
        if (it != values_.end()) return it->second;
    }
    Int v = compute(lambda, theta);
    {
        std::unique_lock lock(mutex_);
        values_.insert({{lambda, theta}, v});
    }
    return v;
}

// Murnaghan-Nakayama on beta sets: removing a border strip of length k is
// replacing a beta number b by b-k (allowed when b-k is absent), with sign
// (-1)^{number of beta numbers strictly between b-k and b}.
Int CharacterTable::compute(const Partition& lambda, const Partition& theta) {
    if (lambda.weight() == 0) return 1;
    int k = theta.part(0);
    std::vector<int> rest_parts(theta.parts().begin() + 1, theta.parts().end());
    Partition rest(std::move(rest_parts));

    std::vector<int> beta = beta_set(lambda, lambda.length());
    std::set<int> present(beta.begin(), beta.end());
    Int total = 0;
    for (int b : beta) {
        if (b < k || present.count(b - k)) continue;
        int height = 0;
        for (int c : beta)
            if (c > b - k && c < b) ++height;
        std::vector<int> nb;
        for (int c : beta) nb.push_back(c == b ? b - k : c);
        Int sub = character(partition_from_beta(std::move(nb)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

void CharacterTable::warm(int n) {
    auto ps = partitions_of(n);
    for (const auto& lambda : ps)
        for (const auto& theta : ps) character(lambda, theta);
}

std::map<std::pair<Partition, Partition>, Int> CharacterTable::snapshot() const {
    std::shared_lock lock(mutex_);
    return values_;
}

void CharacterTable::insert(const Partition& lambda, const Partition& theta, Int value) {
    std::unique_lock lock(mutex_);
    values_.insert_or_assign({lambda, theta}, std::move(value));
}

void CharacterTable::clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
}

CharacterTable& character_table() {
    static CharacterTable table;
    return table;
}

Int character(const Partition& lambda, const Partition& theta) {
    return character_table().character(lambda, theta);
}

ClassVector ClassVector::class_sum(const Partition& theta) {
    ClassVector v;
    v.n = theta.weight();
    v.coords[theta] = 1;
    return v;
}

// K_theta = |C_theta| sum_lambda (chi^lambda(theta)/f^lambda) F_lambda, so the
// F_lambda coordinate of sum_theta c_theta K_theta is
// sum_theta c_theta |C_theta| chi^lambda(theta) / f^lambda.
std::map<Partition, Rat> ClassVector::idempotent_coords() const {
    std::map<Partition, Rat> f;
    auto ps = partitions_of(n);
    for (const auto& lambda : ps) {
        Rat acc = 0;
        Rat dim = Rat(character(lambda, Partition(std::vector<int>(n, 1))));
        for (const auto& [theta, c] : coords)
            acc += c * Rat(class_size(theta)) * Rat(character(lambda, theta)) / dim;
        f[lambda] = acc;
    }
    return f;
}

// F_lambda = (f^lambda/n!) sum_theta chi^lambda(theta) K_theta.
ClassVector ClassVector::from_idempotent_coords(int n, const std::map<Partition, Rat>& f) {
    ClassVector v;
    v.n = n;
    Rat nfact = Rat(factorial(n));
    auto ps = partitions_of(n);
    for (const auto& theta : ps) {
        Rat acc = 0;
        for (const auto& [lambda, c] : f) {
            Rat dim = Rat(character(lambda, Partition(std::vector<int>(n, 1))));
            acc += c * dim * Rat(character(lambda, theta)) / nfact;
        }
        if (acc != 0) v.coords[theta] = acc;
    }
    return v;
}

ClassVector ClassVector::multiplied_by(const ClassVector& other) const {
    if (n != other.n) throw std::invalid_argument("class vectors of different weights");
    auto a = idempotent_coords();
    auto b = other.idempotent_coords();
    std::map<Partition, Rat> prod;
    for (auto& [lambda, c] : a) prod[lambda] = c * b[lambda];
    return from_idempotent_coords(n, prod);
}

void FactorizationSpec::validate() const {
    for (const auto& b : factors)
        if (b.weight() != target.weight())
            throw std::invalid_argument("factor class weight differs from target weight");
}

// [K_alpha] prod_i K_{beta_i}
//   = (1/n!) sum_{lambda |- n} (f^lambda)^{1-m} chi^lambda(alpha)
//                              prod_i |C_{beta_i}| chi^lambda(beta_i),
// read off by expanding each K in the orthogonal idempotent basis,
// multiplying diagonally, and converting the K_alpha coordinate back.
// The m = 0 case degenerates to [alpha = (1^n)] by column orthogonality.
Rat product_class_coefficient(const FactorizationSpec& spec) {
    spec.validate();
    int n = spec.weight();
    int m = static_cast<int>(spec.factors.size());
    Partition ones(std::vector<int>(n, 1));
    Rat total = 0;
    for (const auto& lambda : partitions_of(n)) {
        Rat dim = Rat(character(lambda, ones));
        Rat term = rat_pow(dim, 1 - m) * Rat(character(lambda, spec.target));
        for (const auto& beta : spec.factors)
            term *= Rat(class_size(beta)) * Rat(character(lambda, beta));
        total += term;
    }
    return total / Rat(factorial(n));
}

Int factorization_count(const FactorizationSpec& spec) {
    Rat count = Rat(class_size(spec.target)) * product_class_coefficient(spec);
    if (!is_integer(count))
        throw std::logic_error("factorization count came out non-integral");
    if (count < 0) throw std::logic_error("factorization count came out negative");
    return numerator(count);
}

namespace {

// Canonical memo key: identity factor classes dropped (they force identity
// factors and change nothing), remaining factors sorted.
struct CanonicalSpec {
    Partition target;
    std::vector<Partition> factors;
    auto operator<=>(const CanonicalSpec&) const = default;
};

CanonicalSpec canonicalize(const Partition& target, std::vector<Partition> factors) {
    int n = target.weight();
    Partition ones(std::vector<int>(n, 1));
    std::erase(factors, ones);
    std::sort(factors.begin(), factors.end());
    return CanonicalSpec{target, std::move(factors)};
}

std::map<CanonicalSpec, Int>& transitive_memo() {
    static std::map<CanonicalSpec, Int> memo;
    return memo;
}

std::shared_mutex& transitive_memo_mutex() {
    static std::shared_mutex m;
    return m;
}

Int total_count(const CanonicalSpec& s) {
    return factorization_count(FactorizationSpec{s.target, s.factors});
}

// Enumerate joint choices of one weight-w sub-multiset per factor.
void factor_subsets_rec(const std::vector<std::vector<Partition>>& options, size_t idx,
                        std::vector<Partition>& acc,
                        const std::function<void(const std::vector<Partition>&)>& emit) {
    if (idx == options.size()) {
        emit(acc);
        return;
    }
    for (const auto& choice : options[idx]) {
        acc.push_back(choice);
        factor_subsets_rec(options, idx + 1, acc, emit);
        acc.pop_back();
    }
}

Int connected_count(const CanonicalSpec& s);

// Sum over proper sub-specs s1 (the connected component of a distinguished
// symbol) of C(n-1, n1-1) * N_conn(s1) * N_tot(s \ s1).
Int decomposable_part(const CanonicalSpec& s) {
    int n = s.target.weight();
    Int acc = 0;
    for (int n1 = 1; n1 < n; ++n1) {
        auto alpha_subs = sub_multisets_of_weight(s.target, n1);
        if (alpha_subs.empty()) continue;
        std::vector<std::vector<Partition>> options;
        bool feasible = true;
        for (const auto& beta : s.factors) {
            options.push_back(sub_multisets_of_weight(beta, n1));
            if (options.back().empty()) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        Int choose = binomial(n - 1, n1 - 1);
        for (const auto& alpha1 : alpha_subs) {
            Partition alpha_rest = s.target.minus(alpha1);
            std::vector<Partition> acc_factors;
            factor_subsets_rec(options, 0, acc_factors, [&](const std::vector<Partition>& fs) {
                Int conn = connected_count(canonicalize(alpha1, fs));
                if (conn == 0) return;
                std::vector<Partition> rest_factors;
                rest_factors.reserve(s.factors.size());
                for (size_t i = 0; i < s.factors.size(); ++i)
                    rest_factors.push_back(s.factors[i].minus(fs[i]));
                Int rest = total_count(canonicalize(alpha_rest, std::move(rest_factors)));
                acc += choose * conn * rest;
            });
        }
    }
    return acc;
}

Int connected_count(const CanonicalSpec& s) {
    {
        std::shared_lock lock(transitive_memo_mutex());
        auto it = transitive_memo().find(s);
        if (it != transitive_memo().end()) return it->second;
    }
    Int result = total_count(s) - decomposable_part(s);
    if (result < 0)
        throw std::logic_error("transitivity inversion produced a negative count");
    {
        std::unique_lock lock(transitive_memo_mutex());
        transitive_memo().insert({s, result});
    }
    return result;
}

}  // namespace

Int transitive_factorization_count(const FactorizationSpec& spec) {
    spec.validate();
    return connected_count(canonicalize(spec.target, spec.factors));
}

}  // namespace charalg
}  // namespace permfact

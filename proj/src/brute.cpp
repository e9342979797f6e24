#include "permfact/brute.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace permfact {
namespace brute {

namespace {

/// Disjoint sets with path halving.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct BudgetCounter {
    std::atomic<std::uint64_t> used{0};
    std::uint64_t cap;
    std::atomic<bool> blown{false};

    explicit BudgetCounter(std::uint64_t cap) : cap(cap) {}

    // Charged in batches from worker-local counters to keep the hot loop cheap.
    bool charge(std::uint64_t amount) {
        if (used.fetch_add(amount, std::memory_order_relaxed) + amount > cap) {
            blown.store(true, std::memory_order_relaxed);
            return false;
        }
        return !blown.load(std::memory_order_relaxed);
    }
};

bool transitive_imgs(const std::vector<const Perm*>& words, int n) {
    UnionFind uf(n);
    for (const Perm* w : words)
        for (int i = 0; i < n; ++i) uf.unite(i, (*w)(i));
    int root = uf.find(0);
    for (int i = 1; i < n; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

struct SearchDriver {
    const charalg::FactorizationSpec& spec;
    bool require_transitive;
    BudgetCounter& counter;

    // Count tuples multiplying to rho. Factors are filled left to right; the
    // final factor is solved as pi_m = (pi_1*...*pi_{m-1})^{-1} * rho.
    std::uint64_t count_for_target(const Perm& rho, int offset, int stride) const {
        int n = spec.weight();
        int m = static_cast<int>(spec.factors.size());
        // With no branching before the solved factor there is nothing to
        // shard; only the first worker reports.
        if (m <= 1 && offset != 0) return 0;
        if (m == 0) {
            if (!rho.is_identity()) return 0;
            if (require_transitive && n != 1) return 0;
            return 1;
        }

        std::uint64_t local = 0;
        std::uint64_t charge_acc = 0;
        std::vector<Perm> chosen(m);
        // prefix[k] = pi_1 * ... * pi_k
        std::vector<Perm> prefix(m);

        auto solve_last = [&](const Perm& head) -> bool {
            ++charge_acc;
            if (charge_acc >= 4096) {
                if (!counter.charge(charge_acc)) return false;
                charge_acc = 0;
            }
            Perm last = head.inverse() * rho;
            if (cycle_type(last) != spec.factors[m - 1]) return true;
            if (require_transitive) {
                chosen[m - 1] = std::move(last);
                std::vector<const Perm*> words;
                words.reserve(m);
                for (const auto& p : chosen) words.push_back(&p);
                if (!transitive_imgs(words, n)) return true;
            }
            ++local;
            return true;
        };

        // Depth-first over factors 1..m-1; stride splits the first factor's class.
        std::function<bool(int)> descend = [&](int k) -> bool {
            if (k == m - 1) return solve_last(k == 0 ? Perm(n) : prefix[k - 1]);
            auto body = [&](const Perm& pi) -> bool {
                chosen[k] = pi;
                prefix[k] = k == 0 ? pi : prefix[k - 1] * pi;
                return descend(k + 1);
            };
            if (k == 0 && m >= 2)
                return class_elements_strided(spec.factors[k], offset, stride, body);
            return class_elements(spec.factors[k], body);
        };

        bool completed;
        if (m == 1) {
            // Single factor: solved directly against rho.
            completed = solve_last(Perm(n));
        } else {
            completed = descend(0);
        }
        if (!completed && counter.blown.load()) return local;
        if (charge_acc > 0) counter.charge(charge_acc);
        return local;
    }
};

Int run_workers(int workers, const std::function<std::uint64_t(int, int)>& shard) {
    if (workers <= 1) return Int(shard(0, 1));
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] { partial[w] = shard(w, workers); });
    for (auto& t : threads) t.join();
    Int total = 0;
    for (auto v : partial) total += v;
    return total;
}

Int enumerate_impl(const charalg::FactorizationSpec& spec, const std::optional<Perm>& fixed,
                   const SearchBudget& budget, bool require_transitive) {
    spec.validate();
    int n = spec.weight();
    if (fixed) {
        if (fixed->degree() != n)
            throw std::invalid_argument("fixed target degree differs from spec weight");
        if (cycle_type(*fixed) != spec.target)
            throw std::invalid_argument("fixed target is not in the target class");
    }
    BudgetCounter counter(budget.max_tuples);
    SearchDriver driver{spec, require_transitive, counter};

    Int total;
    if (fixed) {
        total = run_workers(budget.workers, [&](int offset, int stride) {
            return driver.count_for_target(*fixed, offset, stride);
        });
    } else {
        // Conjugation carries factorizations of rho to factorizations of
        // u rho u^-1 class-by-class, so the count per target is constant:
        // enumerate one representative and scale by the class size.
        std::vector<int> img;
        int sym = 0;
        for (int part : spec.target.parts()) {
            for (int i = 0; i < part; ++i) img.push_back(sym + (i + 1) % part);
            sym += part;
        }
        Perm rho(std::move(img));
        total = run_workers(budget.workers, [&](int offset, int stride) {
            return driver.count_for_target(rho, offset, stride);
        });
        total *= class_size(spec.target);
    }
    if (counter.blown.load()) throw BudgetExceeded(budget.max_tuples);
    return total;
}

}  // namespace

bool is_transitive(const std::vector<Perm>& generators, int n) {
    std::vector<const Perm*> words;
    words.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.degree() != n)
            throw std::invalid_argument("generator degree differs from n");
        words.push_back(&g);
    }
    return transitive_imgs(words, n);
}

Int enumerate_factorizations(const charalg::FactorizationSpec& spec,
                             const std::optional<Perm>& fixed_target,
                             const SearchBudget& budget) {
    return enumerate_impl(spec, fixed_target, budget, false);
}

Int enumerate_transitive_factorizations(const charalg::FactorizationSpec& spec,
                                        const std::optional<Perm>& fixed_target,
                                        const SearchBudget& budget) {
    return enumerate_impl(spec, fixed_target, budget, true);
}

Int enumerate_decorated_maps(const Partition& lambda, const Partition& mu,
                             const Partition& tau, const SearchBudget& budget) {
    int n = lambda.weight();
    if (mu.weight() != n || tau.weight() != n)
        throw std::invalid_argument("vertex, face and edge partitions must share a weight");
    BudgetCounter counter(budget.max_tuples);

    auto shard = [&](int offset, int stride) -> std::uint64_t {
        std::uint64_t local = 0;
        std::uint64_t charge_acc = 0;
        bool ok = class_elements_strided(lambda, offset, stride, [&](const Perm& nu) {
            return class_elements(tau, [&](const Perm& eps) {
                ++charge_acc;
                if (charge_acc >= 4096) {
                    if (!counter.charge(charge_acc)) return false;
                    charge_acc = 0;
                }
                Perm face = eps * nu;
                if (cycle_type(face) != mu) return true;
                if (!transitive_imgs({&nu, &eps}, n)) return true;
                ++local;
                return true;
            });
        });
        if (ok && charge_acc > 0) counter.charge(charge_acc);
        return local;
    };
    Int total = run_workers(budget.workers, shard);
    if (counter.blown.load()) throw BudgetExceeded(budget.max_tuples);
    return total;
}

}  // namespace brute
}  // namespace permfact

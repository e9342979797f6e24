#include "permfact/maps.hpp"

#include "permfact/brute.hpp"
#include "permfact/charalg.hpp"

namespace permfact {
namespace maps {

TripleReport validate_triple(const MapTriple& t, bool hypermap) {
    TripleReport r;
    int n = t.nu.degree();
    if (t.eps.degree() != n || t.phi.degree() != n) {
        r.fault = TripleFault::degree_mismatch;
        r.detail = "the three permutations act on different symbol counts";
        return r;
    }
    if (!hypermap) {
        for (int i = 0; i < n; ++i) {
            if (t.eps(i) == i) {
                r.fault = TripleFault::eps_fixed_point;
                r.detail = "edge involution fixes symbol " + std::to_string(i + 1);
                return r;
            }
            if (t.eps(t.eps(i)) != i) {
                r.fault = TripleFault::eps_not_involution;
                r.detail = "edge permutation is not an involution at symbol " +
                           std::to_string(i + 1);
                return r;
            }
        }
    }
    if (!(t.eps * t.nu == t.phi)) {
        r.fault = TripleFault::product;
        r.detail = "eps*nu differs from phi";
        return r;
    }
    if (!brute::is_transitive({t.nu, t.eps}, n)) {
        r.fault = TripleFault::not_transitive;
        r.detail = "<nu, eps> is not transitive";
        return r;
    }
    return r;
}

GenusReport map_genus(const MapTriple& t, bool hypermap) {
    GenusReport g;
    TripleReport v = validate_triple(t, hypermap);
    if (!v.ok()) {
        g.detail = v.detail;
        return g;
    }
    int euler = cycle_count(t.nu) - cycle_count(t.eps) + cycle_count(t.phi);
    if ((2 - euler) % 2 != 0 || euler > 2) {
        g.detail = "euler characteristic " + std::to_string(euler) +
                   " does not give a nonnegative integer genus";
        return g;
    }
    g.ok = true;
    g.genus = (2 - euler) / 2;
    return g;
}

Int count_rooted_hypermaps(const Partition& lambda, const Partition& mu,
                           const Partition& tau) {
    int n = lambda.weight();
    if (mu.weight() != n || tau.weight() != n)
        throw std::invalid_argument("vertex, face and hyperedge partitions must share a weight");
    // Decorated objects per rooted object: (N-1)!. Under the pinned
    // composition convention a transitive pair (nu, eps) with eps*nu = phi
    // is the factorization phi = eps * nu, i.e. factors [tau, lambda].
    Int decorated = charalg::transitive_factorization_count(
        charalg::FactorizationSpec{mu, {tau, lambda}});
    Int unit = factorial(n - 1);
    if (decorated % unit != 0)
        throw std::logic_error("decorated map count not divisible by (N-1)!");
    return decorated / unit;
}

Int count_rooted_maps(const Partition& lambda, const Partition& mu) {
    int n = lambda.weight();
    if (n % 2 != 0)
        throw std::invalid_argument("plain maps need an even number of edge ends");
    Int result = count_rooted_hypermaps(lambda, mu, Partition(std::vector<int>(n / 2, 2)));
    return result;
}

}  // namespace maps
}  // namespace permfact

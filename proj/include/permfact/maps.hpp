#pragma once

#include <string>

#include "permfact/permutation.hpp"

namespace permfact {
namespace maps {

/// Vertex, edge and face permutations of a rooted embedding on symbols
/// {1..N}: following an edge end with eps and then reading the next end at
/// the target vertex with nu traverses a face, so eps*nu = phi.
struct MapTriple {
    Perm nu;
    Perm eps;
    Perm phi;
};

enum class TripleFault {
    none,
    degree_mismatch,     // the three words act on different symbol sets
    product,             // eps*nu != phi
    eps_not_involution,  // eps has a cycle longer than 2
    eps_fixed_point,     // plain maps need a fixed-point-free eps
    not_transitive,      // <nu, eps> has more than one orbit
};

struct TripleReport {
    TripleFault fault = TripleFault::none;
    std::string detail;
    bool ok() const { return fault == TripleFault::none; }
};

/// Structural validation. With hypermap set, eps may be arbitrary (edge
/// colours), otherwise it must be a fixed-point-free involution.
TripleReport validate_triple(const MapTriple& t, bool hypermap = false);

struct GenusReport {
    bool ok = false;
    int genus = 0;
    std::string detail;
};

/// Euler characteristic of a valid triple:
/// cycles(nu) - cycles(eps) + cycles(phi) = 2 - 2g.
GenusReport map_genus(const MapTriple& t, bool hypermap = false);

/// Number of rooted hypermaps with vertex degree partition lambda, face
/// degree partition mu and hyperedge partition tau (all of weight N):
/// transitive pairs (nu, eps) with eps*nu in C_mu, divided by (N-1)!.
/// For plain maps take tau = (2^n), N = 2n.
Int count_rooted_hypermaps(const Partition& lambda, const Partition& mu,
                           const Partition& tau);

/// Plain rooted maps on n edges: tau = (2^n).
Int count_rooted_maps(const Partition& lambda, const Partition& mu);

}  // namespace maps
}  // namespace permfact

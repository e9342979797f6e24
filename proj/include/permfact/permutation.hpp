#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

/// Permutation of {0,...,n-1}, stored as an image table.
///
/// Composition convention (pinned for the whole library): the product applies
/// the right factor first, (a*b)(x) = a(b(x)). Under this convention the
/// vertex/edge/face triple of a rooted embedding satisfies edge*vertex = face;
/// see the 18-symbol torus triple in the map tests.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm&) const = default;

private:
    std::vector<int> img_;
};

Partition cycle_type(const Perm& p);
int cycle_count(const Perm& p);

/// Parse either cycle notation "(1 8 5 15)(3 18 17 7)" (1-based symbols,
/// whitespace or comma separated) or an image table "[2,1,3]" (1-based).
/// For cycle notation, degree defaults to the largest symbol mentioned;
/// pass n to widen (extra symbols become fixed points). Repeated symbols
/// are rejected.
Perm parse_perm(const std::string& text, int n = 0);

/// Cycle notation with fixed points included, cycles ordered by minimal
/// symbol, each cycle starting at its minimal symbol; 1-based.
std::string format_perm(const Perm& p);

/// Visit every permutation of cycle type beta on {0..n-1} exactly once,
/// n = beta.weight(). Enumeration order is deterministic. The visitor may
/// return false to stop early; class_elements returns false iff stopped.
bool class_elements(const Partition& beta, const std::function<bool(const Perm&)>& visit);

/// As above but only elements with index % stride == offset in enumeration
/// order, for splitting one class across workers.
bool class_elements_strided(const Partition& beta, int offset, int stride,
                            const std::function<bool(const Perm&)>& visit);

}  // namespace permfact

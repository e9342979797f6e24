#include "permfact/symfunc.hpp"

#include <mutex>

#include "permfact/charalg.hpp"

namespace permfact {
namespace jack {

namespace {

using MExpansion = std::map<Partition, Int>;

// m_lambda * p_r in the monomial basis: the coefficient of m_mu is the
// number of part slots of mu whose reduction by r re-sorts to lambda.
MExpansion multiply_by_power(const MExpansion& f, int r) {
    MExpansion out;
    for (const auto& [lambda, c] : f) {
        // Candidate mu arise by adding r to one part of lambda or appending r.
        std::vector<Partition> candidates;
        {
            std::vector<int> parts = lambda.parts();
            parts.push_back(r);
            candidates.push_back(Partition(std::move(parts)));
        }
        for (int i = 0; i < lambda.length(); ++i) {
            if (i > 0 && lambda.part(i) == lambda.part(i - 1)) continue;
            std::vector<int> parts = lambda.parts();
            parts[i] += r;
            candidates.push_back(Partition(std::move(parts)));
        }
        for (const auto& mu : candidates) {
            // Multiplicity: part slots of mu whose reduction by r gives lambda.
            // Equal parts share a reduction, so count whole value groups.
            int slots = 0;
            for (int k = 0; k < mu.length(); ++k) {
                int v = mu.part(k);
                if (k > 0 && v == mu.part(k - 1)) continue;
                if (v < r) continue;
                std::vector<int> reduced = mu.parts();
                reduced[k] -= r;
                std::erase(reduced, 0);
                if (Partition(std::move(reduced)) == lambda) slots += mu.multiplicity(v);
            }
            if (slots) out[mu] += c * slots;
        }
    }
    return out;
}

struct WeightTables {
    std::map<Partition, MExpansion> p_to_m;
    std::map<Partition, std::map<Partition, Rat>> m_to_p;
};

const WeightTables& tables(int n) {
    static std::mutex mutex;
    static std::map<int, WeightTables> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    WeightTables t;
    auto ps = partitions_of(n);
    for (const auto& theta : ps) {
        MExpansion acc{{Partition(), 1}};
        for (int part : theta.parts()) acc = multiply_by_power(acc, part);
        t.p_to_m[theta] = std::move(acc);
    }
    // Invert the triangular system by Gaussian elimination over the
    // rationals: unknowns are p-coordinates of each m_lambda.
    int dim = static_cast<int>(ps.size());
    std::vector<std::vector<Rat>> mat(dim, std::vector<Rat>(2 * dim, Rat(0)));
    for (int row = 0; row < dim; ++row) {
        const auto& expansion = t.p_to_m[ps[row]];
        for (int col = 0; col < dim; ++col) {
            auto found = expansion.find(ps[col]);
            if (found != expansion.end()) mat[row][col] = Rat(found->second);
        }
        mat[row][dim + row] = 1;
    }
    // Rows are p_theta in the m basis; solving [M | I] -> [I | M^-1] gives
    // m_lambda in the p basis as the rows of the inverse.
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
            if (mat[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular basis transition matrix");
        std::swap(mat[col], mat[pivot]);
        Rat lead = mat[col][col];
        for (auto& x : mat[col]) x /= lead;
        for (int row = 0; row < dim; ++row) {
            if (row == col || mat[row][col] == 0) continue;
            Rat f = mat[row][col];
            for (int k = 0; k < 2 * dim; ++k) mat[row][k] -= f * mat[col][k];
        }
    }
    for (int row = 0; row < dim; ++row) {
        std::map<Partition, Rat> expansion;
        for (int col = 0; col < dim; ++col) {
            // (M^-1)[row][col] is the p_{ps[col]} coordinate of m_{ps[row]}.
            Rat v = mat[row][dim + col];
            if (v != 0) expansion[ps[col]] = v;
        }
        t.m_to_p[ps[row]] = std::move(expansion);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

const std::map<Partition, std::map<Partition, Int>>& power_to_monomial(int n) {
    return tables(n).p_to_m;
}

const std::map<Partition, std::map<Partition, Rat>>& monomial_to_power(int n) {
    return tables(n).m_to_p;
}

SymFunc schur_in_power_sums(const Partition& theta) {
    int n = theta.weight();
    SymFunc s;
    s.weight = n;
    Rat nfact = Rat(factorial(n));
    for (const auto& cls : partitions_of(n)) {
        Rat c = Rat(class_size(cls)) * Rat(charalg::character(theta, cls)) / nfact;
        if (c != 0) s.p[cls] = AlphaRat(c);
    }
    return s;
}

AlphaRat alpha_inner_product(const SymFunc& f, const SymFunc& g) {
    return alpha_inner_product_t<AlphaRat>(f.p, g.p, AlphaRat::alpha());
}

}  // namespace jack
}  // namespace permfact

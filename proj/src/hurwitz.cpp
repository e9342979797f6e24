#include "permfact/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "permfact/charalg.hpp"
#include "permfact/zseries.hpp"

namespace permfact {
namespace hurwitz {

namespace {

Partition transposition_class(int n) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<size_t>(n - 2), 1);
    return Partition(std::move(parts));
}

}  // namespace

int transposition_count(const HurwitzQuery& q) {
    if (q.genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (q.alpha.weight() < 1) throw std::invalid_argument("alpha must be nonempty");
    if (q.beta) {
        if (q.beta->weight() != q.alpha.weight())
            throw std::invalid_argument("alpha and beta weights differ");
        return q.alpha.length() + q.beta->length() + 2 * q.genus - 2;
    }
    return q.alpha.weight() + q.alpha.length() + 2 * q.genus - 2;
}

Rat hurwitz_g0_closed(const Partition& alpha) {
    if (alpha.weight() < 1) throw std::invalid_argument("alpha must be nonempty");
    int n = alpha.weight();
    int l = alpha.length();
    Rat value(factorial(n + l - 2), aut_order(alpha));
    value *= rat_pow(Rat(n), l - 3);
    for (int a : alpha.parts()) value *= Rat(int_pow(a, a), factorial(a));
    return value;
}

Rat hurwitz_char(const HurwitzQuery& q) {
    if (q.beta)
        throw std::invalid_argument("hurwitz_char takes a single query; use double_hurwitz");
    int r = transposition_count(q);
    int n = q.alpha.weight();
    if (n < 2 && r > 0) return Rat(0);  // one symbol admits no transposition
    charalg::FactorizationSpec spec;
    spec.target = q.alpha;
    spec.factors.assign(static_cast<size_t>(r), n >= 2 ? transposition_class(n) : Partition());
    Int count = charalg::transitive_factorization_count(spec);
    return Rat(count, factorial(n));
}

Rat double_hurwitz(const HurwitzQuery& q) {
    if (!q.beta) throw std::invalid_argument("double_hurwitz needs beta");
    int r = transposition_count(q);
    int n = q.alpha.weight();
    if (n < 2 && r > 0) return Rat(0);
    charalg::FactorizationSpec spec;
    spec.target = q.alpha;
    spec.factors.push_back(*q.beta);
    if (r > 0) spec.factors.insert(spec.factors.end(), static_cast<size_t>(r), transposition_class(n));
    Int count = charalg::transitive_factorization_count(spec);
    return Rat(aut_order(q.alpha) * aut_order(*q.beta) * count, factorial(n));
}

const Rat& JoinCutTable::hurwitz(const Partition& alpha) const {
    auto it = value.find(alpha);
    if (it == value.end())
        throw std::out_of_range("partition outside join-cut table: " + format_partition(alpha));
    return it->second;
}

Rat JoinCutTable::series_coefficient(const Partition& alpha) const {
    return hurwitz(alpha) / Rat(factorial(alpha.weight() + alpha.length() - 2));
}

namespace {

// The coefficient recurrence extracted from the join-cut equation, written
// on c_alpha = H^0_alpha / (n+l-2)!. Matching the z^n p_alpha coefficient:
//
//   (n+l-2) c_alpha = 1/2 [ join(alpha) + cut(alpha) ]
//
// join: a part a of alpha arises by joining cycles i and j = a-i drawn from
// two factors; the remaining parts split between them in every way.
Rat join_sum(const Partition& alpha, const std::map<Partition, Rat>& c) {
    Rat total(0);
    for (int idx = 0; idx < alpha.length(); ++idx) {
        int a = alpha.part(idx);
        if (idx > 0 && a == alpha.part(idx - 1)) continue;
        Partition delta = alpha.minus(Partition({a}));
        for (int w = 0; w <= delta.weight(); ++w) {
            for (const Partition& left : sub_multisets_of_weight(delta, w)) {
                Partition right = delta.minus(left);
                for (int i = 1; i < a; ++i) {
                    int j = a - i;
                    Partition beta = left.merged(Partition({i}));
                    Partition gamma = right.merged(Partition({j}));
                    Int mult = Int(i) * beta.multiplicity(i) * Int(j) * gamma.multiplicity(j);
                    total += Rat(mult) * c.at(beta) * c.at(gamma);
                }
            }
        }
    }
    return total;
}

// cut: parts i and j of alpha arise by cutting a cycle of length i+j in a
// coefficient of the same weight with one part fewer.
Rat cut_sum(const Partition& alpha, const std::map<Partition, Rat>& c) {
    Rat total(0);
    for (int ii = 0; ii < alpha.length(); ++ii) {
        int i = alpha.part(ii);
        if (ii > 0 && i == alpha.part(ii - 1)) continue;
        for (int jj = 0; jj < alpha.length(); ++jj) {
            int j = alpha.part(jj);
            if (jj > 0 && j == alpha.part(jj - 1)) continue;
            if (i == j && alpha.multiplicity(i) < 2) continue;
            Partition beta = alpha.minus(Partition({i, j})).merged(Partition({i + j}));
            total += Rat(Int(i + j) * beta.multiplicity(i + j)) * c.at(beta);
        }
    }
    return total;
}

// Independent re-check: rebuild the left side of the join-cut equation with
// plain series arithmetic and confirm it vanishes identically. The solver
// above never sees this code path, so a recurrence slip (a coefficient
// effectively forced to two values) surfaces here.
void verify_joincut_residual(const std::map<Partition, Rat>& c, int max_weight) {
    PSeries h(max_weight);
    for (const auto& [alpha, v] : c) h.add_term(alpha.weight(), alpha, v);
    std::vector<PSeries> deriv;
    deriv.reserve(static_cast<size_t>(max_weight) + 1);
    deriv.emplace_back(max_weight);  // unused slot 0
    for (int i = 1; i <= max_weight; ++i) deriv.push_back(p_derivative(h, i));

    PSeries quadratic(max_weight);
    PSeries linear(max_weight);
    for (int i = 1; i <= max_weight; ++i) {
        for (int j = 1; j <= max_weight; ++j) {
            PSeries join = scale(deriv[i], Rat(i)) * scale(deriv[j], Rat(j));
            quadratic = quadratic + times_power_sum(join, i + j);
            if (i + j <= max_weight) {
                PSeries cut = times_power_sum(
                    times_power_sum(scale(deriv[i + j], Rat(i + j)), i), j);
                linear = linear + cut;
            }
        }
    }
    PSeries degree_term(max_weight);
    for (int i = 1; i <= max_weight; ++i)
        degree_term = degree_term + times_power_sum(deriv[i], i);

    PSeries residual =
        scale(quadratic + linear, Rat(1, 2)) - euler(h) - degree_term + scale(h, Rat(2));
    if (residual.is_zero()) return;
    for (int d = 0; d <= residual.trunc; ++d) {
        if (residual.slices[d].empty()) continue;
        std::ostringstream msg;
        msg << "join-cut residual nonzero at z^" << d << " "
            << format_partition(residual.slices[d].begin()->first) << " = "
            << to_string(residual.slices[d].begin()->second);
        throw std::logic_error(msg.str());
    }
}

}  // namespace

JoinCutTable joincut_table(int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("join-cut table needs max_weight >= 1");
    std::map<Partition, Rat> c;
    c.emplace(Partition({1}), Rat(1));  // H^0_{(1)} = 1 seeds the recurrence
    for (int n = 2; n <= max_weight; ++n) {
        auto layer = partitions_of(n);
        // The cut term references the same weight with one part fewer, so
        // fill short partitions first.
        std::stable_sort(layer.begin(), layer.end(),
                         [](const Partition& a, const Partition& b) {
                             return a.length() < b.length();
                         });
        for (const auto& alpha : layer) {
            int r = n + alpha.length() - 2;
            Rat total = join_sum(alpha, c) + cut_sum(alpha, c);
            c.emplace(alpha, total / Rat(2 * r));
        }
    }
    verify_joincut_residual(c, max_weight);
    JoinCutTable table;
    table.max_weight = max_weight;
    for (const auto& [alpha, v] : c)
        table.value.emplace(alpha, v * Rat(factorial(alpha.weight() + alpha.length() - 2)));
    return table;
}

namespace {

// sum_i (i^i/i!) p_i s^i for a candidate s.
PSeries exponent_term(const PSeries& s) {
    PSeries arg(s.trunc);
    PSeries pw = s;
    for (int i = 1; i <= s.trunc; ++i) {
        if (i > 1) pw = pw * s;
        if (pw.is_zero()) break;
        arg = arg + scale(times_power_sum(pw, i), Rat(int_pow(Int(i), i), factorial(i)));
    }
    return arg;
}

PSeries times_z(const PSeries& a) {
    PSeries out(a.trunc);
    for (int d = 0; d + 1 <= a.trunc; ++d)
        for (const auto& [m, cc] : a.slices[d]) out.slices[d + 1].emplace(m, cc);
    return out;
}

// Iterate s = z exp(sum_i (i^i/i!) p_i s^i) to its unique series solution;
// each pass fixes at least one more z degree. Returns log(s/z), which the
// functional equation makes equal to the exponent itself.
PSeries log_s_over_z(int trunc) {
    PSeries s(trunc);
    s.add_term(1, Partition(), Rat(1));
    for (int pass = 0; pass < trunc; ++pass) s = times_z(exp_of(exponent_term(s)));
    return exponent_term(s);
}

}  // namespace

LagrangeReport lagrange_check_table(const JoinCutTable& table, int max_degree) {
    if (max_degree < 1 || max_degree > table.max_weight)
        throw std::invalid_argument("check degree must lie within the table");
    PSeries h(max_degree);
    for (const auto& [alpha, v] : table.value)
        if (alpha.weight() <= max_degree)
            h.add_term(alpha.weight(), alpha, table.series_coefficient(alpha));
    PSeries lhs = euler(euler(h));
    PSeries rhs = log_s_over_z(max_degree);
    PSeries diff = lhs - rhs;
    LagrangeReport rep;
    for (int d = 0; d <= diff.trunc; ++d) {
        if (diff.slices[d].empty()) continue;
        rep.pass = false;
        rep.degree = d;
        rep.monomial = diff.slices[d].begin()->first;
        rep.lhs = lhs.coefficient(d, rep.monomial);
        rep.rhs = rhs.coefficient(d, rep.monomial);
        break;
    }
    return rep;
}

LagrangeReport lagrange_consistency_check(int max_degree) {
    return lagrange_check_table(joincut_table(max_degree), max_degree);
}

namespace {

// Solve a x = v exactly. Returns false when inconsistent; free variables
// are pinned to zero.
bool solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> v, int cols,
                 std::vector<Rat>& out) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int rr = row; rr < rows; ++rr)
            if (a[rr][col] != 0) {
                p = rr;
                break;
            }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        std::swap(v[row], v[p]);
        Rat lead = a[row][col];
        for (int k = col; k < cols; ++k) a[row][k] /= lead;
        v[row] /= lead;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == row || a[rr][col] == 0) continue;
            Rat f = a[rr][col];
            for (int k = col; k < cols; ++k) a[rr][k] -= f * a[row][k];
            v[rr] -= f * v[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (int rr = row; rr < rows; ++rr)
        if (v[rr] != 0) return false;
    out.assign(static_cast<size_t>(cols), Rat(0));
    for (size_t i = 0; i < pivot_cols.size(); ++i) out[static_cast<size_t>(pivot_cols[i])] = v[i];
    return true;
}

// Monomial symmetric polynomial m_mu evaluated at the integer tuple x.
Rat monomial_symmetric_value(const Partition& mu, const std::vector<int>& x) {
    std::vector<int> exps(x.size(), 0);
    for (int i = 0; i < mu.length(); ++i) exps[static_cast<size_t>(i)] = mu.part(i);
    std::sort(exps.begin(), exps.end());
    Rat total(0);
    do {
        Int term(1);
        for (size_t i = 0; i < x.size(); ++i) term *= int_pow(Int(x[i]), exps[i]);
        total += Rat(term);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

std::vector<std::vector<int>> sorted_tuples(int length, int bound) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> current(static_cast<size_t>(length));
    // non-increasing tuples over 1..bound
    auto rec = [&](auto&& self, int pos, int high) -> void {
        if (pos == length) {
            tuples.push_back(current);
            return;
        }
        for (int v = high; v >= 1; --v) {
            current[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, bound);
    return tuples;
}

}  // namespace

PolynomialityReport polynomiality_probe(int genus, int length, int part_bound) {
    if (genus < 0 || genus > 1) throw std::invalid_argument("probe supports genus 0 and 1");
    if (length < 1 || length > 3) throw std::invalid_argument("probe supports 1 to 3 parts");
    if (part_bound < 1) throw std::invalid_argument("part bound must be positive");

    PolynomialityReport rep;
    rep.genus = genus;
    rep.length = length;
    rep.part_bound = part_bound;

    auto tuples = sorted_tuples(length, part_bound);
    rep.grid_points = static_cast<int>(tuples.size());
    std::vector<Rat> p_values;
    p_values.reserve(tuples.size());
    bool display_ok = true;
    for (const auto& x : tuples) {
        Partition alpha{std::vector<int>(x)};
        Rat h = genus == 0 ? hurwitz_g0_closed(alpha)
                           : hurwitz_char({alpha, std::nullopt, genus});
        int r = alpha.weight() + length + 2 * genus - 2;
        Rat scale_factor(aut_order(alpha), factorial(r));
        for (int a : alpha.parts()) scale_factor *= Rat(factorial(a), int_pow(Int(a), a));
        Rat p = h * scale_factor;
        p_values.push_back(p);
        if (genus == 0 && p * rat_pow(Rat(alpha.weight()), 3 - length) != 1) display_ok = false;
    }
    rep.g0_display_match = genus == 0 && display_ok;

    // Fit on the interior of the grid, validate on max-part points.
    std::vector<size_t> fit_idx, held_idx;
    for (size_t i = 0; i < tuples.size(); ++i)
        (tuples[i][0] < part_bound ? fit_idx : held_idx).push_back(i);
    if (fit_idx.empty() || held_idx.empty()) {
        rep.note = "grid too small to separate fit and validation points";
        return rep;
    }

    const int degree_cap = 8;
    for (int cap = 0; cap <= degree_cap && !rep.fit_found; ++cap) {
        std::vector<Partition> basis;
        for (int w = 0; w <= cap; ++w)
            for (const auto& mu : partitions_of(w))
                if (mu.length() <= length) basis.push_back(mu);
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> v;
        for (size_t i : fit_idx) {
            std::vector<Rat> row;
            row.reserve(basis.size());
            for (const auto& mu : basis) row.push_back(monomial_symmetric_value(mu, tuples[i]));
            a.push_back(std::move(row));
            v.push_back(p_values[i]);
        }
        std::vector<Rat> sol;
        if (!solve_exact(std::move(a), std::move(v), static_cast<int>(basis.size()), sol))
            continue;
        bool validated = true;
        for (size_t i : held_idx) {
            Rat predicted(0);
            for (size_t b = 0; b < basis.size(); ++b)
                if (sol[b] != 0) predicted += sol[b] * monomial_symmetric_value(basis[b], tuples[i]);
            if (predicted != p_values[i]) {
                validated = false;
                break;
            }
        }
        if (!validated) continue;
        rep.fit_found = true;
        rep.degree = 0;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (sol[b] == 0) continue;
            rep.fit.emplace(basis[b], sol[b]);
            rep.degree = std::max(rep.degree, basis[b].weight());
        }
        break;
    }
    if (!rep.fit_found)
        rep.note = "no symmetric polynomial through degree 8 validates on held-out points";
    return rep;
}

namespace {

struct LatticeFamily {
    std::vector<std::string> coordinates;
    std::vector<std::vector<int>> points;
    // chamber name -> membership predicate over a point
    std::vector<std::pair<std::string, std::function<bool(const std::vector<int>&)>>> chambers;
    std::function<std::string(const std::vector<int>&)> locate;  // for witness reporting
    std::function<Rat(const std::vector<int>&)> value;
    std::function<bool(const std::vector<int>&)> held_out;  // validation split
    int length = 0, parts = 0;
};

std::vector<std::vector<int>> monomials_up_to(int vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<size_t>(vars), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == vars) {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            current[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
        current[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

Rat eval_monomial(const std::vector<int>& exps, const std::vector<int>& x) {
    Int term(1);
    for (size_t i = 0; i < exps.size(); ++i) term *= int_pow(Int(x[i]), exps[i]);
    return Rat(term);
}

ChamberFit fit_chamber(const LatticeFamily& fam, const std::string& name,
                       const std::function<bool(const std::vector<int>&)>& contains) {
    ChamberFit fit;
    fit.chamber = name;
    std::vector<const std::vector<int>*> fit_pts, held_pts;
    for (const auto& pt : fam.points) {
        if (!contains(pt)) continue;
        (fam.held_out(pt) ? held_pts : fit_pts).push_back(&pt);
    }
    fit.fit_points = static_cast<int>(fit_pts.size());
    fit.held_out = static_cast<int>(held_pts.size());
    if (fit_pts.empty()) return fit;

    const int degree_cap = 4;
    int vars = static_cast<int>(fam.coordinates.size());
    for (int cap = 0; cap <= degree_cap && !fit.fit_found; ++cap) {
        auto basis = monomials_up_to(vars, cap);
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> v;
        for (const auto* pt : fit_pts) {
            std::vector<Rat> row;
            row.reserve(basis.size());
            for (const auto& mono : basis) row.push_back(eval_monomial(mono, *pt));
            a.push_back(std::move(row));
            v.push_back(fam.value(*pt));
        }
        std::vector<Rat> sol;
        if (!solve_exact(std::move(a), std::move(v), static_cast<int>(basis.size()), sol))
            continue;
        bool validated = true;
        for (const auto* pt : held_pts) {
            Rat predicted(0);
            for (size_t b = 0; b < basis.size(); ++b)
                if (sol[b] != 0) predicted += sol[b] * eval_monomial(basis[b], *pt);
            if (predicted != fam.value(*pt)) {
                validated = false;
                break;
            }
        }
        if (!validated) continue;
        fit.fit_found = true;
        fit.degree = 0;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (sol[b] == 0) continue;
            fit.fit.emplace(basis[b], sol[b]);
            int total = 0;
            for (int e : basis[b]) total += e;
            fit.degree = std::max(fit.degree, total);
        }
    }
    return fit;
}

Rat eval_fit(const ChamberFit& fit, const std::vector<int>& pt) {
    Rat out(0);
    for (const auto& [mono, coeff] : fit.fit) out += coeff * eval_monomial(mono, pt);
    return out;
}

}  // namespace

PiecewiseReport double_piecewise_probe(PiecewiseFamily family, int bound) {
    PiecewiseReport rep;
    rep.family = family;

    LatticeFamily fam;
    std::map<std::vector<int>, Rat> memo;
    if (family == PiecewiseFamily::cycle_diagonal) {
        if (bound < 2) throw std::invalid_argument("cycle family needs bound >= 2");
        rep.coordinates = {"n"};
        rep.degree_if_plus = 4 * 0 - 3 + 1 + 1;
        rep.degree_if_minus = rep.degree_if_plus - 2;
        bool known_form = true;
        for (int n = 1; n <= bound; ++n) {
            Partition cycle({n});
            Rat h = double_hurwitz({cycle, cycle, 0});
            if (h * Rat(n) != 1) known_form = false;
        }
        rep.note = known_form
                       ? "degenerate family: every value equals 1/n exactly, no polynomial fit "
                         "attempted"
                       : "family deviates from the expected 1/n form";
        rep.observed_degree = -1;
        return rep;
    }

    if (family == PiecewiseFamily::one_part_beta) {
        if (bound < 4) throw std::invalid_argument("one-part family needs bound >= 4");
        fam.coordinates = {"a", "b"};
        fam.length = 2;
        fam.parts = 1;
        for (int n = 2; n <= bound; ++n)
            for (int a = 1; a < n; ++a) fam.points.push_back({a, n - a});
        fam.value = [&memo](const std::vector<int>& pt) {
            auto it = memo.find(pt);
            if (it != memo.end()) return it->second;
            Partition alpha({pt[0], pt[1]});
            Partition beta({pt[0] + pt[1]});
            Rat h = double_hurwitz({alpha, beta, 0});
            memo.emplace(pt, h);
            return h;
        };
        fam.held_out = [bound](const std::vector<int>& pt) { return pt[0] + pt[1] == bound; };
        fam.chambers = {
            {"a<b", [](const std::vector<int>& pt) { return pt[0] < pt[1]; }},
            {"a>b", [](const std::vector<int>& pt) { return pt[0] > pt[1]; }},
        };
        fam.locate = [](const std::vector<int>& pt) {
            if (pt[0] < pt[1]) return std::string("chamber a<b");
            if (pt[0] > pt[1]) return std::string("chamber a>b");
            return std::string("wall a=b");
        };
    } else {
        if (bound < 5) throw std::invalid_argument("two-part family needs bound >= 5");
        fam.coordinates = {"a", "c", "n"};
        fam.length = 2;
        fam.parts = 2;
        for (int n = 4; n <= bound; ++n)
            for (int a = 1; a < n; ++a)
                for (int cc = 1; cc < n; ++cc) fam.points.push_back({a, cc, n});
        fam.value = [&memo](const std::vector<int>& pt) {
            auto it = memo.find(pt);
            if (it != memo.end()) return it->second;
            Partition alpha({pt[0], pt[2] - pt[0]});
            Partition beta({pt[1], pt[2] - pt[1]});
            Rat h = double_hurwitz({alpha, beta, 0});
            memo.emplace(pt, h);
            return h;
        };
        fam.held_out = [bound](const std::vector<int>& pt) { return pt[2] == bound; };
        fam.chambers = {
            {"a<c, a+c<n",
             [](const std::vector<int>& pt) { return pt[0] < pt[1] && pt[0] + pt[1] < pt[2]; }},
            {"a>c, a+c<n",
             [](const std::vector<int>& pt) { return pt[0] > pt[1] && pt[0] + pt[1] < pt[2]; }},
            {"a<c, a+c>n",
             [](const std::vector<int>& pt) { return pt[0] < pt[1] && pt[0] + pt[1] > pt[2]; }},
            {"a>c, a+c>n",
             [](const std::vector<int>& pt) { return pt[0] > pt[1] && pt[0] + pt[1] > pt[2]; }},
        };
        fam.locate = [](const std::vector<int>& pt) {
            std::string s;
            if (pt[0] == pt[1])
                s = "wall a=c";
            else if (pt[0] + pt[1] == pt[2])
                s = "wall a+c=n";
            else {
                s = "chamber ";
                s += pt[0] < pt[1] ? "a<c" : "a>c";
                s += pt[0] + pt[1] < pt[2] ? ", a+c<n" : ", a+c>n";
            }
            return s;
        };
    }

    rep.coordinates = fam.coordinates;
    rep.degree_if_plus = 4 * 0 - 3 + fam.length + fam.parts;
    rep.degree_if_minus = 4 * 0 - 3 + fam.length - fam.parts;

    for (const auto& [name, contains] : fam.chambers)
        rep.chambers.push_back(fit_chamber(fam, name, contains));

    rep.observed_degree = -1;
    for (const auto& chamber : rep.chambers)
        if (chamber.fit_found) rep.observed_degree = std::max(rep.observed_degree, chamber.degree);

    // Do the chamber fits disagree as polynomials?
    for (size_t i = 0; i + 1 < rep.chambers.size() && !rep.chamber_fits_differ; ++i)
        for (size_t j = i + 1; j < rep.chambers.size(); ++j)
            if (rep.chambers[i].fit_found && rep.chambers[j].fit_found &&
                rep.chambers[i].fit != rep.chambers[j].fit) {
                rep.chamber_fits_differ = true;
                break;
            }

    // Wall-crossing witness: the first chamber's fit taken outside its own
    // chamber. Points across the wall come first in the search order.
    if (!rep.chambers.empty() && rep.chambers.front().fit_found) {
        const auto& base = rep.chambers.front();
        const auto& inside = fam.chambers.front().second;
        std::vector<std::vector<int>> outside;
        for (const auto& pt : fam.points)
            if (!inside(pt)) outside.push_back(pt);
        std::stable_sort(outside.begin(), outside.end(),
                         [&fam](const std::vector<int>& x, const std::vector<int>& y) {
                             return fam.locate(x).find("chamber") != std::string::npos &&
                                    fam.locate(y).find("chamber") == std::string::npos;
                         });
        for (const auto& pt : outside) {
            Rat predicted = eval_fit(base, pt);
            Rat actual = fam.value(pt);
            if (predicted != actual) {
                rep.witness = CrossWallWitness{pt, fam.locate(pt), predicted, actual};
                break;
            }
        }
    }
    return rep;
}

}  // namespace hurwitz
}  // namespace permfact

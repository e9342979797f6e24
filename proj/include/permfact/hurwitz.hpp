#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permfact/numbers.hpp"
#include "permfact/partition.hpp"

namespace permfact {
namespace hurwitz {

/// A single or double Hurwitz query; beta present makes it double.
struct HurwitzQuery {
    Partition alpha;
    std::optional<Partition> beta;
    int genus = 0;
};

/// Number of simple branch points: n + l(alpha) + 2g - 2, or for double
/// queries l(alpha) + l(beta) + 2g - 2. Throws std::invalid_argument on a
/// weight mismatch or negative genus.
int transposition_count(const HurwitzQuery& q);

/// Genus 0 closed form ((n+l-2)!/|Aut|) n^{l-3} prod a_j^{a_j}/a_j!.
/// Rational in general: n^{l-3} is a genuine fraction for l < 3.
Rat hurwitz_g0_closed(const Partition& alpha);

/// Character route: (1/n!) times the transitive factorization count of the
/// class of alpha into r transpositions, the count class-summed over the
/// target class. q.beta must be absent.
Rat hurwitz_char(const HurwitzQuery& q);

/// (|Aut alpha| |Aut beta| / n!) times the transitive count with one factor
/// from the class of beta and r transpositions. q.beta must be present.
Rat double_hurwitz(const HurwitzQuery& q);

/// Genus 0 values H^0_alpha for every partition of weight <= max_weight,
/// solved from the join-cut recurrence.
struct JoinCutTable {
    int max_weight = 0;
    std::map<Partition, Rat> value;

    const Rat& hurwitz(const Partition& alpha) const;
    /// H^0_alpha / (n+l-2)!, the coefficient of z^n p_alpha in the series.
    Rat series_coefficient(const Partition& alpha) const;
};

/// Solves the recurrence bottom-up from H^0_{(1)} = 1, then re-verifies the
/// full join-cut equation residually on the finished table through a second,
/// independent code path (series arithmetic). Any residual throws
/// std::logic_error: it would mean a coefficient is forced to two values.
JoinCutTable joincut_table(int max_weight);

struct LagrangeReport {
    bool pass = true;
    int degree = -1;     // z degree of the first mismatch when !pass
    Partition monomial;  // power-sum monomial of that mismatch
    Rat lhs, rhs;
};

/// Checks the change-of-variables identity: the squared Euler operator
/// (z d/dz)^2 applied to the genus 0 series equals log(s/z), where s solves
/// s = z exp(sum_i (i^i/i!) p_i s^i). Compared through z^max_degree.
LagrangeReport lagrange_check_table(const JoinCutTable& table, int max_degree);
LagrangeReport lagrange_consistency_check(int max_degree);

/// Probe of the conjectured product form H^g = (r!/|Aut|) P(parts) prod
/// a_j^{a_j}/a_j!: extracts P on a grid, fits a symmetric polynomial on a
/// sub-grid by exact interpolation and validates it on the held-out points.
struct PolynomialityReport {
    int genus = 0;
    int length = 0;
    int part_bound = 0;
    int grid_points = 0;
    bool fit_found = false;
    int degree = -1;              // total degree of the validated fit
    std::map<Partition, Rat> fit;  // coefficients on monomial symmetric polynomials
    /// Genus 0 only: P times n^{3-l} is exactly 1 on the whole grid, the
    /// closed-form display (a polynomial statement only for l >= 3).
    bool g0_display_match = false;
    std::string note;
};
PolynomialityReport polynomiality_probe(int genus, int length, int part_bound);

/// Families for the double Hurwitz piecewise polynomiality probe.
enum class PiecewiseFamily {
    one_part_beta,  // alpha=(a,b), beta=(a+b); coordinates (a,b)
    two_part_beta,  // alpha=(a,n-a), beta=(c,n-c); coordinates (a,c,n)
    cycle_diagonal, // alpha=beta=(n); known form 1/n, degenerate acceptance
};

struct ChamberFit {
    std::string chamber;  // defining inequalities, e.g. "a<c, a+c<n"
    bool fit_found = false;
    int degree = -1;
    std::map<std::vector<int>, Rat> fit;  // exponent vector over coordinates
    int fit_points = 0;
    int held_out = 0;
};

struct CrossWallWitness {
    std::vector<int> point;  // coordinates of the mispredicted lattice point
    std::string located;     // which chamber or wall the point sits in
    Rat predicted, actual;
};

struct PiecewiseReport {
    PiecewiseFamily family{};
    std::vector<std::string> coordinates;
    std::vector<ChamberFit> chambers;
    bool chamber_fits_differ = false;
    /// First lattice point outside the first chamber where that chamber's
    /// fit mispredicts; absent when the fit extends globally.
    std::optional<CrossWallWitness> witness;
    int observed_degree = -1;
    int degree_if_plus = 0;   // 4g - 3 + l + k, reported only
    int degree_if_minus = 0;  // 4g - 3 + l - k, reported only
    std::string note;
};
PiecewiseReport double_piecewise_probe(PiecewiseFamily family, int bound);

}  // namespace hurwitz
}  // namespace permfact

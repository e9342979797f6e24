// Acceptance gate: one line per criterion, nonzero exit when any fail.
// Every expected value here is either computed by a second independent route
// inside this run or was hand-derived and frozen in the unit suites.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permfact/brute.hpp"
#include "permfact/charalg.hpp"
#include "permfact/hurwitz.hpp"
#include "permfact/jack.hpp"
#include "permfact/maps.hpp"
#include "permfact/series.hpp"

using namespace permfact;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(const Partition& p) { return format_partition(p); }

// All multisets of size m over the partitions of n, largest class last so the
// brute search can solve it instead of enumerating it.
std::vector<std::vector<Partition>> factor_multisets(int n, int m) {
    auto classes = partitions_of(n);
    std::vector<std::vector<Partition>> out;
    std::vector<int> idx(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == m) {
            std::vector<Partition> factors;
            for (int i : idx) factors.push_back(classes[static_cast<size_t>(i)]);
            std::sort(factors.begin(), factors.end(),
                      [](const Partition& a, const Partition& b) {
                          return class_size(a) < class_size(b);
                      });
            out.push_back(std::move(factors));
            return;
        }
        for (int i = start; i < static_cast<int>(classes.size()); ++i) {
            idx[static_cast<size_t>(pos)] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Outcome criterion_counts_match_brute() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (const auto& factors : factor_multisets(n, m)) {
                for (const auto& target : partitions_of(n)) {
                    charalg::FactorizationSpec spec{target, factors};
                    o.require(charalg::factorization_count(spec) ==
                                  brute::enumerate_factorizations(spec),
                              "disagreement at target " + fmt(target) + " with " +
                                  std::to_string(m) + " factors");
                    if (!o.pass) return o;
                }
            }
        }
    }
    return o;
}

Outcome criterion_transitive_counts_match_brute() {
    Outcome o;
    for (int n = 1; n <= 5 && o.pass; ++n) {
        for (int m = 1; m <= 3 && o.pass; ++m) {
            for (const auto& factors : factor_multisets(n, m)) {
                for (const auto& target : partitions_of(n)) {
                    charalg::FactorizationSpec spec{target, factors};
                    o.require(charalg::transitive_factorization_count(spec) ==
                                  brute::enumerate_transitive_factorizations(spec),
                              "disagreement at target " + fmt(target) + " with " +
                                  std::to_string(m) + " factors");
                    if (!o.pass) return o;
                }
            }
        }
    }
    return o;
}

Outcome criterion_character_tables() {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        auto labels = partitions_of(n);
        // row orthogonality with class sizes
        for (const auto& lam : labels) {
            for (const auto& mu : labels) {
                Int dot = 0;
                for (const auto& theta : labels)
                    dot += class_size(theta) * charalg::character(lam, theta) *
                           charalg::character(mu, theta);
                Int expected = lam == mu ? factorial(n) : Int(0);
                o.require(dot == expected, "orthogonality fails at " + fmt(lam) + ", " + fmt(mu));
            }
        }
        // dimensions against the hook length formula
        Int dim_sq = 0;
        for (const auto& lam : labels) {
            Int dim = charalg::character(lam, Partition(std::vector<int>(n, 1)));
            o.require(dim * hook_product(lam) == factorial(n),
                      "hook formula fails at " + fmt(lam));
            dim_sq += dim * dim;
        }
        o.require(dim_sq == factorial(n), "dimension squares do not sum to the group order");
        if (!o.pass) break;
    }
    return o;
}

Outcome criterion_map_counts() {
    Outcome o;
    for (int edges = 1; 2 * edges <= 8; ++edges) {
        int n = 2 * edges;
        Partition tau(std::vector<int>(static_cast<size_t>(edges), 2));
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                Int algebraic = maps::count_rooted_hypermaps(lambda, mu, tau);
                Int decorated = brute::enumerate_decorated_maps(lambda, mu, tau);
                o.require(Rat(decorated, factorial(n - 1)) == Rat(algebraic),
                          "map count disagrees at vertices " + fmt(lambda) + ", faces " +
                              fmt(mu));
                if (!o.pass) return o;
            }
        }
    }
    // the hand-checked embedded graph on 18 darts: valid, genus one
    maps::MapTriple torus{
        parse_perm("(1 8 5 15)(2 12 10 14 16 11)(3 18 17 7)(4 9 13)(6)"),
        parse_perm("(1 14)(2 17)(3 7)(4 10)(5 13)(6 8)(9 18)(11 15)(12 16)"),
        parse_perm("(1 6 8 13 10)(2 16 15 14 12 4 18)(3 9 5 11 17)(7)")};
    o.require(maps::validate_triple(torus).ok(), "the 18 dart triple fails validation");
    auto genus = maps::map_genus(torus);
    o.require(genus.ok && genus.genus == 1, "the 18 dart triple is not genus one");
    return o;
}

Outcome criterion_series_collapse() {
    Outcome o;
    auto schur = jack::schur_triple_series(6);
    auto fixed6 = jack::psi_series_at(Rat(1), 6);
    for (int w = 0; w <= 6; ++w)
        o.require(fixed6.slices[w] == schur.slices[w],
                  "deformed series at parameter 1 differs from the plain series at weight " +
                      std::to_string(w));

    auto fixed8 = jack::psi_series_at(Rat(1), 8);
    for (int edges = 1; 2 * edges <= 8; ++edges) {
        int n = 2 * edges;
        Partition tau(std::vector<int>(static_cast<size_t>(edges), 2));
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                o.require(fixed8.coefficient({lambda, mu, tau}) ==
                              Rat(maps::count_rooted_hypermaps(lambda, mu, tau)),
                          "series coefficient differs from the map count at vertices " +
                              fmt(lambda) + ", faces " + fmt(mu));
                if (!o.pass) return o;
            }
        }
    }
    return o;
}

Outcome criterion_b_scan() {
    Outcome o;
    auto reports = jack::b_conjecture_scan(5);
    o.require(!reports.empty(), "empty scan");
    for (const auto& rep : reports)
        o.require(rep.pass(), "scan fails at (" + fmt(rep.triple.lambda) + ", " +
                                  fmt(rep.triple.mu) + ", " + fmt(rep.triple.tau) + ")");

    // the installed executable reports the same verdict through its exit code
    std::string cmd = std::string("'") + PERMFACT_CLI_PATH + "' b-scan --max-weight 5 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
              "executable exit code disagrees with the scan verdict");
    return o;
}

Outcome criterion_hurwitz_routes() {
    Outcome o;
    // join-cut table against the closed product form
    auto table = hurwitz::joincut_table(8);
    for (const auto& [alpha, value] : table.value)
        o.require(value == hurwitz::hurwitz_g0_closed(alpha),
                  "join-cut and closed form disagree at " + fmt(alpha));

    // character route against the closed form
    for (int n = 1; n <= 6; ++n)
        for (const auto& alpha : partitions_of(n))
            o.require(hurwitz::hurwitz_char({alpha, std::nullopt, 0}) ==
                          hurwitz::hurwitz_g0_closed(alpha),
                      "character route disagrees with the closed form at " + fmt(alpha));

    // character route against the brute search wherever it is cheap
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> t(static_cast<size_t>(n - 1), 1);
        t[0] = 2;
        Partition transposition(t);
        for (const auto& alpha : partitions_of(n)) {
            for (int genus = 0; genus <= 2; ++genus) {
                hurwitz::HurwitzQuery q{alpha, std::nullopt, genus};
                int r = hurwitz::transposition_count(q);
                if (r > 6) continue;
                charalg::FactorizationSpec spec{
                    alpha, std::vector<Partition>(static_cast<size_t>(r), transposition)};
                Rat searched =
                    Rat(brute::enumerate_transitive_factorizations(spec), factorial(n));
                o.require(hurwitz::hurwitz_char(q) == searched,
                          "character route disagrees with the search at " + fmt(alpha) +
                              ", genus " + std::to_string(genus));
            }
        }
    }

    // frozen hand-worked anchors
    o.require(table.hurwitz(parse_partition("[2,1]")) == Rat(4), "anchor [2,1] is not 4");
    o.require(table.hurwitz(parse_partition("[1,1,1]")) == Rat(4), "anchor [1,1,1] is not 4");
    o.require(hurwitz::hurwitz_char({parse_partition("[2]"), std::nullopt, 1}) == Rat(1, 2),
              "genus 1 anchor [2] is not 1/2");
    return o;
}

Outcome criterion_series_inversion() {
    Outcome o;
    auto report = hurwitz::lagrange_consistency_check(6);
    o.require(report.pass, "identity fails first at degree " + std::to_string(report.degree) +
                               ", monomial " + fmt(report.monomial));
    return o;
}

Outcome criterion_single_polynomiality() {
    Outcome o;
    auto three = hurwitz::polynomiality_probe(0, 3, 5);
    o.require(three.fit_found, "no fit for three parts");
    o.require(three.degree == 0, "three part fit is not constant");
    o.require(three.fit.size() == 1 && three.fit.count(Partition{}) == 1 &&
                  three.fit.at(Partition{}) == Rat(1),
              "three part fit is not the constant 1");
    o.require(three.g0_display_match, "scaled three part display is not identically 1");

    auto two = hurwitz::polynomiality_probe(0, 2, 5);
    o.require(!two.fit_found, "two parts fit a polynomial but must not (1/n is not one)");
    o.require(two.g0_display_match, "scaled two part display is not identically 1");
    return o;
}

Outcome criterion_double_piecewise() {
    Outcome o;
    // diagonal anchors
    for (int n = 1; n <= 6; ++n) {
        Partition cycle({n});
        o.require(hurwitz::double_hurwitz({cycle, cycle, 0}) == Rat(1, n),
                  "diagonal value at n=" + std::to_string(n) + " is not 1/n");
    }

    auto one_part = hurwitz::double_piecewise_probe(hurwitz::PiecewiseFamily::one_part_beta, 6);
    o.require(one_part.chambers.size() == 2, "expected two chambers");
    for (const auto& ch : one_part.chambers)
        o.require(ch.fit_found && ch.degree == 0 && ch.fit.size() == 1 &&
                      ch.fit.begin()->second == Rat(1),
                  "chamber " + ch.chamber + " does not fit the constant 1");

    // The gate asks this family to witness a polynomial change across its
    // wall. Its value is the constant 1 on the whole lattice (checked above),
    // so both chamber fits coincide and no witness can exist; this leg is
    // expected to fail and stays red on purpose.
    o.require(one_part.witness.has_value(),
              "no cross-wall witness exists: the family's value is identically 1, both "
              "chamber fits agree, so there is no wall to cross");

    // supplementary family with a genuine wall, reported alongside
    auto two_part = hurwitz::double_piecewise_probe(hurwitz::PiecewiseFamily::two_part_beta, 8);
    bool supplementary =
        two_part.chamber_fits_differ && two_part.witness.has_value() &&
        two_part.witness->predicted != two_part.witness->actual;
    std::ostringstream extra;
    if (supplementary) {
        const auto& w = *two_part.witness;
        extra << "supplementary pair-of-parts family does cross a wall: predicted "
              << to_string(w.predicted) << ", actual " << to_string(w.actual) << " at (";
        for (size_t i = 0; i < w.point.size(); ++i)
            extra << (i ? "," : "") << w.point[i];
        extra << "); observed degree " << two_part.observed_degree
              << ", degree candidates " << two_part.degree_if_plus << " and "
              << two_part.degree_if_minus << " (reported, not asserted)";
    } else {
        extra << "supplementary pair-of-parts family also failed to witness a wall";
        o.require(false, extra.str());
    }
    if (!o.detail.empty()) o.detail += "; " + extra.str();
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "factorization counts match the exhaustive search through weight 6",
         criterion_counts_match_brute},
        {2, "transitive counts match the exhaustive search through weight 5",
         criterion_transitive_counts_match_brute},
        {3, "character tables are orthogonal and obey the hook formula through weight 7",
         criterion_character_tables},
        {4, "rooted map counts match the exhaustive search through 4 edges",
         criterion_map_counts},
        {5, "the deformed series at parameter 1 reproduces plain map counts",
         criterion_series_collapse},
        {6, "series coefficients pass the positivity scan through weight 5",
         criterion_b_scan},
        {7, "three independent routes agree on single branched cover counts",
         criterion_hurwitz_routes},
        {8, "the genus 0 series satisfies its change-of-variables identity",
         criterion_series_inversion},
        {9, "scaled single cover counts fit the expected polynomials",
         criterion_single_polynomiality},
        {10, "double cover counts are piecewise polynomial with a wall witness",
         criterion_double_piecewise},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o = c.run();
        if (o.pass) {
            std::cout << "[PASS] criterion " << c.number << ": " << c.name << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.name << " (" << o.detail
                      << ")\n";
        }
        std::cout.flush();
    }
    std::cout << (static_cast<int>(criteria.size()) - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

#include "permfact/numbers.hpp"

namespace permfact {

/// Dense univariate polynomial over Rat, coefficients low degree first.
/// Always trimmed: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(Rat constant);  // NOLINT: implicit on purpose, scalars promote
    explicit Poly(std::vector<Rat> coeffs);

    static Poly variable();  // the monomial x

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rat(0);
    }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

    Rat eval(const Rat& x) const;
    /// Composition with x + c (Taylor shift).
    Poly shifted(const Rat& c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly&) const = default;

    /// Euclidean division; b must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic gcd over the rationals.
Poly poly_gcd(Poly a, Poly b);

/// Render with the given variable name, e.g. "2*a^2 - 1/3*a + 1"; "0" when zero.
std::string format_poly(const Poly& p, const std::string& var);

/// Reduced rational function in one symbol (the Jack parameter). Invariants:
/// gcd(num, den) = 1 and den monic, so equality is representational.
class AlphaRat {
public:
    AlphaRat() : num_(), den_(Rat(1)) {}
    AlphaRat(Rat constant) : num_(std::move(constant)), den_(Rat(1)) {}  // NOLINT
    AlphaRat(int constant) : num_(Rat(constant)), den_(Rat(1)) {}        // NOLINT
    AlphaRat(Poly num, Poly den);

    static AlphaRat alpha() { return AlphaRat(Poly::variable(), Poly(Rat(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the reduced denominator is 1.
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Evaluate at a rational point; throws std::domain_error on a pole.
    Rat eval(const Rat& x) const;
    /// Substitute x -> x + c.
    AlphaRat shifted(const Rat& c) const;

    friend AlphaRat operator+(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a);
    friend AlphaRat operator*(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator/(const AlphaRat& a, const AlphaRat& b);
    AlphaRat& operator+=(const AlphaRat& o) { return *this = *this + o; }
    AlphaRat& operator-=(const AlphaRat& o) { return *this = *this - o; }
    AlphaRat& operator*=(const AlphaRat& o) { return *this = *this * o; }
    AlphaRat& operator/=(const AlphaRat& o) { return *this = *this / o; }
    bool operator==(const AlphaRat&) const = default;

private:
    void reduce();
    Poly num_, den_;
};

AlphaRat pow(const AlphaRat& base, int e);

/// "num / den" with both sides parenthesized when den != 1.
std::string format_alpha_rat(const AlphaRat& f, const std::string& var = "a");

}  // namespace permfact

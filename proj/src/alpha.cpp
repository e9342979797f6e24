#include "permfact/alpha.hpp"

#include <stdexcept>

namespace permfact {

Poly::Poly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

Poly Poly::shifted(const Rat& c) const {
    // Horner in the shifted variable: p(x+c) built from the top coefficient down.
    Poly result;
    Poly shift_var(std::vector<Rat>{c, Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * shift_var + Poly(*it);
    return result;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
    std::vector<Rat> c = a.coeffs_;
    for (auto& x : c) x = -x;
    Poly r;
    r.coeffs_ = std::move(c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs_;
    int db = b.degree();
    std::vector<Rat> quot(a.degree() >= db ? a.degree() - db + 1 : 0, Rat(0));
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        Rat f = rem[d] / b.coeffs_[db];
        quot[d - db] = f;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * b.coeffs_[j];
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        Poly::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) {
            // Keep remainders monic to tame coefficient growth.
            Rat lead = b.leading();
            std::vector<Rat> c = b.coeffs();
            for (auto& x : c) x /= lead;
            b = Poly(std::move(c));
        }
    }
    if (a.is_zero()) return a;
    Rat lead = a.leading();
    std::vector<Rat> c = a.coeffs();
    for (auto& x : c) x /= lead;
    return Poly(std::move(c));
}

std::string format_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rat c = p.coeff(d);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = mag == 1 && d > 0;
        if (!unit) out += to_string(mag);
        if (d > 0) {
            if (!unit) out += "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

AlphaRat::AlphaRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void AlphaRat::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        std::vector<Rat> cn = num_.coeffs();
        for (auto& x : cn) x /= lead;
        num_ = Poly(std::move(cn));
        std::vector<Rat> cd = den_.coeffs();
        for (auto& x : cd) x /= lead;
        den_ = Poly(std::move(cd));
    }
}

Rat AlphaRat::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

AlphaRat AlphaRat::shifted(const Rat& c) const {
    return AlphaRat(num_.shifted(c), den_.shifted(c));
}

AlphaRat operator+(const AlphaRat& a, const AlphaRat& b) {
    return AlphaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator-(const AlphaRat& a) {
    AlphaRat r = a;
    r.num_ = -r.num_;
    return r;
}

AlphaRat operator-(const AlphaRat& a, const AlphaRat& b) { return a + (-b); }

AlphaRat operator*(const AlphaRat& a, const AlphaRat& b) {
    return AlphaRat(a.num_ * b.num_, a.den_ * b.den_);
}

AlphaRat operator/(const AlphaRat& a, const AlphaRat& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return AlphaRat(a.num_ * b.den_, a.den_ * b.num_);
}

AlphaRat pow(const AlphaRat& base, int e) {
    if (e < 0) return AlphaRat(1) / pow(base, -e);
    AlphaRat r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string format_alpha_rat(const AlphaRat& f, const std::string& var) {
    if (f.is_polynomial()) return format_poly(f.num(), var);
    return "(" + format_poly(f.num(), var) + ") / (" + format_poly(f.den(), var) + ")";
}

}  // namespace permfact

#ifndef NADYN_POLYNOMIAL_HPP
#define NADYN_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "valued.hpp"

// Exact polynomial arithmetic over Z and Q. Coefficients are stored
// constant term first; trailing zeros are trimmed and the zero
// polynomial is the empty list.

namespace nadyn {

template <class C>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<C> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }
    static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }
    // t^k
    static Poly monomial(std::size_t k, const C& coeff = C(1)) {
        std::vector<C> cs(k + 1, C(0));
        cs[k] = coeff;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
    const C& lead() const { return c_.back(); }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly r = *this;
        for (C& x : r.c_) x = -x;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<C> r(c_.size() + o.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const C& s) const {
        Poly r = *this;
        for (C& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // Coefficient reversal: t^deg * p(1/t).
    Poly reversed() const {
        std::vector<C> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<C> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> cs;
    cs.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

// Division in Q[t]; returns {quotient, remainder}.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw BadInput("polynomial division by zero");
    RatPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        Rat c = r.lead() / b.lead();
        RatPoly m = RatPoly::monomial(k, c);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

// Monic gcd in Q[t].
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    Rat inv = Rat(1) / a.lead();
    return a * inv;
}

// Content and primitive part over Z. The content carries the sign of the
// leading coefficient so the primitive part has positive lead.
inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0 && p.lead() < 0) g = -g;
    return g;
}

// Clear denominators and divide by the content; zero maps to zero.
inline IntPoly primitive_from_rat(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int den = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> cs;
    cs.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) {
        Rat s = c * Rat(den);
        s.canonicalize();
        cs.push_back(s.get_num());
    }
    IntPoly z(std::move(cs));
    Int g = content(z);
    std::vector<Int> out;
    out.reserve(z.coeffs().size());
    for (const Int& c : z.coeffs()) out.push_back(c / g);
    return IntPoly(std::move(out));
}

// Exact division in Z[t]; throws if the division leaves a remainder.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) throw BadInput("exact_div: not divisible");
    std::vector<Int> cs;
    cs.reserve(q.coeffs().size());
    for (const Rat& c : q.coeffs()) {
        if (c.get_den() != 1) throw BadInput("exact_div: non-integer quotient");
        cs.push_back(c.get_num());
    }
    return IntPoly(std::move(cs));
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(to_rat(a), to_rat(b)).second.is_zero();
}

inline std::string to_coeff_str(const Int& c) { return c.get_str(); }
inline std::string to_coeff_str(const Rat& c) { return rat_str(c); }

// Human form like "1 - t - t^2" in the given variable.
template <class C>
inline std::string poly_str(const Poly<C>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        C c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        C mag = neg ? C(-c) : c;
        std::string term;
        if (k == 0) {
            term = to_coeff_str(mag);
        } else {
            std::string pw = k == 1 ? var : var + "^" + std::to_string(k);
            term = (mag == 1) ? pw : to_coeff_str(mag) + pw;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? "-" : "+") + term;
        }
    }
    return out;
}

}  // namespace nadyn

#endif

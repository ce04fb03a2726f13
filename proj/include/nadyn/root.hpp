#ifndef NADYN_ROOT_HPP
#define NADYN_ROOT_HPP

#include <cmath>
#include <cstdlib>

#include "matrix.hpp"

// Certified isolation of the leading eigenvalue: Sturm-sequence sign
// counts with exact rational endpoints, rational roots detected exactly
// before any bisection.

namespace nadyn {

struct RootCertificate {
    IntPoly polynomial;  // det(tI - A) with zero eigenvalues stripped
    Rat lo;
    Rat hi;              // lo <= root <= hi, hi - lo <= tol (0 when exact)
    bool exact;          // lo == hi == the root
    double decimal;      // bracket midpoint

    Rat width() const { return hi - lo; }
};

inline Rat default_root_tol() { return Rat(1, Int("1000000000000")); }

namespace detail {

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = divmod(a, b).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline int sign_changes(const std::vector<RatPoly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const RatPoly& q : chain) {
        Rat v = q.eval(x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Number of distinct real roots in (lo, hi].
inline int roots_in(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi) {
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace detail

// Largest real root of a monic integer polynomial (the characteristic
// polynomial with its x^k factor stripped), bracketed to width <= tol.
inline RootCertificate leading_root_of_charpoly(IntPoly p, const Rat& tol) {
    // Strip zero roots.
    std::size_t shift = 0;
    while (!p.is_zero() && p.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        std::vector<Int> cs(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
        p = IntPoly(std::move(cs));
    }
    if (p.degree() <= 0) {
        // Nilpotent input: the certificate for root 0.
        return {IntPoly{0, 1}, Rat(0), Rat(0), true, 0.0};
    }

    // Cauchy bound: all roots have |x| <= 1 + max |c_k| (monic).
    Int bound = 1;
    for (const Int& c : p.coeffs()) {
        Int a = abs(c);
        if (a > bound) bound = a;
    }
    Rat hi = Rat(bound + 1);

    std::vector<RatPoly> chain = detail::sturm_chain(to_rat(p));

    // Exact detection first: monic, so rational roots are integer
    // divisors of the constant term.
    Int c0 = abs(p.coeff(0));
    Int best;
    bool found = false;
    for (Int d = 1; d * d <= c0; ++d) {
        if (c0 % d != 0) continue;
        for (Int cand : {Int(d), Int(c0 / d)}) {
            for (Int r : {Int(cand), Int(-cand)}) {
                if (to_rat(p).eval(Rat(r)) == 0 && (!found || r > best)) {
                    best = r;
                    found = true;
                }
            }
        }
    }
    if (found && detail::roots_in(chain, Rat(best), hi) == 0) {
        return {p, Rat(best), Rat(best), true, Rat(best).get_d()};
    }

    // Bisect keeping at least one root above lo; the largest real root
    // stays inside (lo, hi].
    Rat lo(0);
    if (detail::roots_in(chain, lo, hi) == 0)
        throw BadInput("leading_root: no positive real root");
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (detail::roots_in(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {p, lo, hi, false, Rat((lo + hi) / 2).get_d()};
}

inline RootCertificate leading_root(const IntMatrix& a, const Rat& tol) {
    return leading_root_of_charpoly(char_poly(a), tol);
}

// Accepts det(I - tA) form: reversal recovers the characteristic
// polynomial up to the stripped zero eigenvalues.
inline RootCertificate leading_root(const IntPoly& det_form, const Rat& tol) {
    if (det_form.coeff(0) != 1)
        throw BadInput("leading_root: expected det(I - tA) with constant term 1");
    return leading_root_of_charpoly(det_form.reversed(), tol);
}

// log of the certified root; 0 exactly when the root is 1 or 0.
inline double entropy_log(const RootCertificate& cert) {
    if (cert.exact) return cert.lo <= 1 ? 0.0 : std::log(cert.lo.get_d());
    return std::log(cert.decimal);
}

}  // namespace nadyn

#endif

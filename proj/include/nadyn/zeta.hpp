#ifndef NADYN_ZETA_HPP
#define NADYN_ZETA_HPP

#include <map>

#include "matrix.hpp"

// Zeta functions of subshifts of finite type as exact rational
// functions in Z[t], plus the excluded-cycle quotient and its
// cyclotomic-numerator certificate.

namespace nadyn {

// Reduced quotient of integer polynomials. Numerator and denominator
// are coprime and primitive, and the denominator has constant term +1
// whenever it is nonzero there (always the case for zeta denominators).
class RationalFunctionZ {
public:
    RationalFunctionZ() : num_({1}), den_({1}) {}
    RationalFunctionZ(const IntPoly& num, const IntPoly& den) {
        if (den.is_zero()) throw BadInput("RationalFunctionZ: zero denominator");
        RatPoly n = to_rat(num), d = to_rat(den);
        RatPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = divmod(n, g).first;
            d = divmod(d, g).first;
        }
        // One common scale for both parts keeps the value intact.
        Int lcm = 1;
        for (const Rat& c : n.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const Rat& c : d.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        auto to_int = [&](const RatPoly& p) {
            std::vector<Int> cs;
            for (const Rat& c : p.coeffs()) {
                Rat s = c * Rat(lcm);
                s.canonicalize();
                cs.push_back(s.get_num());
            }
            return IntPoly(std::move(cs));
        };
        num_ = to_int(n);
        den_ = to_int(d);
        Int g2;
        mpz_gcd(g2.get_mpz_t(), Int(abs(content(num_))).get_mpz_t(), Int(abs(content(den_))).get_mpz_t());
        if (num_.is_zero()) g2 = Int(abs(content(den_)));
        if (g2 > 1) {
            auto divc = [&](const IntPoly& r) {
                std::vector<Int> cs;
                for (const Int& c : r.coeffs()) cs.push_back(c / g2);
                return IntPoly(std::move(cs));
            };
            num_ = divc(num_);
            den_ = divc(den_);
        }
        // Sign convention: first nonzero denominator coefficient positive.
        for (const Int& c : den_.coeffs()) {
            if (c == 0) continue;
            if (c < 0) {
                num_ = -num_;
                den_ = -den_;
            }
            break;
        }
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool operator==(const RationalFunctionZ&) const = default;

    std::string str(const std::string& var = "t") const {
        std::string n = poly_str(num_, var), d = poly_str(den_, var);
        if (den_ == IntPoly{1}) return n;
        auto wrap = [](const std::string& s, const IntPoly& p) {
            return p.degree() > 0 ? "(" + s + ")" : s;
        };
        return wrap(n, num_) + "/" + wrap(d, den_);
    }

private:
    IntPoly num_;
    IntPoly den_;
};

// zeta of the subshift of finite type with transition counts a:
// 1 / det(I - tA).
inline RationalFunctionZ zeta_sft(const IntMatrix& a) {
    return RationalFunctionZ(IntPoly{1}, det_I_minus_tA(a));
}

struct QuotientZeta {
    RationalFunctionZ zeta;
    // True iff the reduced numerator divides prod (1 - t^l): a complete
    // certificate that it is a product of cyclotomic polynomials.
    bool numerator_cyclotomic;
};

// prod_m (1 - t^(l_m)) / det(I - tB), reduced exactly. The excluded
// cycle lengths are trusted input.
inline QuotientZeta zeta_quotient(const IntMatrix& b,
                                  const std::vector<unsigned long>& excluded_lengths) {
    IntPoly num{1};
    for (unsigned long l : excluded_lengths) {
        if (l < 1) throw BadInput("zeta_quotient: cycle length must be >= 1");
        num = num * (IntPoly{1} - IntPoly::monomial(l));
    }
    RationalFunctionZ z(num, det_I_minus_tA(b));
    return {z, divides(z.num(), num)};
}

// Truncated power series inverse of a polynomial with nonzero constant
// term, over exact rationals.
inline std::vector<Rat> series_inverse(const IntPoly& p, std::size_t order) {
    if (p.coeff(0) == 0) throw BadInput("series_inverse: zero constant term");
    std::vector<Rat> inv(order + 1, Rat(0));
    Rat c0(p.coeff(0));
    inv[0] = Rat(1) / c0;
    for (std::size_t k = 1; k <= order; ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k; ++j) s += Rat(p.coeff(j)) * inv[k - j];
        inv[k] = -s / c0;
    }
    return inv;
}

// exp of a series with zero constant term, truncated: E_k = (1/k) sum_j
// j a_j E_{k-j}.
inline std::vector<Rat> series_exp(const std::vector<Rat>& a, std::size_t order) {
    std::vector<Rat> e(order + 1, Rat(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            s += Rat(static_cast<long>(j)) * a[j] * e[k - j];
        e[k] = s / Rat(static_cast<long>(k));
    }
    return e;
}

// Algebraic identity check: the series of 1/det(I - tA) must equal
// exp(sum trace(A^m) t^m / m). A failure signals an implementation bug.
inline bool series_consistency(const IntMatrix& a, std::size_t order) {
    std::vector<Int> tr = trace_powers(a, order);
    std::vector<Rat> log_series(order + 1, Rat(0));
    for (std::size_t m = 1; m <= order; ++m)
        log_series[m] = Rat(tr[m - 1]) / Rat(static_cast<long>(m));
    std::vector<Rat> lhs = series_inverse(det_I_minus_tA(a), order);
    std::vector<Rat> rhs = series_exp(log_series, order);
    return lhs == rhs;
}

}  // namespace nadyn

#endif

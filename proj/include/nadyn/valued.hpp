#ifndef NADYN_VALUED_HPP
#define NADYN_VALUED_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

// Exact rationals viewed inside Q_p: p-adic valuations, half-integer
// valuation bookkeeping for |sqrt(p)|, and the norm comparisons every
// other module is built on. All arithmetic is arbitrary precision.

namespace nadyn {

using Rat = mpq_class;
using Int = mpz_class;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue characteristic p; the uniformizer is identified with p itself.
class FieldContext {
public:
    explicit FieldContext(unsigned long p) : p_(p) {
        if (p < 2) throw BadInput("FieldContext: p must be >= 2");
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw BadInput("FieldContext: p is not prime");
    }

    unsigned long p() const { return p_; }
    Int p_z() const { return Int(static_cast<long>(p_)); }

    bool operator==(const FieldContext&) const = default;

private:
    unsigned long p_;
};

// Valuation in (1/2)Z together with +infinity (the valuation of 0).
// Stored as twice the value so every instance is an exact integer.
class HalfVal {
public:
    HalfVal() : twice_(0), inf_(false) {}
    static HalfVal infinity() {
        HalfVal v;
        v.inf_ = true;
        return v;
    }
    static HalfVal whole(const Int& k) { return HalfVal(2 * k, false); }
    static HalfVal whole(long k) { return whole(Int(k)); }
    static HalfVal halves(const Int& twice) { return HalfVal(twice, false); }
    static HalfVal halves(long twice) { return halves(Int(twice)); }

    bool is_infinite() const { return inf_; }
    bool is_integer() const { return inf_ || twice_ % 2 == 0; }
    // Only valid for finite integer values.
    Int integer() const {
        if (inf_ || twice_ % 2 != 0) throw BadInput("HalfVal: not a finite integer");
        return twice_ / 2;
    }
    const Int& twice() const {
        if (inf_) throw BadInput("HalfVal: infinite");
        return twice_;
    }

    HalfVal operator+(const HalfVal& o) const {
        if (inf_ || o.inf_) return infinity();
        return halves(twice_ + o.twice_);
    }
    HalfVal operator-(const HalfVal& o) const {
        if (inf_) return infinity();
        if (o.inf_) throw BadInput("HalfVal: cannot subtract infinity");
        return halves(twice_ - o.twice_);
    }

    std::strong_ordering operator<=>(const HalfVal& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        return cmp(twice_, o.twice_) <=> 0;
    }
    bool operator==(const HalfVal& o) const {
        return (*this <=> o) == std::strong_ordering::equal;
    }

    // "k", "k/2" or "inf".
    std::string str() const {
        if (inf_) return "inf";
        if (twice_ % 2 == 0) return Int(twice_ / 2).get_str();
        return twice_.get_str() + "/2";
    }

private:
    HalfVal(Int twice, bool inf) : twice_(std::move(twice)), inf_(inf) {}
    Int twice_;
    bool inf_;
};

inline HalfVal min(const HalfVal& a, const HalfVal& b) { return a < b ? a : b; }
inline HalfVal max(const HalfVal& a, const HalfVal& b) { return a < b ? b : a; }

namespace detail {
// Exact multiplicity of p in a nonzero integer.
inline Int padic_val_z(Int n, const Int& p) {
    Int v = 0;
    Int q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}
}  // namespace detail

// v_p(x), always an integer on rational inputs; +inf iff x = 0.
inline HalfVal valuation(const Rat& x, const FieldContext& ctx) {
    if (x == 0) return HalfVal::infinity();
    Int p = ctx.p_z();
    return HalfVal::whole(detail::padic_val_z(x.get_num(), p) -
                          detail::padic_val_z(x.get_den(), p));
}

enum class NormOrder { Less, Equal, Greater };

// Ordering of |x| vs |y|; larger valuation means smaller norm.
inline NormOrder norm_compare(const Rat& x, const Rat& y, const FieldContext& ctx) {
    HalfVal vx = valuation(x, ctx), vy = valuation(y, ctx);
    if (vx == vy) return NormOrder::Equal;
    return vx > vy ? NormOrder::Less : NormOrder::Greater;
}

// "num/den" with den omitted when 1; canonical form throughout.
inline std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw BadInput("bad rational literal: " + s);
    if (r.get_den() == 0) throw BadInput("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline HalfVal parse_halfval(const std::string& s) {
    if (s == "inf") return HalfVal::infinity();
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Int k;
        if (k.set_str(s, 10) != 0) throw BadInput("bad valuation literal: " + s);
        return HalfVal::whole(k);
    }
    if (s.substr(slash + 1) != "2") throw BadInput("bad valuation literal: " + s);
    Int t;
    if (t.set_str(s.substr(0, slash), 10) != 0)
        throw BadInput("bad valuation literal: " + s);
    return HalfVal::halves(t);
}

// p^k for an integer k (possibly negative), as an exact rational.
inline Rat pow_p(const FieldContext& ctx, const Int& k) {
    Int e = k >= 0 ? k : Int(-k);
    if (!e.fits_ulong_p()) throw BadInput("pow_p: exponent too large");
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), ctx.p_z().get_mpz_t(), e.get_ui());
    return k >= 0 ? Rat(pk) : Rat(1, pk);
}

}  // namespace nadyn

#endif

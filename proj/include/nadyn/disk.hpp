#ifndef NADYN_DISK_HPP
#define NADYN_DISK_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "valued.hpp"

// Ultrametric disks over Q_p and the splitting primitive. Two disks are
// always disjoint or nested, which keeps every operation here exact and
// combinatorial. Open disks with integer radius exponent are normalized
// to closed disks one level deeper (D(a, p^-k) = D-bar(a, p^-(k+1))
// over a discrete value group), so only closed disks and points remain
// after construction.

namespace nadyn {

struct BadGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DiskKind { Closed, Open, Point };

class Disk {
public:
    // radius = p^(-radius_exp); Point iff radius_exp = +inf.
    Disk(Rat center, HalfVal radius_exp, DiskKind kind = DiskKind::Closed)
        : center_(std::move(center)), exp_(std::move(radius_exp)) {
        center_.canonicalize();
        if (exp_.is_infinite() || kind == DiskKind::Point) {
            exp_ = HalfVal::infinity();
            kind_ = DiskKind::Point;
            return;
        }
        if (kind == DiskKind::Open) {
            if (!exp_.is_integer())
                throw BadGeometry("open disk with non-integer radius exponent");
            exp_ = HalfVal::whole(exp_.integer() + 1);
        }
        kind_ = DiskKind::Closed;
    }

    static Disk point(Rat at) { return Disk(std::move(at), HalfVal::infinity()); }
    static Disk closed(Rat center, long radius_exp) {
        return Disk(std::move(center), HalfVal::whole(radius_exp));
    }

    const Rat& center() const { return center_; }
    const HalfVal& radius_exp() const { return exp_; }
    bool is_point() const { return kind_ == DiskKind::Point; }

    // Geometric operations need an exact membership test, which requires
    // an integer exponent.
    Int radius_exp_int() const {
        if (is_point()) throw BadGeometry("point disk has no finite radius");
        if (!exp_.is_integer())
            throw BadGeometry("half-integer radius exponent in geometric operation");
        return exp_.integer();
    }

    bool contains_point(const Rat& z, const FieldContext& ctx) const {
        if (is_point()) return z == center_;
        return valuation(z - center_, ctx) >= HalfVal::whole(radius_exp_int());
    }

    bool operator==(const Disk& o) const {
        return kind_ == o.kind_ && center_ == o.center_ && exp_ == o.exp_;
    }

private:
    Rat center_;
    HalfVal exp_;
    DiskKind kind_;
};

enum class DiskRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Equal };

// Exact disjoint/nested/equal classification; partial overlap cannot occur.
inline DiskRelation relation(const Disk& a, const Disk& b, const FieldContext& ctx) {
    if (a.is_point() && b.is_point())
        return a.center() == b.center() ? DiskRelation::Equal : DiskRelation::Disjoint;
    if (a.is_point())
        return b.contains_point(a.center(), ctx) ? DiskRelation::FirstInsideSecond
                                                 : DiskRelation::Disjoint;
    if (b.is_point())
        return a.contains_point(b.center(), ctx) ? DiskRelation::SecondInsideFirst
                                                 : DiskRelation::Disjoint;
    Int ea = a.radius_exp_int(), eb = b.radius_exp_int();
    HalfVal d = valuation(a.center() - b.center(), ctx);
    // Intersect iff |c_a - c_b| <= max radius, i.e. v(c_a - c_b) >= min exp.
    if (d < HalfVal::whole(std::min(ea, eb))) return DiskRelation::Disjoint;
    if (ea == eb) return DiskRelation::Equal;
    return ea > eb ? DiskRelation::FirstInsideSecond : DiskRelation::SecondInsideFirst;
}

inline bool contains(const Disk& outer, const Disk& inner, const FieldContext& ctx) {
    DiskRelation r = relation(inner, outer, ctx);
    return r == DiskRelation::FirstInsideSecond || r == DiskRelation::Equal;
}

inline bool disjoint(const Disk& a, const Disk& b, const FieldContext& ctx) {
    return relation(a, b, ctx) == DiskRelation::Disjoint;
}

// Image {alpha z + beta : z in d}: a scaling map with factor |alpha|.
inline Disk affine_image(const Disk& d, const Rat& alpha, const Rat& beta,
                         const FieldContext& ctx) {
    if (alpha == 0) throw BadGeometry("affine_image: zero scale");
    Rat c = alpha * d.center() + beta;
    if (d.is_point()) return Disk::point(c);
    return Disk(std::move(c), d.radius_exp() + valuation(alpha, ctx));
}

// The maximal disk W with v <= W <= u and c0 not in W: centered at
// center(v), radius one level below the distance from center(v) to c0.
inline Disk enclosing_gap_disk(const Disk& v, const Rat& c0, const Disk& u,
                               const FieldContext& ctx) {
    if (!contains(u, v, ctx)) throw BadGeometry("enclosing_gap_disk: v not inside u");
    if (!u.contains_point(c0, ctx)) throw BadGeometry("enclosing_gap_disk: c0 not in u");
    if (v.contains_point(c0, ctx)) throw BadGeometry("enclosing_gap_disk: v contains c0");
    HalfVal d = valuation(v.center() - c0, ctx);
    if (!d.is_integer() || d.is_infinite())
        throw BadGeometry("enclosing_gap_disk: non-integer distance valuation");
    Int w_exp = d.integer() + 1;
    // c0 in u and v inside u force w_exp > exp(u), so W sits inside u.
    if (HalfVal::whole(w_exp) <= HalfVal::whole(u.radius_exp_int()))
        throw BadGeometry("enclosing_gap_disk: gap disk escapes u");
    return Disk(v.center(), HalfVal::whole(w_exp));
}

// Splitting of u via u0: keeps u0 and the maximal gap disk around every
// marked disk disjoint from u0, with duplicates merged.
inline std::vector<Disk> split(const Disk& u, const Disk& u0,
                               const std::vector<Disk>& marked,
                               const FieldContext& ctx) {
    if (!contains(u, u0, ctx) || u0 == u)
        throw BadGeometry("split: u0 is not a proper subdisk of u");
    std::vector<Disk> out{u0};
    for (const Disk& m : marked) {
        if (!contains(u, m, ctx)) throw BadGeometry("split: marked disk not inside u");
        if (!disjoint(m, u0, ctx)) continue;  // already covered by u0
        Disk g = enclosing_gap_disk(m, u0.center(), u, ctx);
        // Equality of disks is semantic: any member works as the centre.
        bool dup = false;
        for (const Disk& q : out)
            if (relation(q, g, ctx) == DiskRelation::Equal) dup = true;
        if (!dup) out.push_back(g);
    }
    return out;
}

}  // namespace nadyn

#endif

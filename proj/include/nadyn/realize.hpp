#ifndef NADYN_REALIZE_HPP
#define NADYN_REALIZE_HPP

#include <set>

#include "disk.hpp"
#include "markov.hpp"
#include "root.hpp"

// Compiling a non-negative integer matrix into an explicit hyperbolic
// rational map over Q_p with the matrix as its adjacency on a family of
// closed disks, then certifying the realization with exact ultrametric
// bounds. The pipeline: admissibility -> indicator/terminal hierarchy
// -> disk arrangement -> even-M selection -> gluing -> verification.

namespace nadyn {

struct NotPrimitive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HierarchyIncomplete : std::logic_error {
    using std::logic_error::logic_error;
};
struct SurgeryWindowViolated : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Admissibility

struct AdmissibilityReport {
    bool nonzero_ok = true;
    bool constant_ok = true;
    bool containing_ok = true;
    bool markov_ok = true;
    bool irreducible_ok = true;
    // Witness row/column index for the first failed structural check.
    std::optional<std::size_t> witness;

    bool ok() const {
        return nonzero_ok && constant_ok && containing_ok && markov_ok && irreducible_ok;
    }
    // The checks the disk construction itself depends on; the Markov
    // property only governs whether the Julia set carries entropy.
    bool structure_ok() const {
        return nonzero_ok && constant_ok && containing_ok && irreducible_ok;
    }
};

namespace detail {

inline std::vector<std::set<std::size_t>> row_supports(const IntMatrix& a) {
    std::vector<std::set<std::size_t>> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.at(i, j) != 0) s[i].insert(j);
    return s;
}

inline bool subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

inline AdmissibilityReport check_admissible(const IntMatrix& a, unsigned long markov_cap = 0) {
    AdmissibilityReport rep;
    std::size_t n = a.size();
    auto supports = detail::row_supports(a);

    for (std::size_t i = 0; i < n; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) != 0) row = true;
            if (a.at(j, i) != 0) col = true;
        }
        if (!row || !col) {
            rep.nonzero_ok = false;
            if (!rep.witness) rep.witness = i;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) == 0) continue;
            if (v == 0)
                v = a.at(i, j);
            else if (a.at(i, j) != v) {
                rep.constant_ok = false;
                if (!rep.witness) rep.witness = i;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> inter;
            std::set_intersection(supports[i].begin(), supports[i].end(),
                                  supports[j].begin(), supports[j].end(),
                                  std::back_inserter(inter));
            if (inter.empty()) continue;
            if (!detail::subset(supports[i], supports[j]) &&
                !detail::subset(supports[j], supports[i])) {
                rep.containing_ok = false;
                if (!rep.witness) rep.witness = i;
            }
        }

    // Markov property: some power's row i has support of size >= 2. The
    // boolean row supports are eventually periodic, so a cap of 2^n
    // (clamped) is safe for the sizes handled here.
    if (markov_cap == 0) markov_cap = n >= 10 ? 1024 : (1ul << n);
    std::vector<bool> has_two(n, false);
    auto cur = supports;
    for (unsigned long m = 1; m <= markov_cap; ++m) {
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i].size() >= 2) has_two[i] = true;
            if (!has_two[i]) all = false;
        }
        if (all) break;
        std::vector<std::set<std::size_t>> next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k : cur[i]) next[i].insert(supports[k].begin(), supports[k].end());
        cur = std::move(next);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!has_two[i]) {
            rep.markov_ok = false;
            if (!rep.witness) rep.witness = i;
        }

    rep.irreducible_ok = irreducible(a);
    return rep;
}

// ---------------------------------------------------------------------------
// Equivalence-class hierarchy

struct HierarchyClass {
    std::vector<std::size_t> members;     // sorted
    long level = 1;
    std::vector<std::size_t> indicators;  // indices i with support(i) == members
    std::vector<std::size_t> successors;  // class ids
    std::optional<std::size_t> parent;
    std::vector<std::size_t> terminals;   // members that are terminals of this level
};

struct Hierarchy {
    std::vector<HierarchyClass> classes;
    std::vector<std::size_t> kappa;        // index -> class id it indicates
    std::vector<long> terminal_level;      // index -> level at which it is terminal
    std::vector<std::size_t> terminal_class;  // index -> class id it terminates in
};

// Builds the laminar class forest: level-1 classes are the maximal row
// supports; each class's successors are the maximal supports of indices
// not yet used as indicators; members in no successor are terminals.
inline Hierarchy hierarchy(const IntMatrix& a) {
    std::size_t n = a.size();
    auto supports = detail::row_supports(a);
    Hierarchy h;
    h.kappa.assign(n, SIZE_MAX);
    h.terminal_level.assign(n, 0);
    h.terminal_class.assign(n, SIZE_MAX);

    std::vector<bool> used(n, false);

    // Distinct maximal supports among the available indices, restricted
    // to a subset (the parent class), as sorted member lists.
    auto maximal_within = [&](const std::set<std::size_t>& inside,
                              bool top) -> std::vector<std::set<std::size_t>> {
        std::vector<std::set<std::size_t>> cands;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            if (!top && !detail::subset(supports[i], inside)) continue;
            cands.push_back(supports[i]);
        }
        std::vector<std::set<std::size_t>> out;
        for (const auto& c : cands) {
            bool maximal = true;
            for (const auto& d : cands)
                if (c != d && detail::subset(c, d)) maximal = false;
            if (maximal && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
        // Deterministic order: by smallest member.
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return *x.begin() < *y.begin(); });
        return out;
    };

    // Breadth-first construction, parents before successors.
    struct Pending {
        std::set<std::size_t> members;
        long level;
        std::optional<std::size_t> parent;
    };
    std::vector<Pending> queue;
    for (auto& top : maximal_within({}, true)) queue.push_back({top, 1, std::nullopt});

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Pending p = queue[qi];
        HierarchyClass cls;
        cls.members.assign(p.members.begin(), p.members.end());
        cls.level = p.level;
        cls.parent = p.parent;
        std::size_t id = h.classes.size();
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && supports[i] == p.members) cls.indicators.push_back(i);
        if (cls.indicators.empty())
            throw HierarchyIncomplete("class with no indicator; admissibility violated");
        for (std::size_t i : cls.indicators) {
            used[i] = true;
            h.kappa[i] = id;
        }
        if (p.parent) h.classes[*p.parent].successors.push_back(id);
        h.classes.push_back(cls);

        std::set<std::size_t> covered;
        for (auto& succ : maximal_within(p.members, false)) {
            queue.push_back({succ, p.level + 1, id});
            covered.insert(succ.begin(), succ.end());
        }
        for (std::size_t j : cls.members)
            if (!covered.count(j)) {
                h.classes[id].terminals.push_back(j);
                h.terminal_level[j] = p.level;
                h.terminal_class[j] = id;
            }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (h.kappa[i] == SIZE_MAX)
            throw HierarchyIncomplete("index " + std::to_string(i) + " indicates no class");
        if (h.terminal_level[i] == 0)
            throw HierarchyIncomplete("index " + std::to_string(i) + " is terminal of no level");
    }
    return h;
}

// ---------------------------------------------------------------------------
// Disk arrangement

struct Arrangement {
    FieldContext ctx;
    Hierarchy h;
    std::vector<Disk> class_disks;     // by class id
    std::vector<Disk> terminal_disks;  // by matrix index
    std::vector<Rat> alpha;            // f_i(z) = alpha_i z + beta_i
    std::vector<Rat> beta;
    Disk sink;                         // D-bar(0, |p|)
};

namespace detail {

inline unsigned long ceil_log(unsigned long k, unsigned long p) {
    unsigned long d = 0, cap = 1;
    while (cap < k) {
        cap *= p;
        ++d;
    }
    return d;
}

// The j-th sibling subdisk at depth d inside D-bar(c, p^-r): base-p
// digits of j select residue branches below the center.
inline Disk slot_disk(const Disk& u, unsigned long j, unsigned long d,
                      const FieldContext& ctx) {
    Rat c = u.center();
    Int r = u.radius_exp_int();
    Int step;
    unsigned long jj = j;
    for (unsigned long t = 0; t < d; ++t) {
        unsigned long digit = jj % ctx.p();
        jj /= ctx.p();
        if (digit != 0) c += Rat(static_cast<long>(digit)) * pow_p(ctx, r + static_cast<long>(t));
    }
    return Disk(c, HalfVal::whole(r + static_cast<long>(d)));
}

}  // namespace detail

// Deterministic placement by descending a p-ary digit tree inside
// D-bar(1, |p|): successors first, then terminals, in index order.
// Terminals drop one extra level exactly when they would otherwise tile
// their class disk completely, which keeps their union proper.
inline Arrangement arrange(const Hierarchy& h, const FieldContext& ctx) {
    std::size_t n = h.kappa.size();
    Arrangement arr{ctx, h, {}, std::vector<Disk>(n, Disk::point(Rat(0))),
                    std::vector<Rat>(n), std::vector<Rat>(n),
                    Disk(Rat(0), HalfVal::whole(1))};
    arr.class_disks.assign(h.classes.size(), Disk::point(Rat(0)));

    Disk root(Rat(1), HalfVal::whole(1));
    std::vector<std::size_t> tops;
    for (std::size_t c = 0; c < h.classes.size(); ++c)
        if (!h.classes[c].parent) tops.push_back(c);
    unsigned long d0 = detail::ceil_log(tops.size(), ctx.p());
    for (std::size_t t = 0; t < tops.size(); ++t)
        arr.class_disks[tops[t]] = detail::slot_disk(root, t, d0, ctx);

    // Parents precede successors in class id order, so one pass places
    // everything.
    for (std::size_t c = 0; c < h.classes.size(); ++c) {
        const HierarchyClass& cls = h.classes[c];
        const Disk& u = arr.class_disks[c];
        unsigned long k =
            static_cast<unsigned long>(cls.successors.size() + cls.terminals.size());
        unsigned long d = detail::ceil_log(k, ctx.p());
        unsigned long pd = 1;
        for (unsigned long t = 0; t < d; ++t) pd *= ctx.p();
        bool deepen_terminals = cls.successors.empty() && pd == k;
        unsigned long slot = 0;
        for (std::size_t sc : cls.successors)
            arr.class_disks[sc] = detail::slot_disk(u, slot++, d, ctx);
        for (std::size_t j : cls.terminals) {
            Disk t = detail::slot_disk(u, slot++, d, ctx);
            if (deepen_terminals) t = Disk(t.center(), HalfVal::whole(t.radius_exp_int() + 1));
            arr.terminal_disks[j] = t;
        }
    }

    // Linear bijections f_i: terminal disk i onto the class disk it
    // indicates; alpha a power of p fixed by the radius ratio.
    for (std::size_t i = 0; i < n; ++i) {
        const Disk& from = arr.terminal_disks[i];
        const Disk& to = arr.class_disks[h.kappa[i]];
        Int e = to.radius_exp_int() - from.radius_exp_int();
        arr.alpha[i] = pow_p(ctx, e);
        arr.beta[i] = to.center() - arr.alpha[i] * from.center();
    }

    // Arrangement invariants, checked exactly.
    Disk unit(Rat(0), HalfVal::whole(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (!contains(unit, arr.terminal_disks[i], ctx) ||
            !disjoint(arr.terminal_disks[i], arr.sink, ctx))
            throw BadGeometry("terminal disk escapes the allowed region");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!disjoint(arr.terminal_disks[i], arr.terminal_disks[j], ctx))
                throw BadGeometry("terminal disks overlap");
        Disk img = affine_image(arr.terminal_disks[i], arr.alpha[i], arr.beta[i], ctx);
        if (!(img == arr.class_disks[h.kappa[i]]))
            throw BadGeometry("f_i is not onto its class disk");
    }
    for (std::size_t c = 0; c < h.classes.size(); ++c)
        for (std::size_t j : h.classes[c].members)
            if (!contains(arr.class_disks[c], arr.terminal_disks[j], ctx) ||
                arr.class_disks[c] == arr.terminal_disks[j])
                throw BadGeometry("member disk not properly inside its class disk");
    return arr;
}

// ---------------------------------------------------------------------------
// Even-M selection and gluing

// Index 0 is the identity sink piece on D-bar(0, |p|).
struct GlueSpec {
    std::vector<Rat> a;      // chosen centers a_0 = 0, a_1..a_n
    std::vector<Int> x_val;  // val(x_i) = radius exponent of D-bar_i
    long M = 0;              // even
};

inline GlueSpec glue_spec_from(const Arrangement& arr) {
    GlueSpec s;
    s.a.push_back(Rat(0));
    s.x_val.push_back(Int(1));
    for (const Disk& d : arr.terminal_disks) {
        s.a.push_back(d.center());
        s.x_val.push_back(d.radius_exp_int());
    }
    return s;
}

namespace detail {

// Twice-valuation helpers keep every bound an exact integer compare.
inline Int v2(const Rat& x, const FieldContext& ctx) {
    HalfVal v = valuation(x, ctx);
    return v.twice();
}

}  // namespace detail

// Least even M making every escape bound hold: for each piece i >= 1,
//   (i)   val(beta_i) + M/2 >= 1                     (unless beta_i = 0)
//   (ii)  val(alpha_i) + val(b_i) + (M-1)/2 >= 1
//   (iii) val(alpha_i) + val(a_i) + val(b_i) - x_i + (M-1)/2 >= 1
// with val(b_i) = x_i - 1/2. Also asserts the surgery window
// diam(D_i) < |b_i| < rho_i, automatic for disjoint disks over Q_p.
inline long choose_M(const Arrangement& arr, const GlueSpec& spec) {
    std::size_t n = arr.terminal_disks.size();
    const FieldContext& ctx = arr.ctx;
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        Int rho2;  // twice the min distance valuation from a_i
        bool first = true;
        for (std::size_t j = 0; j < spec.a.size(); ++j) {
            if (j == i) continue;
            Int d2 = detail::v2(spec.a[i] - spec.a[j], ctx);
            if (first || d2 < rho2) rho2 = d2, first = false;
        }
        // |b_i| < rho_i  <=>  2 val(b_i) = 2 x_i - 1 > 2 min-dist-val.
        if (!first && !(2 * spec.x_val[i] - 1 > rho2))
            throw SurgeryWindowViolated("marker " + std::to_string(i) +
                                        " too close to its neighbours");
    }

    for (long M = 2;; M += 2) {
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            Int va2 = detail::v2(arr.alpha[i - 1], ctx);
            Int vb2 = 2 * spec.x_val[i] - 1;  // twice val(b_i)
            if (arr.beta[i - 1] != 0 && !(detail::v2(arr.beta[i - 1], ctx) + M >= 2)) ok = false;
            if (!(va2 + vb2 + (M - 1) >= 2)) ok = false;
            if (spec.a[i] != 0) {
                Int vai2 = detail::v2(spec.a[i], ctx);
                if (!(va2 + vai2 + vb2 - 2 * spec.x_val[i] + (M - 1) >= 2)) ok = false;
            }
        }
        if (ok) return M;
        if (M > 1000000) throw BadInput("choose_M: no even M found");
    }
}

// One bump term f_i(z) c_i / (c_i - (z - a_i)^M) with c_i = b_i^M =
// x_i^M / p^(M/2), exact integer coefficients after scaling.
struct GlueTerm {
    IntPoly num;
    IntPoly den;
};

struct RationalMapExpr {
    std::vector<GlueTerm> terms;  // index 0 = sink term
    IntPoly combined_num;
    IntPoly combined_den;
};

inline RationalMapExpr glue(const Arrangement& arr, const GlueSpec& spec) {
    if (spec.M < 2 || spec.M % 2 != 0) throw BadInput("glue: M must be a positive even integer");
    const FieldContext& ctx = arr.ctx;
    std::size_t n = arr.terminal_disks.size();
    RationalMapExpr expr;

    std::vector<RatPoly> nums, dens;
    for (std::size_t i = 0; i <= n; ++i) {
        // f_0 = z; f_i = alpha_i z + beta_i.
        RatPoly f = i == 0 ? RatPoly{Rat(0), Rat(1)}
                           : RatPoly{arr.beta[i - 1], arr.alpha[i - 1]};
        // c_i = p^(M x_i - M/2).
        Rat c = pow_p(ctx, Int(spec.M) * spec.x_val[i] - Int(spec.M / 2));
        RatPoly z_minus_a{-spec.a[i], Rat(1)};
        RatPoly pw{Rat(1)};
        for (long k = 0; k < spec.M; ++k) pw = pw * z_minus_a;
        RatPoly den = RatPoly::constant(c) - pw;
        RatPoly num = f * c;
        nums.push_back(num);
        dens.push_back(den);

        // Scale the displayed term to integer coefficients (a no-op for
        // the canonical arrangements, where c_i and the centers are
        // integers).
        Int lcm = 1;
        for (const Rat& q : num.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (const Rat& q : den.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        auto scale = [&](const RatPoly& p) {
            std::vector<Int> cs;
            for (const Rat& q : p.coeffs()) {
                Rat s = q * Rat(lcm);
                s.canonicalize();
                cs.push_back(s.get_num());
            }
            return IntPoly(std::move(cs));
        };
        expr.terms.push_back({scale(num), scale(den)});
    }

    // Combined form over the common denominator prod_i den_i.
    RatPoly q{Rat(1)};
    for (const RatPoly& d : dens) q = q * d;
    RatPoly p;
    for (std::size_t i = 0; i <= n; ++i) {
        RatPoly t = nums[i];
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) t = t * dens[j];
        p = p + t;
    }
    Int lcm = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const Rat& c : q.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    auto to_int = [&](const RatPoly& r) {
        std::vector<Int> cs;
        for (const Rat& c : r.coeffs()) {
            Rat s = c * Rat(lcm);
            s.canonicalize();
            cs.push_back(s.get_num());
        }
        return IntPoly(std::move(cs));
    };
    IntPoly pi = to_int(p), qi = to_int(q);
    Int g;
    mpz_gcd(g.get_mpz_t(), content(pi).get_mpz_t(), content(qi).get_mpz_t());
    if (g > 1) {
        auto divc = [&](const IntPoly& r) {
            std::vector<Int> cs;
            for (const Int& c : r.coeffs()) cs.push_back(c / g);
            return IntPoly(std::move(cs));
        };
        pi = divc(pi);
        qi = divc(qi);
    }
    expr.combined_num = pi;
    expr.combined_den = qi;

    // Exactness spot-check: the combined form agrees with the term sum
    // at a few rational points.
    for (long pt : {2, 5, 11}) {
        Rat z(pt, 7);
        Rat lhs(0);
        bool pole = false;
        for (std::size_t i = 0; i <= n; ++i) {
            Rat dv = dens[i].eval(z);
            if (dv == 0) pole = true;
            else lhs += nums[i].eval(z) / dv;
        }
        if (pole) continue;
        Rat qv = to_rat(qi).eval(z);
        if (qv == 0 || lhs != to_rat(pi).eval(z) / qv)
            throw BadInput("glue: combined form disagrees with term sum");
    }
    return expr;
}

// ---------------------------------------------------------------------------
// Verification

struct Certificate {
    std::string name;
    bool pass;
    Rat margin;  // exact valuation margin; >= 0 iff the bound holds
};

struct VerificationReport {
    std::vector<Certificate> certificates;
    IntMatrix induced_adjacency;
    bool adjacency_ok = false;

    bool ok() const {
        if (!adjacency_ok) return false;
        for (const Certificate& c : certificates)
            if (!c.pass) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const Certificate& c : certificates)
            if (!c.pass) out.push_back(c.name + " (margin " + rat_str(c.margin) + ")");
        if (!adjacency_ok) out.push_back("induced adjacency mismatch");
        return out;
    }
};

// Exact ultrametric certification of the glued map: on each D-bar_i the
// perturbation F - f_i has valuation at least margin_i, computed from
// the constant distances |z - a_j| and |b_j|; the realization stands
// when margin_i reaches the deepest target subdisk and exceeds the
// scaling loss of f_i (degree-1 bound).
inline VerificationReport verify_realization(const Arrangement& arr, const GlueSpec& spec,
                                             const IntMatrix& a) {
    const FieldContext& ctx = arr.ctx;
    std::size_t n = arr.terminal_disks.size();
    if (a.size() != n) throw BadInput("verify_realization: matrix size mismatch");
    VerificationReport rep;
    long M = spec.M;

    auto halves = [](const Int& twice) { return Rat(twice, 2); };

    for (std::size_t i = 1; i <= n; ++i) {
        Int x2 = 2 * spec.x_val[i];
        Int vb2 = 2 * spec.x_val[i] - 1;
        Int va2 = detail::v2(arr.alpha[i - 1], ctx);

        // Escape bounds, re-derived from the raw glue data.
        if (arr.beta[i - 1] != 0) {
            Int lhs2 = detail::v2(arr.beta[i - 1], ctx) + Int(M);
            rep.certificates.push_back(
                {"escape-bound-beta[" + std::to_string(i) + "]", lhs2 >= 2, halves(lhs2 - 2)});
        }
        Int lhs2 = va2 + vb2 + Int(M - 1);
        rep.certificates.push_back(
            {"escape-bound-alpha-b[" + std::to_string(i) + "]", lhs2 >= 2, halves(lhs2 - 2)});
        if (spec.a[i] != 0) {
            Int lhs3 = va2 + detail::v2(spec.a[i], ctx) + vb2 - x2 + Int(M - 1);
            rep.certificates.push_back(
                {"escape-bound-a[" + std::to_string(i) + "]", lhs3 >= 2, halves(lhs3 - 2)});
        }

        // Perturbation margin on D-bar_i: own bump deviation plus every
        // cross term, all with exact constant valuations.
        Int margin2 = Int(M);  // own term: val(f_i (h_i - 1)) >= M/2, f_i lands on units
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Int d2 = detail::v2(spec.a[i] - spec.a[j], ctx);
            Int vbj2 = 2 * spec.x_val[j] - 1;
            // Points of D-bar_i are units, so val f_j >= min(val alpha_j, val beta_j).
            Int vf2 = 0;
            if (j > 0) {
                vf2 = detail::v2(arr.alpha[j - 1], ctx);
                if (arr.beta[j - 1] != 0) vf2 = std::min(vf2, detail::v2(arr.beta[j - 1], ctx));
            }
            Int cross2 = vf2 + Int(M) * (vbj2 - d2);
            if (cross2 < margin2) margin2 = cross2;
        }

        // Deepest subdisk of the class disk f_i maps onto.
        Int target2 = 0;
        for (std::size_t j : arr.h.classes[arr.h.kappa[i - 1]].members) {
            Int t2 = 2 * arr.terminal_disks[j].radius_exp_int();
            if (t2 > target2) target2 = t2;
        }
        rep.certificates.push_back({"disk-image-agreement[" + std::to_string(i) + "]",
                                    margin2 >= target2, halves(margin2 - target2)});
        // Injectivity: the perturbation's Lipschitz constant on D-bar_i
        // stays below |alpha_i|.
        Int deg2 = x2 + va2;
        rep.certificates.push_back({"degree-one[" + std::to_string(i) + "]", margin2 > deg2,
                                    halves(margin2 - deg2)});
    }

    // Induced adjacency: F(D-bar_i) = class disk kappa(i), so row i marks
    // the terminal disks inside it.
    IntMatrix induced(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Disk& img = arr.class_disks[arr.h.kappa[i]];
        for (std::size_t j = 0; j < n; ++j)
            if (contains(img, arr.terminal_disks[j], ctx)) induced.at(i, j) = 1;
    }
    rep.induced_adjacency = induced;
    rep.adjacency_ok = induced == a;
    return rep;
}

// ---------------------------------------------------------------------------
// End-to-end pipeline

struct RealizationBundle {
    IntMatrix matrix;  // the admissible (0,1) matrix actually realized
    Hierarchy h;
    Arrangement arr;
    GlueSpec spec;
    RationalMapExpr expr;
    VerificationReport report;
    RootCertificate entropy_root;
    double entropy;
    std::vector<std::string> warnings;
};

struct RealizeOptions {
    std::optional<long> forced_M;  // even; overrides the minimal choice
    Rat tol = default_root_tol();
};

// b -> b^j0 -> (n0 j0)-augmentation -> admissible (0,1) matrix ->
// arrangement -> glued rational map -> certificates. When n0 j0 = 1 the
// input must itself be an admissible (0,1) matrix and is realized
// directly.
inline RealizationBundle realize(const IntMatrix& b, unsigned long n0, unsigned long j0,
                                 const FieldContext& ctx, const RealizeOptions& opt = {}) {
    if (n0 < 1 || j0 < 1) throw BadInput("realize: n0 and j0 must be >= 1");
    unsigned long nn = n0 * j0;
    std::vector<std::string> warnings;
    IntMatrix a(1);
    if (nn == 1) {
        if (!b.is_zero_one())
            throw NotPrimitive("entries exceed 1: realization needs n0*j0 >= 2");
        a = augment(b, 1);
        AdmissibilityReport rep = check_admissible(a);
        if (!rep.structure_ok())
            throw NotPrimitive("matrix is not admissible; retry with n0*j0 >= 2 and B^j0 positive");
        if (!rep.markov_ok)
            warnings.push_back("Markov property fails: realized Julia set carries no entropy");
    } else {
        IntMatrix bj = b.pow(j0);
        if (!bj.is_positive())
            throw NotPrimitive("B^j0 has a zero entry");
        a = augment(bj, nn);
        AdmissibilityReport rep = check_admissible(a);
        if (!rep.structure_ok())
            throw BadInput("augmented matrix unexpectedly not admissible");
        if (!rep.markov_ok)
            warnings.push_back("Markov property fails: realized Julia set carries no entropy");
    }

    Hierarchy h = hierarchy(a);
    Arrangement arr = arrange(h, ctx);
    GlueSpec spec = glue_spec_from(arr);
    VerificationReport report;
    if (opt.forced_M) {
        if (*opt.forced_M % 2 != 0) throw BadInput("realize: M must be even");
        spec.M = *opt.forced_M;
        report = verify_realization(arr, spec, a);
    } else {
        // Least even M that clears the escape bounds, then stepped up
        // until every perturbation certificate holds as well.
        spec.M = choose_M(arr, spec);
        for (;; spec.M += 2) {
            report = verify_realization(arr, spec, a);
            if (report.ok()) break;
            if (spec.M > 1000000) throw BadInput("realize: no even M certifies the gluing");
        }
    }
    RationalMapExpr expr = glue(arr, spec);
    RootCertificate root = leading_root(a, opt.tol);
    double entropy = entropy_log(root);
    return {std::move(a),    std::move(h),      std::move(arr),    std::move(spec),
            std::move(expr), std::move(report), std::move(root),   entropy,
            std::move(warnings)};
}

}  // namespace nadyn

#endif

// Acceptance harness: one pass/fail line per criterion, nonzero exit on
// any failure. Tolerances are pinned here and nowhere else.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>

#include "nadyn/fixtures.hpp"
#include "nadyn/io.hpp"

using namespace nadyn;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "AC" << number << " " << (pass ? "PASS" : "FAIL") << " — " << what;
    if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

constexpr double kEntropyTol = 1e-9;

// --- AC1: 6x6 fixture — determinant, quotient zeta, sqrt(3) bracket ---
void ac1() {
    auto fx = fixtures::tame_fixture();
    bool pass = det_I_minus_tA(fx.matrix) == IntPoly{1, -1} * IntPoly{1, 0, -3};
    QuotientZeta q = zeta_quotient(fx.matrix, fx.excluded);
    pass = pass && q.zeta.str() == "(1+t)/(1-3t^2)" && q.numerator_cyclotomic;
    RootCertificate r = leading_root(fx.matrix, Rat(1, Int("1000000000000")));
    pass = pass && r.width() <= Rat(1, Int("1000000000000"));
    pass = pass && r.lo * r.lo <= 3 && r.hi * r.hi >= 3;
    pass = pass && std::abs(entropy_log(r) - std::log(std::sqrt(3.0))) < kEntropyTol;
    report(1, "6x6 fixture: det, quotient (1+t)/(1-3t^2), entropy log sqrt(3)", pass);
}

// --- AC2: 12x12 fixture ---
void ac2() {
    auto fx = fixtures::wild_fixture();
    bool pass =
        det_I_minus_tA(fx.matrix) == IntPoly{1, -1} * IntPoly{1, -1} * IntPoly{1, -3};
    QuotientZeta q = zeta_quotient(fx.matrix, fx.excluded);
    pass = pass && q.zeta.str() == "1/(1-3t)" && q.numerator_cyclotomic;
    RootCertificate r = leading_root(fx.matrix, default_root_tol());
    pass = pass && std::abs(entropy_log(r) - std::log(3.0)) < kEntropyTol;
    report(2, "12x12 fixture: det, quotient 1/(1-3t), entropy log 3", pass);
}

// --- AC3: [[1,1],[1,0]] end to end over Q_2 at M = 14 ---
void ac3() {
    FieldContext ctx(2);
    auto fx = fixtures::golden_fixture();
    RealizeOptions opt;
    opt.forced_M = fx.M;
    RealizationBundle b = realize(fx.matrix, 1, 1, ctx, opt);
    bool pass = b.report.ok();
    std::string detail;
    for (std::size_t i = 0; i < fx.terms.size() && pass; ++i) {
        auto [num, den] = fixtures::expand_term(ctx, fx.terms[i], fx.M);
        if (b.expr.terms[i].num != num || b.expr.terms[i].den != den) {
            pass = false;
            detail = "term " + std::to_string(i) + " coefficients differ";
        }
    }
    AnalysisReport rep = analyze(fixtures::golden_system());
    pass = pass && rep.adjacency == fx.matrix;
    pass = pass && zeta_sft(b.matrix).str() == "1/(1-t-t^2)";
    pass = pass && std::abs(b.entropy - 0.4812118250596035) < kEntropyTol;
    report(3, "golden realization: exact map coefficients, adjacency, zeta, entropy", pass,
           detail);
}

// --- AC4: [[0,1],[1,0]] at M = 6, entropy exactly zero ---
void ac4() {
    FieldContext ctx(2);
    auto fx = fixtures::swap_fixture();
    RealizeOptions opt;
    opt.forced_M = fx.M;
    RealizationBundle b = realize(fx.matrix, 1, 1, ctx, opt);
    bool pass = b.report.ok();
    for (std::size_t i = 0; i < fx.terms.size() && pass; ++i) {
        auto [num, den] = fixtures::expand_term(ctx, fx.terms[i], fx.M);
        pass = b.expr.terms[i].num == num && b.expr.terms[i].den == den;
    }
    pass = pass && b.entropy == 0.0 && b.entropy_root.exact && b.entropy_root.lo == 1;
    report(4, "swap realization at M = 6: exact coefficients, entropy exactly 0", pass);
}

// --- AC5: 200 random systems — every split drops the index by exactly 1 ---
//
// Generator: disjoint integer-centred domains in the unit disk over Q_2
// or Q_3 at depth <= 6; each piece maps its domain onto either another
// domain, a disk strictly containing one, or a strictly deeper disk
// inside one (forcing genuine splits). All maps are expanding, so
// orbits terminate.
void ac5() {
    std::mt19937 rng(2024);
    int analysed = 0, splits_total = 0;
    bool pass = true;
    std::string detail;
    auto rnd = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    while (analysed < 200 && pass) {
        unsigned long p = rnd(0, 1) ? 2 : 3;
        FieldContext ctx(p);
        long k = rnd(1, 5);
        // Distinct residues mod p^3 give pairwise disjoint candidate
        // centres; depths vary in [3, 6].
        std::vector<Disk> domains;
        std::vector<long> used;
        for (long i = 0; i < k; ++i) {
            long c = rnd(0, static_cast<long>(std::pow(double(p), 3)) - 1);
            if (std::find(used.begin(), used.end(), c) != used.end()) continue;
            used.push_back(c);
            domains.push_back(Disk::closed(Rat(c), rnd(3, 6)));
        }
        if (domains.empty()) continue;
        std::vector<AffinePiece> pieces;
        bool ok = true;
        for (const Disk& d : domains) {
            // Target: a disk shallower than the domain (expansion), either
            // around another domain's centre or strictly inside one.
            const Disk& t = domains[static_cast<std::size_t>(
                rnd(0, static_cast<long>(domains.size()) - 1))];
            long d_exp = d.radius_exp_int().get_si();
            long lo_exp = t.radius_exp_int().get_si() - 2;  // may strictly contain t
            long hi_exp = std::min<long>(d_exp - 1, t.radius_exp_int().get_si() + 2);
            long lo = std::max<long>(1, lo_exp);
            if (hi_exp < lo) {
                ok = false;
                break;
            }
            // Bias toward images strictly inside the target domain: those
            // are the orbits that force genuine splits.
            long deep_lo = t.radius_exp_int().get_si() + 1;
            long e = (deep_lo <= hi_exp && rnd(0, 2) != 0) ? rnd(deep_lo, hi_exp)
                                                           : rnd(lo, hi_exp);
            Rat target_center = t.center();
            if (e > t.radius_exp_int().get_si())
                target_center += Rat(rnd(0, static_cast<long>(p) - 1)) *
                                 pow_p(ctx, t.radius_exp_int());
            Rat alpha = pow_p(ctx, Int(e) - d.radius_exp_int());
            Rat beta = target_center - alpha * d.center();
            pieces.push_back({d, alpha, beta});
        }
        if (!ok) continue;
        // Reject samples whose orbit rays merge: when two domains'
        // forward images ever coincide, both orbits share every later
        // landing, and a single split resolves them simultaneously —
        // outside the hypotheses of the exact-decrement law.
        std::vector<std::vector<Disk>> rays;
        for (const AffinePiece& pc : pieces) {
            std::vector<Disk> ray;
            Disk cur = pc.domain;
            const AffinePiece* f = &pc;
            for (int step = 0; step < 64; ++step) {
                cur = f->image(cur, ctx);
                ray.push_back(cur);
                f = nullptr;
                for (const AffinePiece& q : pieces)
                    if (contains(q.domain, cur, ctx)) f = &q;
                if (!f) break;
            }
            rays.push_back(std::move(ray));
        }
        for (std::size_t i = 0; ok && i < rays.size(); ++i)
            for (std::size_t j = i + 1; ok && j < rays.size(); ++j)
                for (const Disk& a : rays[i])
                    for (const Disk& b : rays[j])
                        if (relation(a, b, ctx) == DiskRelation::Equal) ok = false;
        if (!ok) continue;
        try {
            PiecewiseSystem sys(ctx, std::move(pieces), std::nullopt);
            CoverState st = refine_to_markov(sys, 10000, 64);
            for (const SplitEvent& ev : st.history)
                if (ev.index_after != ev.index_before - 1) {
                    pass = false;
                    detail = "split changed index by more than 1";
                }
            if (st.index() != 0) {
                pass = false;
                detail = "refinement finished non-Markov";
            }
            splits_total += static_cast<int>(st.history.size());
            ++analysed;
        } catch (const BadGeometry&) {
            continue;  // overlapping candidate domains: not a valid sample
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
    }
    report(5, "200 random systems: every split drops the Markov index by exactly 1 (" +
                  std::to_string(splits_total) + " splits observed)",
           pass && splits_total > 0, detail);
}

// --- AC6: spectral law of augmentation on 50 random matrices ---
void ac6() {
    std::mt19937 rng(421773);
    std::uniform_int_distribution<int> size(1, 4), entry(0, 3), nn(2, 4);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 50 && pass; ++trial) {
        std::size_t n = static_cast<std::size_t>(size(rng));
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        unsigned long m = static_cast<unsigned long>(nn(rng));
        double lam0 = leading_root(a, default_root_tol()).decimal;
        double lam = leading_root(augment(a, m), default_root_tol()).decimal;
        if (std::abs(std::pow(lam, double(m)) - lam0) > 1e-9) {
            pass = false;
            detail = "trial " + std::to_string(trial);
        }
    }
    report(6, "50 random augmentations: lambda^n = lambda_0 within 1e-9", pass, detail);
}

// --- AC7: series identity on fixtures and 100 random matrices, < 10 s ---
void ac7() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = series_consistency(fixtures::golden_matrix(), 10) &&
                series_consistency(fixtures::swap_matrix(), 10) &&
                series_consistency(fixtures::tame_matrix(), 10) &&
                series_consistency(fixtures::wild_matrix(), 10);
    std::mt19937 rng(90251);
    std::uniform_int_distribution<int> size(1, 6), entry(0, 4);
    for (int trial = 0; trial < 100 && pass; ++trial) {
        std::size_t n = static_cast<std::size_t>(size(rng));
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        pass = series_consistency(a, 10);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(7, "series identity on fixtures + 100 random matrices (" +
                  std::to_string(secs).substr(0, 5) + " s)",
           pass && secs < 10.0);
}

// --- AC8: bound sharpness on the golden fixture ---
void ac8() {
    FieldContext ctx(2);
    Arrangement arr = arrange(hierarchy(fixtures::golden_matrix()), ctx);
    GlueSpec spec = glue_spec_from(arr);
    spec.M = 4;
    VerificationReport low = verify_realization(arr, spec, fixtures::golden_matrix());
    bool escape_failed = false;
    for (const Certificate& c : low.certificates)
        if (!c.pass && c.name.rfind("escape-bound", 0) == 0) escape_failed = true;
    spec.M = choose_M(arr, spec);
    VerificationReport ok = verify_realization(arr, spec, fixtures::golden_matrix());
    report(8, "golden fixture: M = 4 fails an escape bound; minimal even M passes all",
           escape_failed && ok.ok());
}

// --- AC9: quotient numerators are certified cyclotomic, fractions reduced ---
void ac9() {
    bool pass = true;
    std::mt19937 rng(66311);
    std::uniform_int_distribution<int> size(1, 5), entry(0, 2), len(1, 4), cnt(0, 3);
    std::vector<IntMatrix> pool{fixtures::golden_matrix(), fixtures::swap_matrix(),
                                fixtures::tame_matrix(), fixtures::wild_matrix()};
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(size(rng));
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        pool.push_back(a);
    }
    for (const IntMatrix& a : pool) {
        std::vector<unsigned long> lengths;
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) lengths.push_back(static_cast<unsigned long>(len(rng)));
        IntPoly prod{1};
        for (unsigned long l : lengths) prod = prod * (IntPoly{1} - IntPoly::monomial(l));
        QuotientZeta q = zeta_quotient(a, lengths);
        pass = pass && q.numerator_cyclotomic && divides(q.zeta.num(), prod) &&
               gcd(to_rat(q.zeta.num()), to_rat(q.zeta.den())).degree() == 0;
    }
    report(9, "every quotient numerator divides its cycle product; fractions coprime", pass);
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    ac9();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

#ifndef NADYN_FIXTURES_HPP
#define NADYN_FIXTURES_HPP

#include "markov.hpp"
#include "realize.hpp"

// The built-in example corpus. Four named fixtures:
//   golden — the [[1,1],[1,0]] realization over Q_2 (glued at M = 14)
//   swap   — the [[0,1],[1,0]] realization over Q_2 (glued at M = 6),
//            an entropy-zero map
//   tame   — a 6x6 subshift matrix with det(I-tA) = (1-t)(1-3t^2)
//   wild   — a 12x12 subshift matrix with det(I-tA) = (1-t)^2 (1-3t)
// Expected values are frozen here; the examples command and the test
// suite diff live computations against them.

namespace nadyn::fixtures {

inline IntMatrix golden_matrix() { return IntMatrix({{1, 1}, {1, 0}}); }
inline IntMatrix swap_matrix() { return IntMatrix({{0, 1}, {1, 0}}); }

inline IntMatrix tame_matrix() {
    // States ordered: two period-covering states, the hub, then the
    // three satellite states.
    return IntMatrix({{0, 1, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0},
                      {1, 0, 0, 1, 1, 1},
                      {0, 0, 1, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0}});
}

inline IntMatrix wild_matrix() {
    return IntMatrix({{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0},
                      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                      {1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0},
                      {1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0},
                      {0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1},
                      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1},
                      {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1}});
}

// The piecewise-affine systems realized by the golden and swap maps:
// each terminal disk carries the linear branch onto its class disk,
// plus the identity sink at the origin.
inline PiecewiseSystem golden_system() {
    FieldContext ctx(2);
    std::vector<AffinePiece> pieces{
        {Disk::closed(Rat(1), 3), Rat(1, 4), Rat(3, 4)},
        {Disk::closed(Rat(3), 2), Rat(1), Rat(-2)},
    };
    return PiecewiseSystem(ctx, std::move(pieces), Disk::closed(Rat(0), 1));
}

inline PiecewiseSystem swap_system() {
    FieldContext ctx(2);
    std::vector<AffinePiece> pieces{
        {Disk::closed(Rat(1), 3), Rat(1, 2), Rat(5, 2)},
        {Disk::closed(Rat(3), 3), Rat(1, 2), Rat(-1, 2)},
    };
    return PiecewiseSystem(ctx, std::move(pieces), Disk::closed(Rat(0), 1));
}

// Compact glue data (c = p^c_exp, centre a, branch alpha z + beta); the
// expected term polynomials are the expansions of
//   c (alpha z + beta)  /  (c - (z - a)^M).
struct TermData {
    long c_exp;
    long a;
    Rat alpha;
    Rat beta;
};

struct RealizationFixture {
    IntMatrix matrix;
    long M;
    std::vector<TermData> terms;  // index 0 = sink term
    std::string zeta_display;
    double entropy;      // expected decimal (ignored when exact_zero)
    bool entropy_zero;   // entropy must be exactly 0
};

inline RealizationFixture golden_fixture() {
    return {golden_matrix(),
            14,
            {{7, 0, Rat(1), Rat(0)}, {35, 1, Rat(1, 4), Rat(3, 4)}, {21, 3, Rat(1), Rat(-2)}},
            "1/(1-t-t^2)",
            0.4812118250596035,
            false};
}

inline RealizationFixture swap_fixture() {
    return {swap_matrix(),
            6,
            {{3, 0, Rat(1), Rat(0)}, {15, 1, Rat(1, 2), Rat(5, 2)}, {15, 3, Rat(1, 2), Rat(-1, 2)}},
            "1/(1-t^2)",
            0.0,
            true};
}

struct SubshiftFixture {
    IntMatrix matrix;
    IntPoly det;                                // det(I - tA)
    std::vector<unsigned long> excluded;        // period lengths to quotient out
    std::string quotient_display;
    double entropy;
};

inline SubshiftFixture tame_fixture() {
    // det(I - tA) = (1-t)(1-3t^2); quotient by the single 2-cycle gives
    // (1+t)/(1-3t^2); entropy log sqrt(3).
    return {tame_matrix(), IntPoly{1, -1, -3, 3}, {2}, "(1+t)/(1-3t^2)",
            0.5493061443340548};
}

inline SubshiftFixture wild_fixture() {
    // det(I - tA) = (1-t)^2 (1-3t); quotient by the two fixed points
    // gives 1/(1-3t); entropy log 3.
    return {wild_matrix(), IntPoly{1, -5, 7, -3}, {1, 1}, "1/(1-3t)", 1.0986122886681098};
}

// Expands a compact glue term into its integer-coefficient pair, fully
// independent of the gluing pipeline.
inline std::pair<IntPoly, IntPoly> expand_term(const FieldContext& ctx, const TermData& t,
                                               long M) {
    Int c = 1;
    for (long k = 0; k < t.c_exp; ++k) c *= ctx.p_z();
    // num = c (alpha z + beta), integer for every fixture term.
    Rat n1 = Rat(c) * t.alpha, n0 = Rat(c) * t.beta;
    n1.canonicalize();
    n0.canonicalize();
    if (n1.get_den() != 1 || n0.get_den() != 1)
        throw BadInput("fixture term numerator is not integral");
    IntPoly num{n0.get_num(), n1.get_num()};
    IntPoly pw{1};
    IntPoly z_minus_a{Int(-t.a), Int(1)};
    for (long k = 0; k < M; ++k) pw = pw * z_minus_a;
    IntPoly den = IntPoly{c} - pw;
    return {num, den};
}

}  // namespace nadyn::fixtures

#endif

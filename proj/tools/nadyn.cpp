// nadyn — certified symbolic dynamics of piecewise-affine maps over Q_p:
// zeta functions, entropy certificates, Markov refinement, and exact
// realization of admissible matrices as rational maps.
//
// Exit codes: 0 ok; 1 fixture diff; 2 malformed input / usage;
// 3 refinement cap exceeded; 4 not primitive; 5 verification failure.
// Diagnostics go to stderr, data to stdout.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nadyn/fixtures.hpp"
#include "nadyn/io.hpp"

namespace {

using namespace nadyn;

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitCap = 3;
constexpr int kExitNotPrimitive = 4;
constexpr int kExitVerifyFail = 5;

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw BadInput("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw BadInput(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Rat tol_from_env() {
    if (const char* s = std::getenv("NADYN_TOL")) {
        try {
            return parse_rat(s);
        } catch (const BadInput&) {
            throw BadInput("NADYN_TOL is not a rational: " + std::string(s));
        }
    }
    return default_root_tol();
}

std::vector<unsigned long> parse_lengths(const std::string& csv) {
    std::vector<unsigned long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size() || v == 0) throw BadInput("bad cycle length: " + item);
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_zeta(const std::string& matrix_path, const std::string& excluded) {
    IntMatrix a = matrix_from_json(read_json(matrix_path));
    if (excluded.empty()) {
        RationalFunctionZ z = zeta_sft(a);
        Json j = zeta_to_json(z);
        emit(j);
        std::cerr << "zeta = " << z.str() << "\n";
        return kExitOk;
    }
    QuotientZeta q = zeta_quotient(a, parse_lengths(excluded));
    Json j = zeta_to_json(q.zeta);
    j["numerator_cyclotomic"] = q.numerator_cyclotomic;
    emit(j);
    std::cerr << "zeta = " << q.zeta.str() << "\n";
    return kExitOk;
}

int cmd_entropy(const std::string& matrix_path, const std::string& system_path) {
    Rat tol = tol_from_env();
    RootCertificate root{IntPoly{}, Rat(0), Rat(0), false, 0.0};
    Json extra;
    if (!matrix_path.empty()) {
        root = leading_root(matrix_from_json(read_json(matrix_path)), tol);
    } else {
        PiecewiseSystem sys = system_from_json(read_json(system_path));
        AnalyzeOptions opt;
        opt.tol = tol;
        AnalysisReport rep = analyze(sys, opt);
        root = rep.root;
        extra["adjacency"] = matrix_to_json(rep.adjacency);
        extra["warnings"] = rep.warnings;
    }
    double h = entropy_log(root);
    Json j{{"entropy", nine_digits(h)}, {"root", root_to_json(root)}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j);
    std::cerr << "entropy = " << nine_digits(h) << " (log of leading root in ["
              << rat_str(root.lo) << ", " << rat_str(root.hi) << "])\n";
    return kExitOk;
}

int cmd_realize(const std::string& matrix_path, unsigned long p, unsigned long n0,
                unsigned long j0, long forced_M, const std::string& seeds) {
    if (seeds != "paper" && seeds != "lex")
        throw BadInput("unknown seed preset: " + seeds);
    // Both presets name the same deterministic digit-tree placement.
    IntMatrix b = matrix_from_json(read_json(matrix_path));
    FieldContext ctx(p);
    RealizeOptions opt;
    opt.tol = tol_from_env();
    if (forced_M > 0) opt.forced_M = forced_M;
    RealizationBundle bundle = realize(b, n0, j0, ctx, opt);
    emit(bundle_to_json(bundle));
    for (const std::string& w : bundle.warnings) std::cerr << "warning: " << w << "\n";
    if (!bundle.report.ok()) {
        for (const std::string& f : bundle.report.failures())
            std::cerr << "certificate failed: " << f << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_analyze(const std::string& system_path) {
    PiecewiseSystem sys = system_from_json(read_json(system_path));
    AnalyzeOptions opt;
    opt.tol = tol_from_env();
    AnalysisReport rep = analyze(sys, opt);
    emit(analysis_to_json(rep));
    for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    return kExitOk;
}

// Re-verifies a realization bundle: rebuilds the arrangement from the
// matrix and checks the bundle's glue data against it.
int cmd_verify(const std::string& bundle_path) {
    Json j = read_json(bundle_path);
    if (!j.contains("matrix") || !j.contains("glue") || !j.contains("arrangement"))
        throw BadInput("bundle JSON needs matrix, arrangement, and glue");
    IntMatrix a = matrix_from_json(j.at("matrix"));
    unsigned long p = j.at("arrangement").at("p").get<unsigned long>();
    FieldContext ctx(p);
    Arrangement arr = arrange(hierarchy(a), ctx);
    GlueSpec spec = glue_spec_from(arr);
    spec.M = j.at("glue").at("M").get<long>();
    if (spec.M < 2 || spec.M % 2 != 0) throw BadInput("bundle M must be a positive even integer");
    // The bundle's markers must match the canonical arrangement.
    const Json& ja = j.at("glue").at("a");
    const Json& jx = j.at("glue").at("x_val");
    if (ja.size() != spec.a.size() || jx.size() != spec.x_val.size())
        throw BadInput("glue data size mismatch");
    for (std::size_t i = 0; i < spec.a.size(); ++i)
        if (rat_from_json(ja.at(i)) != spec.a[i] || int_from_json(jx.at(i)) != spec.x_val[i])
            throw BadInput("glue data disagrees with the canonical arrangement");
    VerificationReport rep = verify_realization(arr, spec, a);
    emit(verification_to_json(rep));
    if (!rep.ok()) {
        for (const std::string& f : rep.failures())
            std::cerr << "certificate failed: " << f << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_augment(const std::string& matrix_path, unsigned long n) {
    IntMatrix a = augment(matrix_from_json(read_json(matrix_path)), n);
    emit(matrix_to_json(a));
    return kExitOk;
}

int cmd_admissible(const std::string& matrix_path) {
    AdmissibilityReport rep = check_admissible(matrix_from_json(read_json(matrix_path)));
    emit(admissibility_to_json(rep));
    return rep.ok() ? kExitOk : kExitDiff;
}

// ---------------------------------------------------------------------------
// examples: run a named fixture end-to-end and diff against expected.

struct Differ {
    Json diffs = Json::array();
    void expect(const std::string& field, const std::string& want, const std::string& got) {
        if (want != got) diffs.push_back(Json{{"field", field}, {"expected", want}, {"got", got}});
    }
    void expect_close(const std::string& field, double want, double got, double tol) {
        if (std::abs(want - got) > tol)
            diffs.push_back(Json{{"field", field},
                                 {"expected", nine_digits(want)},
                                 {"got", nine_digits(got)},
                                 {"tolerance", tol}});
    }
    void expect_true(const std::string& field, bool got) {
        if (!got) diffs.push_back(Json{{"field", field}, {"expected", true}, {"got", false}});
    }
};

void diff_realization(Differ& d, const fixtures::RealizationFixture& fx) {
    FieldContext ctx(2);
    RealizeOptions opt;
    opt.forced_M = fx.M;
    RealizationBundle b = realize(fx.matrix, 1, 1, ctx, opt);
    d.expect_true("verification", b.report.ok());
    if (b.expr.terms.size() != fx.terms.size()) {
        d.expect("term count", std::to_string(fx.terms.size()),
                 std::to_string(b.expr.terms.size()));
        return;
    }
    for (std::size_t i = 0; i < fx.terms.size(); ++i) {
        auto [num, den] = fixtures::expand_term(ctx, fx.terms[i], fx.M);
        d.expect("term " + std::to_string(i) + " numerator", poly_str(num, "z"),
                 poly_str(b.expr.terms[i].num, "z"));
        d.expect("term " + std::to_string(i) + " denominator", poly_str(den, "z"),
                 poly_str(b.expr.terms[i].den, "z"));
    }
    d.expect("zeta", fx.zeta_display, zeta_sft(b.matrix).str());
    if (fx.entropy_zero) {
        d.expect_true("entropy exactly zero", b.entropy == 0.0 && b.entropy_root.exact);
    } else {
        d.expect_close("entropy", fx.entropy, b.entropy, 1e-9);
    }
}

void diff_subshift(Differ& d, const fixtures::SubshiftFixture& fx) {
    IntPoly det = det_I_minus_tA(fx.matrix);
    d.expect("det(I-tA)", poly_str(fx.det), poly_str(det));
    QuotientZeta q = zeta_quotient(fx.matrix, fx.excluded);
    d.expect("quotient zeta", fx.quotient_display, q.zeta.str());
    d.expect_true("cyclotomic numerator", q.numerator_cyclotomic);
    RootCertificate root = leading_root(fx.matrix, tol_from_env());
    d.expect_close("entropy", fx.entropy, entropy_log(root), 1e-9);
}

int cmd_examples(const std::string& name) {
    Differ d;
    if (name == "golden")
        diff_realization(d, fixtures::golden_fixture());
    else if (name == "swap")
        diff_realization(d, fixtures::swap_fixture());
    else if (name == "tame")
        diff_subshift(d, fixtures::tame_fixture());
    else if (name == "wild")
        diff_subshift(d, fixtures::wild_fixture());
    else
        throw BadInput("unknown fixture: " + name);
    Json out{{"fixture", name}, {"pass", d.diffs.empty()}, {"diffs", d.diffs}};
    emit(out);
    if (!d.diffs.empty()) {
        std::cerr << "fixture " << name << ": " << d.diffs.size() << " mismatch(es)\n";
        return kExitDiff;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified symbolic dynamics over Q_p"};
    app.require_subcommand(1);

    std::string matrix_path, system_path, bundle_path, excluded, seeds = "lex", name;
    unsigned long p = 2, n0 = 1, j0 = 1, aug_n = 2;
    long forced_M = 0;

    auto* zeta = app.add_subcommand("zeta", "zeta function of a subshift matrix");
    zeta->add_option("--matrix", matrix_path, "matrix JSON file ('-' = stdin)")->required();
    zeta->add_option("--excluded", excluded, "cycle lengths to quotient out, e.g. 2 or 1,1");

    auto* entropy = app.add_subcommand("entropy", "certified topological entropy");
    auto* em = entropy->add_option("--matrix", matrix_path, "matrix JSON file");
    auto* es = entropy->add_option("--system", system_path, "piecewise system JSON file");
    em->excludes(es);

    auto* realize_cmd = app.add_subcommand("realize", "realize a matrix as a rational map");
    realize_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    realize_cmd->add_option("--p", p, "prime of the ground field")->required();
    realize_cmd->add_option("--n0", n0, "augmentation factor");
    realize_cmd->add_option("--j0", j0, "power taken before augmenting");
    realize_cmd->add_option("--M", forced_M, "force an even gluing exponent");
    realize_cmd->add_option("--seeds", seeds, "disk placement preset: paper or lex");

    auto* analyze_cmd = app.add_subcommand("analyze", "refine a system to Markov and report");
    analyze_cmd->add_option("--system", system_path, "piecewise system JSON file")->required();

    auto* verify = app.add_subcommand("verify", "re-check a realization bundle");
    verify->add_option("--bundle", bundle_path, "bundle JSON file")->required();

    auto* augment_cmd = app.add_subcommand("augment", "subdivide every edge into an n-path");
    augment_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    augment_cmd->add_option("--n", aug_n, "path length")->required();

    auto* admissible = app.add_subcommand("admissible", "admissibility report for a matrix");
    admissible->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* examples = app.add_subcommand("examples", "run a built-in fixture end-to-end");
    examples->add_option("--name", name, "golden | swap | tame | wild")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitMalformed;
    }

    try {
        if (zeta->parsed()) return cmd_zeta(matrix_path, excluded);
        if (entropy->parsed()) {
            if (matrix_path.empty() && system_path.empty())
                throw BadInput("entropy needs --matrix or --system");
            return cmd_entropy(matrix_path, system_path);
        }
        if (realize_cmd->parsed()) return cmd_realize(matrix_path, p, n0, j0, forced_M, seeds);
        if (analyze_cmd->parsed()) return cmd_analyze(system_path);
        if (verify->parsed()) return cmd_verify(bundle_path);
        if (augment_cmd->parsed()) return cmd_augment(matrix_path, aug_n);
        if (admissible->parsed()) return cmd_admissible(matrix_path);
        if (examples->parsed()) return cmd_examples(name);
    } catch (const NotPrimitive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotPrimitive;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const BadGeometry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}

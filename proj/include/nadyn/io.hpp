#ifndef NADYN_IO_HPP
#define NADYN_IO_HPP

#include <json.hpp>

#include "markov.hpp"
#include "realize.hpp"

// JSON (de)serialization for every public type. All exact quantities
// travel as decimal strings ("num/den" for rationals, "k" or "k/2" for
// half-integer valuations); doubles appear only as display conveniences
// next to their exact counterparts.

namespace nadyn {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars

inline Json int_json(const Int& v) { return v.get_str(); }

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw BadInput("not an integer: " + j.dump());
        }
    }
    throw BadInput("expected integer, got " + j.dump());
}

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw BadInput("expected rational string, got " + j.dump());
}

// ---------------------------------------------------------------------------
// Disks and piecewise systems

inline Json disk_to_json(const Disk& d) {
    return Json{{"center", rat_str(d.center())},
                {"radius_exp", d.radius_exp().str()},
                {"kind", d.is_point() ? "point" : "closed"}};
}

inline Disk disk_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("center") || !j.contains("radius_exp"))
        throw BadInput("disk JSON needs center and radius_exp");
    Rat c = rat_from_json(j.at("center"));
    HalfVal r = parse_halfval(j.at("radius_exp").is_string()
                                  ? j.at("radius_exp").get<std::string>()
                                  : std::to_string(j.at("radius_exp").get<long>()));
    DiskKind kind = DiskKind::Closed;
    if (j.contains("kind")) {
        std::string k = j.at("kind").get<std::string>();
        if (k == "open")
            kind = DiskKind::Open;
        else if (k == "point")
            kind = DiskKind::Point;
        else if (k != "closed")
            throw BadInput("unknown disk kind: " + k);
    }
    if (kind == DiskKind::Point) return Disk::point(c);
    return Disk(c, r, kind);
}

inline Json system_to_json(const PiecewiseSystem& s) {
    Json pieces = Json::array();
    for (const AffinePiece& p : s.pieces())
        pieces.push_back(Json{{"domain", disk_to_json(p.domain)},
                              {"alpha", rat_str(p.alpha)},
                              {"beta", rat_str(p.beta)}});
    Json j{{"p", s.ctx().p()}, {"pieces", pieces}};
    if (s.sink()) j["sink"] = disk_to_json(*s.sink());
    return j;
}

inline PiecewiseSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("pieces"))
        throw BadInput("system JSON needs p and pieces");
    FieldContext ctx(j.at("p").get<unsigned long>());
    std::vector<AffinePiece> pieces;
    for (const Json& pj : j.at("pieces"))
        pieces.push_back({disk_from_json(pj.at("domain")), rat_from_json(pj.at("alpha")),
                          rat_from_json(pj.at("beta"))});
    std::optional<Disk> sink;
    if (j.contains("sink") && !j.at("sink").is_null()) sink = disk_from_json(j.at("sink"));
    return PiecewiseSystem(ctx, std::move(pieces), std::move(sink));
}

// ---------------------------------------------------------------------------
// Matrices and polynomials

inline Json matrix_to_json(const IntMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Int& v = a.at(i, j);
            if (v.fits_slong_p())
                row.push_back(v.get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(row);
    }
    return Json{{"n", a.size()}, {"rows", rows}};
}

inline IntMatrix matrix_from_json(const Json& j) {
    const Json* rows = nullptr;
    if (j.is_array())
        rows = &j;  // bare [[...],...] accepted for convenience
    else if (j.is_object() && j.contains("rows"))
        rows = &j.at("rows");
    else
        throw BadInput("matrix JSON needs rows");
    std::vector<std::vector<Int>> m;
    for (const Json& rj : *rows) {
        std::vector<Int> row;
        for (const Json& v : rj) row.push_back(int_from_json(v));
        m.push_back(std::move(row));
    }
    if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != m.size())
        throw BadInput("matrix JSON: n disagrees with row count");
    return IntMatrix(m);
}

inline Json poly_to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", coeffs}};
}

inline IntPoly poly_from_json(const Json& j) {
    const Json* cs = nullptr;
    if (j.is_array())
        cs = &j;
    else if (j.is_object() && j.contains("coeffs"))
        cs = &j.at("coeffs");
    else
        throw BadInput("polynomial JSON needs coeffs");
    std::vector<Int> coeffs;
    for (const Json& v : *cs) coeffs.push_back(int_from_json(v));
    return IntPoly(std::move(coeffs));
}

inline Json zeta_to_json(const RationalFunctionZ& z) {
    return Json{{"numerator", poly_to_json(z.num())},
                {"denominator", poly_to_json(z.den())},
                {"display", z.str()}};
}

inline RationalFunctionZ zeta_from_json(const Json& j) {
    return RationalFunctionZ(poly_from_json(j.at("numerator")),
                             poly_from_json(j.at("denominator")));
}

// ---------------------------------------------------------------------------
// Root certificates

inline std::string nine_digits(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline Json root_to_json(const RootCertificate& r) {
    return Json{{"polynomial", poly_to_json(r.polynomial)},
                {"lo", rat_str(r.lo)},
                {"hi", rat_str(r.hi)},
                {"exact", r.exact},
                {"decimal", nine_digits(r.decimal)}};
}

inline RootCertificate root_from_json(const Json& j) {
    RootCertificate r{poly_from_json(j.at("polynomial")), rat_from_json(j.at("lo")),
                      rat_from_json(j.at("hi")), j.at("exact").get<bool>(), 0.0};
    r.decimal = Rat((r.lo + r.hi) / 2).get_d();
    return r;
}

// ---------------------------------------------------------------------------
// Analysis reports

inline Json analysis_to_json(const AnalysisReport& r) {
    Json cover = Json::array();
    for (const CoverDisk& c : r.cover.cover)
        cover.push_back(Json{{"disk", disk_to_json(c.disk)}, {"piece", c.piece}});
    Json escaped = Json::array();
    for (const Disk& d : r.cover.escaped) escaped.push_back(disk_to_json(d));
    return Json{{"cover", cover},
                {"escaped", escaped},
                {"splits", r.cover.history.size()},
                {"adjacency", matrix_to_json(r.adjacency)},
                {"zeta", zeta_to_json(r.zeta)},
                {"root", root_to_json(r.root)},
                {"entropy", nine_digits(r.entropy)},
                {"warnings", r.warnings}};
}

// ---------------------------------------------------------------------------
// Admissibility, hierarchy, arrangement

inline Json admissibility_to_json(const AdmissibilityReport& r) {
    Json j{{"nonzero", r.nonzero_ok},   {"constant_rows", r.constant_ok},
           {"containing", r.containing_ok}, {"markov", r.markov_ok},
           {"irreducible", r.irreducible_ok}, {"admissible", r.ok()}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline Json arrangement_to_json(const Arrangement& arr) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < arr.h.classes.size(); ++c) {
        const HierarchyClass& cls = arr.h.classes[c];
        Json cj{{"members", cls.members},       {"level", cls.level},
                {"indicators", cls.indicators}, {"successors", cls.successors},
                {"terminals", cls.terminals},   {"disk", disk_to_json(arr.class_disks[c])}};
        if (cls.parent) cj["parent"] = *cls.parent;
        classes.push_back(cj);
    }
    Json terms = Json::array();
    for (std::size_t i = 0; i < arr.terminal_disks.size(); ++i)
        terms.push_back(Json{{"disk", disk_to_json(arr.terminal_disks[i])},
                             {"class", arr.h.kappa[i]},
                             {"alpha", rat_str(arr.alpha[i])},
                             {"beta", rat_str(arr.beta[i])}});
    return Json{{"p", arr.ctx.p()},
                {"classes", classes},
                {"terminals", terms},
                {"sink", disk_to_json(arr.sink)}};
}

inline Json glue_spec_to_json(const GlueSpec& s) {
    Json a = Json::array(), x = Json::array();
    for (const Rat& v : s.a) a.push_back(rat_str(v));
    for (const Int& v : s.x_val) x.push_back(v.get_str());
    return Json{{"a", a}, {"x_val", x}, {"M", s.M}};
}

inline Json expr_to_json(const RationalMapExpr& e) {
    Json terms = Json::array();
    for (const GlueTerm& t : e.terms)
        terms.push_back(Json{{"num", poly_to_json(t.num)}, {"den", poly_to_json(t.den)}});
    return Json{{"terms", terms},
                {"combined",
                 Json{{"num", poly_to_json(e.combined_num)}, {"den", poly_to_json(e.combined_den)}}}};
}

inline Json verification_to_json(const VerificationReport& r) {
    Json certs = Json::array();
    for (const Certificate& c : r.certificates)
        certs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"margin", rat_str(c.margin)}});
    return Json{{"certificates", certs},
                {"induced_adjacency", matrix_to_json(r.induced_adjacency)},
                {"adjacency_ok", r.adjacency_ok},
                {"pass", r.ok()},
                {"failures", r.failures()}};
}

inline Json bundle_to_json(const RealizationBundle& b) {
    return Json{{"matrix", matrix_to_json(b.matrix)},
                {"arrangement", arrangement_to_json(b.arr)},
                {"glue", glue_spec_to_json(b.spec)},
                {"map", expr_to_json(b.expr)},
                {"verification", verification_to_json(b.report)},
                {"entropy_root", root_to_json(b.entropy_root)},
                {"entropy", nine_digits(b.entropy)},
                {"warnings", b.warnings}};
}

}  // namespace nadyn

#endif

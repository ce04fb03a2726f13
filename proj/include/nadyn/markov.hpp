#ifndef NADYN_MARKOV_HPP
#define NADYN_MARKOV_HPP

#include <optional>

#include "disk.hpp"
#include "root.hpp"
#include "zeta.hpp"

// Piecewise-affine disk systems and the refinement loop that turns a
// covering by scaling disks into one with the Markov property. Each
// split strictly decreases the index M = sum (m(U) - 1) by exactly one,
// which both certifies progress and bounds the number of steps.

namespace nadyn {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexLawViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// z -> alpha z + beta on a closed disk domain; a scaling map with
// factor |alpha|.
struct AffinePiece {
    Disk domain;
    Rat alpha;
    Rat beta;

    Disk image(const Disk& d, const FieldContext& ctx) const {
        return affine_image(d, alpha, beta, ctx);
    }
};

class PiecewiseSystem {
public:
    PiecewiseSystem(FieldContext ctx, std::vector<AffinePiece> pieces,
                    std::optional<Disk> sink = std::nullopt)
        : ctx_(std::move(ctx)), pieces_(std::move(pieces)), sink_(std::move(sink)) {
        for (const AffinePiece& p : pieces_) {
            if (p.alpha == 0) throw BadGeometry("piece with zero scale");
            p.domain.radius_exp_int();  // closed, integer exponent
        }
        for (std::size_t i = 0; i < pieces_.size(); ++i)
            for (std::size_t j = i + 1; j < pieces_.size(); ++j)
                if (!disjoint(pieces_[i].domain, pieces_[j].domain, ctx_))
                    throw BadGeometry("piece domains overlap");
        if (sink_)
            for (const AffinePiece& p : pieces_)
                if (!disjoint(p.domain, *sink_, ctx_))
                    throw BadGeometry("sink overlaps a piece domain");
    }

    const FieldContext& ctx() const { return ctx_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const std::optional<Disk>& sink() const { return sink_; }

    // Piece whose domain contains d, if any.
    std::optional<std::size_t> piece_containing(const Disk& d) const {
        for (std::size_t i = 0; i < pieces_.size(); ++i)
            if (contains(pieces_[i].domain, d, ctx_)) return i;
        return std::nullopt;
    }

private:
    FieldContext ctx_;
    std::vector<AffinePiece> pieces_;
    std::optional<Disk> sink_;
};

// A cover element: the disk plus the piece it inherited from its
// ancestor (fragments keep their ancestor's affine map verbatim).
struct CoverDisk {
    Disk disk;
    std::size_t piece;
};

struct SplitEvent {
    std::size_t split_disk;   // index (at the time) of the disk whose orbit drove the split
    Disk landing;             // f^(m-1) image that became a cover element
    long index_before;
    long index_after;
};

struct CoverState {
    std::vector<CoverDisk> cover;
    std::vector<long> m_values;  // per surviving disk, least m with f^m(U) covering a disk
    std::vector<Disk> escaped;   // Fatou-pruned disks
    std::vector<SplitEvent> history;

    long index() const {
        long s = 0;
        for (long m : m_values) s += m - 1;
        return s;
    }
};

enum class MKind { Found, Escaped, CapExceeded };

struct MResult {
    MKind kind;
    long m = 0;
    Disk landing;             // f^(m-1)(u) when kind == Found
    std::vector<Disk> orbit;  // f^1(u) .. f^(m-1)(u); empty when m = 1

    MResult() : landing(Disk::point(Rat(0))) {}
};

// Least n <= cap with f^n(u) containing some cover disk. The orbit is
// iterated through piece domains; it escapes once the image neither
// contains a cover disk nor fits inside any piece domain.
inline MResult m_index(const CoverDisk& u, const std::vector<CoverDisk>& cover,
                       const PiecewiseSystem& sys, long cap) {
    MResult r;
    Disk cur = u.disk;
    std::size_t piece = u.piece;
    for (long n = 1; n <= cap; ++n) {
        Disk prev = cur;
        cur = sys.pieces()[piece].image(cur, sys.ctx());
        for (const CoverDisk& c : cover)
            if (contains(cur, c.disk, sys.ctx())) {
                r.kind = MKind::Found;
                r.m = n;
                r.landing = prev;
                return r;
            }
        std::optional<std::size_t> next = sys.piece_containing(cur);
        if (!next) {
            r.kind = MKind::Escaped;
            return r;
        }
        r.orbit.push_back(cur);
        piece = *next;
    }
    r.kind = MKind::CapExceeded;
    return r;
}

// Exact (0,1) adjacency: entry (i,j) = 1 iff f(U_i) contains U_j.
inline IntMatrix adjacency(const std::vector<CoverDisk>& cover, const PiecewiseSystem& sys) {
    IntMatrix a(cover.size());
    for (std::size_t i = 0; i < cover.size(); ++i) {
        Disk img = sys.pieces()[cover[i].piece].image(cover[i].disk, sys.ctx());
        for (std::size_t j = 0; j < cover.size(); ++j)
            if (contains(img, cover[j].disk, sys.ctx())) a.at(i, j) = 1;
    }
    return a;
}

namespace detail {

struct Candidate {
    std::size_t idx;
    long m;
    Disk landing;
};

}  // namespace detail

// Refinement loop: prune Fatou disks, then repeatedly split via the
// lowest-indexed safe landing disk until every surviving disk has
// m = 1. Splitting via a landing that sits below another pending orbit
// disk would make several m-values drop at once; restricting to safe
// candidates keeps the index law exact.
inline CoverState refine_to_markov(const PiecewiseSystem& sys, long cap_splits = 10000,
                                   long cap_m = 64) {
    CoverState st;
    for (std::size_t i = 0; i < sys.pieces().size(); ++i)
        st.cover.push_back({sys.pieces()[i].domain, i});

    long splits = 0;
    for (;;) {
        // Prune until stable: removing an escaped disk can re-route
        // another disk's orbit past its old stopping point.
        std::vector<MResult> ms;
        for (;;) {
            ms.clear();
            ms.reserve(st.cover.size());
            bool pruned = false;
            for (std::size_t i = 0; i < st.cover.size(); ++i) {
                MResult r = m_index(st.cover[i], st.cover, sys, cap_m);
                if (r.kind == MKind::CapExceeded)
                    throw CapExceeded("m-search cap exceeded (index " + std::to_string(i) + ")");
                if (r.kind == MKind::Escaped) {
                    st.escaped.push_back(st.cover[i].disk);
                    st.cover.erase(st.cover.begin() + static_cast<long>(i));
                    pruned = true;
                    break;
                }
                ms.push_back(r);
            }
            if (!pruned) break;
        }

        st.m_values.clear();
        for (const MResult& r : ms) st.m_values.push_back(r.m);
        long index_before = st.index();
        if (index_before == 0) return st;  // Markov: every m = 1

        if (++splits > cap_splits)
            throw CapExceeded("split cap exceeded (index " + std::to_string(index_before) + ")");

        // Candidates with m > 1; pick the lowest-indexed one whose split
        // is safe. Splitting via a landing w turns w into a cover disk,
        // so any pending orbit disk that weakly contains w would stop
        // early and drop the index by more than one; a safe candidate
        // has no such disk above its landing (its own landing aside).
        std::vector<detail::Candidate> cands;
        for (std::size_t i = 0; i < st.cover.size(); ++i)
            if (ms[i].m > 1) cands.push_back({i, ms[i].m, ms[i].landing});
        std::size_t pick = cands.size();
        for (std::size_t a = 0; a < cands.size() && pick == cands.size(); ++a) {
            bool safe = true;
            for (std::size_t b = 0; safe && b < cands.size(); ++b) {
                const std::vector<Disk>& orbit = ms[cands[b].idx].orbit;
                for (std::size_t n = 0; safe && n < orbit.size(); ++n) {
                    if (b == a && n + 1 == orbit.size()) continue;  // own landing
                    DiskRelation rel = relation(cands[a].landing, orbit[n], sys.ctx());
                    if (rel == DiskRelation::Equal || rel == DiskRelation::FirstInsideSecond)
                        safe = false;
                }
            }
            if (safe) pick = a;
        }
        if (pick == cands.size())
            throw IndexLawViolation("no safe split: pending orbits overlap every landing");
        const detail::Candidate& c = cands[pick];
        Disk w = c.landing;
        std::size_t w_piece = st.cover[c.idx].piece;
        // The landing disk inherits the piece whose domain holds it.
        if (auto ph = sys.piece_containing(w)) w_piece = *ph;

        // Split the cover disk properly containing w, when there is one;
        // otherwise w becomes a fresh cover element on its own.
        std::optional<std::size_t> host;
        for (std::size_t i = 0; i < st.cover.size(); ++i)
            if (relation(w, st.cover[i].disk, sys.ctx()) == DiskRelation::FirstInsideSecond)
                host = i;
        if (host) {
            // Cover disks are pairwise disjoint, so no marked disks
            // accompany the split; the host is replaced by the pieces.
            std::vector<Disk> parts = split(st.cover[*host].disk, w, {}, sys.ctx());
            st.cover.erase(st.cover.begin() + static_cast<long>(*host));
            for (const Disk& d : parts) st.cover.push_back({d, w_piece});
        } else {
            st.cover.push_back({w, w_piece});
        }

        // Re-derive the index and assert the exact decrement.
        long index_after = 0;
        for (const CoverDisk& cd : st.cover) {
            MResult r = m_index(cd, st.cover, sys, cap_m);
            if (r.kind == MKind::Found) index_after += r.m - 1;
            // Escaped disks are handled by the next pruning pass and do
            // not contribute.
        }
        st.history.push_back({c.idx, w, index_before, index_after});
        if (index_after != index_before - 1)
            throw IndexLawViolation("split changed the index by " +
                                    std::to_string(index_after - index_before));
    }
}

struct AnalysisReport {
    CoverState cover;
    IntMatrix adjacency;
    RationalFunctionZ zeta;
    RootCertificate root;
    double entropy;
    std::vector<std::string> warnings;
};

struct AnalyzeOptions {
    long cap_splits = 10000;
    long cap_m = 64;
    Rat tol = default_root_tol();
};

inline AnalysisReport analyze(const PiecewiseSystem& sys, const AnalyzeOptions& opt = {}) {
    AnalysisReport rep;
    rep.cover = refine_to_markov(sys, opt.cap_splits, opt.cap_m);
    if (rep.cover.cover.empty()) {
        rep.adjacency = IntMatrix(0);
        rep.zeta = RationalFunctionZ();
        rep.root = {IntPoly{0, 1}, Rat(0), Rat(0), true, 0.0};
        rep.entropy = 0.0;
        rep.warnings.push_back("EmptyJulia: every disk was pruned");
        return rep;
    }
    rep.adjacency = adjacency(rep.cover.cover, sys);
    rep.zeta = zeta_sft(rep.adjacency);
    rep.root = leading_root(rep.adjacency, opt.tol);
    rep.entropy = entropy_log(rep.root);
    if (!rep.cover.escaped.empty())
        rep.warnings.push_back("pruned " + std::to_string(rep.cover.escaped.size()) +
                               " Fatou disk(s)");
    return rep;
}

}  // namespace nadyn

#endif

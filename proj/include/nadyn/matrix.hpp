#ifndef NADYN_MATRIX_HPP
#define NADYN_MATRIX_HPP

#include <vector>

#include "polynomial.hpp"

// Non-negative integer matrices (adjacency counts of finite digraphs)
// and the exact linear algebra on them: characteristic polynomial,
// trace powers, and edge-subdivision augmentation.

namespace nadyn {

class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n, Int(0)) {}
    IntMatrix(std::initializer_list<std::vector<Int>> rows)
        : IntMatrix(std::vector<std::vector<Int>>(rows)) {}
    explicit IntMatrix(const std::vector<std::vector<Int>>& rows) : IntMatrix(rows.size()) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw BadInput("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i][j];
        }
        check_nonneg();
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero_one() const {
        for (const Int& x : e_)
            if (x != 0 && x != 1) return false;
        return true;
    }
    bool is_positive() const {
        for (const Int& x : e_)
            if (x <= 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (n_ != o.n_) throw BadInput("matrix size mismatch");
        IntMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    IntMatrix pow(unsigned long e) const {
        IntMatrix r = identity(n_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Int trace() const {
        Int t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

private:
    void check_nonneg() const {
        for (const Int& x : e_)
            if (x < 0) throw BadInput("IntMatrix: negative entry");
    }
    std::size_t n_;
    std::vector<Int> e_;
};

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; every
// intermediate division is exact over Z.
inline IntPoly char_poly(const IntMatrix& a) {
    std::size_t n = a.size();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;  // coefficient of x^n
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Int ck = m.trace();
        if (mpz_divisible_ui_p(ck.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
            throw BadInput("char_poly: inexact trace division");
        ck /= Int(static_cast<long>(k));
        c[n - k] = -ck;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) -= ck;
    }
    return IntPoly(std::move(c));
}

// det(I - tA): the reversal of det(xI - A) with the t^(n-deg) tail of
// zero eigenvalues dropped; constant term is always 1.
inline IntPoly det_I_minus_tA(const IntMatrix& a) {
    IntPoly p = char_poly(a);
    std::size_t n = a.size();
    std::vector<Int> r(n + 1, Int(0));
    for (std::size_t k = 0; k <= n; ++k) r[n - k] = p.coeff(k);
    IntPoly q(std::move(r));
    if (q.coeff(0) != 1) throw BadInput("det_I_minus_tA: constant term != 1");
    return q;
}

// trace(A^m) for m = 1..n_max.
inline std::vector<Int> trace_powers(const IntMatrix& a, std::size_t n_max) {
    std::vector<Int> out;
    out.reserve(n_max);
    IntMatrix m = a;
    for (std::size_t k = 1; k <= n_max; ++k) {
        out.push_back(m.trace());
        if (k < n_max) m = m * a;
    }
    return out;
}

struct NotSimpleAtN1 : BadInput {
    using BadInput::BadInput;
};

// Realize a as a multi-digraph and replace each edge by a directed path
// of n edges through n-1 fresh vertices. For n = 1 the graph is kept,
// so the input must already be (0,1).
inline IntMatrix augment(const IntMatrix& a0, unsigned long n) {
    if (n < 1) throw BadInput("augment: n must be >= 1");
    std::size_t v0 = a0.size();
    if (n == 1) {
        if (!a0.is_zero_one())
            throw NotSimpleAtN1("augment: n = 1 requires a (0,1)-matrix");
        return a0;
    }
    std::size_t edges = 0;
    for (std::size_t i = 0; i < v0; ++i)
        for (std::size_t j = 0; j < v0; ++j) {
            const Int& e = a0.at(i, j);
            if (!e.fits_ulong_p()) throw BadInput("augment: entry too large");
            edges += e.get_ui();
        }
    IntMatrix g(v0 + (n - 1) * edges);
    std::size_t next = v0;
    for (std::size_t i = 0; i < v0; ++i)
        for (std::size_t j = 0; j < v0; ++j)
            for (unsigned long c = 0; c < a0.at(i, j).get_ui(); ++c) {
                std::size_t prev = i;
                for (unsigned long s = 0; s + 1 < n; ++s) {
                    g.at(prev, next) = 1;
                    prev = next++;
                }
                g.at(prev, j) = 1;
            }
    return g;
}

// Strong connectivity of the adjacency digraph (reachability both ways).
inline bool irreducible(const IntMatrix& a) {
    std::size_t n = a.size();
    if (n == 0) return false;
    auto reach = [&](bool transpose) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                const Int& e = transpose ? a.at(w, v) : a.at(v, w);
                if (e != 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        for (bool s : seen)
            if (!s) return false;
        return true;
    };
    return reach(false) && reach(true);
}

}  // namespace nadyn

#endif

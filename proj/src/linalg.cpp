#include "scurve/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace scurve {

std::optional<Rational> rationalize(double x, long maxden) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents p/q with q bounded by maxden.
    bool neg = x < 0;
    double v = neg ? -x : x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rem = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(rem);
        if (fl > 9e18) break;
        Int a = static_cast<long long>(fl);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = rem - fl;
        if (frac < 1e-18) break;
        rem = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

std::optional<Int> perfect_nth_root(const Int& a, unsigned n) {
    if (a < 0) return std::nullopt;
    if (a == 0 || a == 1 || n == 1) return a;
    Int lo = 0, hi = 1;
    while (pow(hi, n) < a) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (pow(mid, n) < a) lo = mid + 1; else hi = mid;
    }
    if (pow(lo, n) == a) return lo;
    return std::nullopt;
}

std::optional<Rational> perfect_nth_root(const Rational& q, unsigned n) {
    bool neg = q < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Rational v = neg ? Rational(-q) : q;
    auto rn = perfect_nth_root(Int(numerator(v)), n);
    auto rd = perfect_nth_root(Int(denominator(v)), n);
    if (!rn || !rd) return std::nullopt;
    Rational r(*rn, *rd);
    return neg ? Rational(-r) : r;
}

Int ivec_gcd(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x < 0 ? Int(-x) : x);
    return g;
}

IVec make_primitive(IVec v) {
    Int g = ivec_gcd(v);
    if (g > 1) for (auto& x : v) x /= g;
    return v;
}

Int ivec_dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string ivec_str(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

QMat qmat_from_int(const IMat& rows) {
    QMat m(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        m[i].reserve(rows[i].size());
        for (const auto& x : rows[i]) m[i].emplace_back(x);
    }
    return m;
}

int rref(QMat& m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    const int nr = static_cast<int>(m.size());
    const int nc = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rational inv = m[r][c];
        for (int j = c; j < nc; ++j) m[r][j] /= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

int rank(QMat m) { return rref(m); }

QMat kernel_basis(const QMat& m, int ncols) {
    QMat a = m;
    if (a.empty()) a.push_back(QVec(ncols, 0));
    std::vector<int> piv;
    rref(a, &piv);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    QMat basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_piv[c]) continue;
        QVec v(ncols, 0);
        v[c] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    const int nr = static_cast<int>(a.size());
    const int nc = nr ? static_cast<int>(a[0].size()) : 0;
    for (int i = 0; i < nr; ++i) a[i].push_back(b[i]);
    std::vector<int> piv;
    rref(a, &piv);
    // Inconsistent iff the augmented column became a pivot.
    if (!piv.empty() && piv.back() == nc) return std::nullopt;
    QVec x(nc, 0);
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = a[k][nc];
    return x;
}

Rational det(QMat a) {
    const int n = static_cast<int>(a.size());
    Rational d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(a[piv], a[c]); d = -d; }
        d *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

std::optional<QMat> inverse(QMat a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        a[i].resize(2 * n, 0);
        a[i][n + i] = 1;
    }
    if (rref(a) != n) return std::nullopt;
    // rref of [A|I] is [I|A^-1] exactly when the left block has full rank,
    // but a pivot could sit in the right block if A is singular; rank n of the
    // whole sheet with singular A is impossible only for square A. Check anyway.
    for (int i = 0; i < n; ++i)
        if (a[i][i] != 1) return std::nullopt;
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

IVec primitive_from_rational(const QVec& v) {
    Int lcm = 1;
    for (const auto& q : v) {
        Int d(denominator(q));
        lcm = lcm / gcd(lcm, d) * d;
    }
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        w[i] = Int(numerator(v[i]) * (lcm / denominator(v[i])));
    return make_primitive(std::move(w));
}

IMat rowspace_canonical(const IMat& rows) {
    QMat m = qmat_from_int(rows);
    if (m.empty()) return {};
    int r = rref(m);
    IMat out;
    out.reserve(r);
    for (int i = 0; i < r; ++i) out.push_back(primitive_from_rational(m[i]));
    return out;
}

IMat kernel_primitive(const IMat& rows, int ncols) {
    QMat kb = kernel_basis(qmat_from_int(rows), ncols);
    IMat out;
    out.reserve(kb.size());
    for (auto& v : kb) out.push_back(primitive_from_rational(v));
    return out;
}

IVec imat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = ivec_dot(m[i], v);
    return r;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IMat c(n, IVec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    return c;
}

IMat unimodular_inverse(const IMat& m) {
    auto inv = inverse(qmat_from_int(m));
    if (!inv) throw std::invalid_argument("matrix is singular");
    IMat r(inv->size(), IVec(inv->size()));
    for (size_t i = 0; i < inv->size(); ++i)
        for (size_t j = 0; j < inv->size(); ++j) {
            const Rational& q = (*inv)[i][j];
            if (denominator(q) != 1)
                throw std::invalid_argument("matrix is not unimodular");
            r[i][j] = Int(numerator(q));
        }
    return r;
}

Int det_int(const IMat& a) {
    Rational d = det(qmat_from_int(a));
    return Int(numerator(d));  // integer matrix => integer determinant
}

std::vector<QC> solve_qc(std::vector<std::vector<QC>> a, std::vector<QC> b) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::domain_error("singular linear system");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            QC f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<QC> x(n);
    for (int i = n - 1; i >= 0; --i) {
        QC s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace scurve

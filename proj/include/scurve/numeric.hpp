#pragma once

#include "scurve/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace scurve {

template <class T>
using CVec = std::vector<Cx<T>>;
template <class T>
using CMat = std::vector<std::vector<Cx<T>>>;

/// Deterministic uniform samples. mt19937_64 output is pinned by the standard;
/// the mapping to doubles is done by hand so streams are reproducible across
/// library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    CD unit_complex() {
        double th = 6.283185307179586476925286766559 * unit();
        return {std::cos(th), std::sin(th)};
    }

private:
    std::mt19937_64 eng_;
};

/// Gaussian elimination with partial pivoting. Returns false on (numerical)
/// singularity. All of Cx<double>, Cx<F128>, Cx<F256> instantiate.
template <class T>
bool gauss_solve(CMat<T> a, CVec<T> b, CVec<T>& x) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        T best = a[c][c].norm2();
        for (int i = c + 1; i < n; ++i) {
            T m = a[i][c].norm2();
            if (m > best) { best = m; piv = i; }
        }
        if (!(best > T(0))) return false;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c].norm2() == T(0)) continue;
            Cx<T> f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    x.assign(n, Cx<T>{T(0)});
    for (int i = n - 1; i >= 0; --i) {
        Cx<T> s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return true;
}

template <class T>
bool gauss_inverse(CMat<T> a, CMat<T>& inv) {
    const int n = static_cast<int>(a.size());
    inv.assign(n, CVec<T>(n, Cx<T>{T(0)}));
    for (int i = 0; i < n; ++i) inv[i][i] = Cx<T>{T(1)};
    for (int c = 0; c < n; ++c) {
        int piv = c;
        T best = a[c][c].norm2();
        for (int i = c + 1; i < n; ++i) {
            T m = a[i][c].norm2();
            if (m > best) { best = m; piv = i; }
        }
        if (!(best > T(0))) return false;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Cx<T> d = a[c][c];
        for (int j = 0; j < n; ++j) { a[c][j] /= d; inv[c][j] /= d; }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].norm2() == T(0)) continue;
            Cx<T> f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return true;
}

/// 1 / (||A||_inf * ||A^-1||_inf); 0 for a singular matrix. Dimensions here
/// are tiny, so the explicit inverse is the cheapest honest estimate.
template <class T>
double inverse_condition(const CMat<T>& a) {
    CMat<T> inv;
    if (!gauss_inverse(a, inv)) return 0.0;
    auto norm_inf = [](const CMat<T>& m) {
        T best(0);
        for (const auto& row : m) {
            T s(0);
            for (const auto& z : row) s += cx_abs(z);
            if (s > best) best = s;
        }
        return best;
    };
    T num = norm_inf(a) * norm_inf(inv);
    if (!(num > T(0))) return 0.0;
    return static_cast<double>(1.0 / static_cast<double>(num));
}

/// One polynomial system compiled for repeated evaluation at precision T,
/// together with all first partials.
template <class T>
struct NumSystem {
    struct Term {
        Cx<T> c;
        std::vector<int32_t> e;
    };
    using Poly = std::vector<Term>;

    int nvars = 0;
    std::vector<Poly> polys;
    std::vector<std::vector<Poly>> jac;  // [poly][var]

    static Poly compile_poly(const Polynomial& p) {
        Poly out;
        for (const auto& [e, c] : p.terms()) {
            Cx<T> z = c.is_exact()
                          ? Cx<T>(rational_to<T>(c.q.re), rational_to<T>(c.q.im))
                          : Cx<T>(T(c.z.re), T(c.z.im));
            out.push_back({z, e});
        }
        return out;
    }

    static NumSystem compile(const PolynomialSystem& sys) {
        NumSystem ns;
        ns.nvars = sys.nvars;
        for (const auto& p : sys.polys) {
            ns.polys.push_back(compile_poly(p));
            std::vector<Poly> row;
            for (int v = 0; v < sys.nvars; ++v) row.push_back(compile_poly(p.derivative(v)));
            ns.jac.push_back(std::move(row));
        }
        return ns;
    }

    static Cx<T> eval_poly(const Poly& p, const CVec<T>& x) {
        Cx<T> acc{T(0)};
        for (const auto& t : p) {
            Cx<T> v = t.c;
            for (size_t i = 0; i < t.e.size(); ++i)
                if (t.e[i] != 0) v *= cx_pow(x[i], t.e[i]);
            acc += v;
        }
        return acc;
    }

    void eval(const CVec<T>& x, CVec<T>& out) const {
        out.resize(polys.size());
        for (size_t j = 0; j < polys.size(); ++j) out[j] = eval_poly(polys[j], x);
    }

    void eval_jacobian(const CVec<T>& x, CMat<T>& out) const {
        out.assign(polys.size(), CVec<T>(nvars, Cx<T>{T(0)}));
        for (size_t j = 0; j < polys.size(); ++j)
            for (int v = 0; v < nvars; ++v) out[j][v] = eval_poly(jac[j][v], x);
    }
};

/// All roots of a monic-izable univariate polynomial, coefficients[k] on y^k.
/// Durand-Kerner sweeps from a deterministic asymmetric start.
std::vector<CD> durand_kerner(std::vector<CD> coeffs, double tol = 1e-13, int max_iters = 400);

}  // namespace scurve

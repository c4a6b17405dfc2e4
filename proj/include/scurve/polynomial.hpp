#pragma once

#include "scurve/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scurve {

using Expt = std::vector<int32_t>;  // one exponent per variable; may be negative

IVec expt_to_ivec(const Expt& e);

/// Term order: higher total degree first, lexicographically larger first on ties.
struct GradedLexDesc {
    bool operator()(const Expt& a, const Expt& b) const;
};

/// Either an exact Gaussian-rational value or a numeric complex one.
/// The two kinds never mix silently; arithmetic across kinds throws.
struct Coefficient {
    enum class Kind { exact, numeric };
    Kind kind = Kind::exact;
    QC q;
    CD z;

    Coefficient() = default;
    static Coefficient exact(QC v) {
        Coefficient c;
        c.kind = Kind::exact;
        c.q = std::move(v);
        return c;
    }
    static Coefficient numeric(CD v) {
        Coefficient c;
        c.kind = Kind::numeric;
        c.z = v;
        return c;
    }

    bool is_zero() const {
        return kind == Kind::exact ? q.is_zero() : (z.re == 0 && z.im == 0);
    }
    bool is_exact() const { return kind == Kind::exact; }
    const QC& exact_value() const;
    CD to_cd() const { return kind == Kind::exact ? to_cd_exact() : z; }
    CD to_cd_exact() const { return {to_double(q.re), to_double(q.im)}; }

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }

    std::string to_string() const;
};

/// Sparse Laurent polynomial in x1..xn with canonical term order.
class Polynomial {
public:
    using TermMap = std::map<Expt, Coefficient, GradedLexDesc>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Coefficient c);
    static Polynomial monomial(int nvars, const Expt& e, Coefficient c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Expt& e, const Coefficient& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial scaled(const Coefficient& c) const;
    Polynomial pow(unsigned k) const;

    /// d/dx_var; negative exponents differentiate like any power.
    Polynomial derivative(int var) const;

    /// Support as lattice points, in term order.
    std::vector<IVec> support() const;

    int total_degree() const;  // max total degree over the support; 0 if empty

    /// Smallest exponent of x_var over all terms (0 when the polynomial is zero).
    int32_t min_exponent(int var) const;

    /// Divides every term by x_var^k (shifts exponents down by k).
    Polynomial shifted(int var, int32_t k) const;

    /// Fixes x_var to an exact value, producing a polynomial in the same
    /// variable list with exponent 0 at var. Requires exact coefficients.
    Polynomial substitute_const(int var, const QC& value) const;

    /// Re-embeds into a wider variable list (new variables get exponent 0).
    Polynomial widened(int new_nvars) const;

    bool all_exact() const;

    QC eval_exact(const std::vector<QC>& x) const;

    template <class T>
    Cx<T> eval(const std::vector<Cx<T>>& x) const;

    std::string to_string() const;  // variables print as x1, x2, ...
    std::string to_string(const std::vector<std::string>& names) const;

    bool operator==(const Polynomial& o) const;

private:
    int nvars_;
    TermMap terms_;
};

struct PolynomialSystem {
    int nvars = 0;
    std::vector<Polynomial> polys;

    size_t size() const { return polys.size(); }
    std::string to_string() const;  // one polynomial per line, ';'-terminated
};

QC qc_pow(const QC& base, int64_t e);

template <class T>
Cx<T> cx_pow(Cx<T> base, int64_t e) {
    if (e < 0) {
        base = Cx<T>(T(1)) / base;
        e = -e;
    }
    Cx<T> r{T(1)};
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

template <class T>
Cx<T> Polynomial::eval(const std::vector<Cx<T>>& x) const {
    Cx<T> acc{T(0)};
    for (const auto& [e, c] : terms_) {
        Cx<T> t = c.is_exact()
                      ? Cx<T>(rational_to<T>(c.q.re), rational_to<T>(c.q.im))
                      : Cx<T>(T(c.z.re), T(c.z.im));
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= cx_pow(x[i], e[i]);
        acc += t;
    }
    return acc;
}

}  // namespace scurve

#include "scurve/puiseux.hpp"

#include "scurve/geometry.hpp"
#include "scurve/linalg.hpp"
#include "scurve/mixedvol.hpp"
#include "scurve/numeric.hpp"
#include "scurve/tropical.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace scurve {

namespace {

bool qc_less(const QC& a, const QC& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::string qc_str(const QC& v) {
    return Coefficient::exact(v).to_string();
}

// Exact square roots of a in Q(i): with s = |a| rational, the real part of a
// root is sqrt((re + s)/2) and the imaginary part follows from 2pq = im.
std::vector<QC> gaussian_sqrt(const QC& a) {
    std::vector<QC> out;
    if (a.is_zero()) {
        out.emplace_back();
        return out;
    }
    if (a.im == 0) {
        if (a.re > 0) {
            if (auto r = perfect_nth_root(a.re, 2)) {
                out.push_back(QC(*r));
                out.push_back(QC(-*r));
            }
        } else {
            if (auto r = perfect_nth_root(Rational(-a.re), 2)) {
                out.push_back(QC(Rational(0), *r));
                out.push_back(QC(Rational(0), Rational(-*r)));
            }
        }
        return out;
    }
    auto s = perfect_nth_root(a.norm2(), 2);
    if (!s) return out;
    auto p = perfect_nth_root(Rational((a.re + *s) / 2), 2);
    if (!p || *p == 0) return out;
    QC mu(*p, Rational(a.im / (2 * *p)));
    if (mu * mu == a) {
        out.push_back(mu);
        out.push_back(-mu);
    }
    return out;
}

std::vector<CD> numeric_roots_of(const CD& a, unsigned g) {
    const double pi = std::acos(-1.0);
    const double r = std::hypot(a.re, a.im);
    const double th = std::atan2(a.im, a.re);
    const double rg = std::pow(r, 1.0 / g);
    std::vector<CD> out;
    for (unsigned k = 0; k < g; ++k) {
        const double phi = (th + 2 * pi * k) / g;
        out.push_back({rg * std::cos(phi), rg * std::sin(phi)});
    }
    return out;
}

// ---- series coefficients carrying unresolved unknowns ----

/// Raised when a product needs two coefficients that are both still symbolic;
/// the equation is deferred and retried once more values are known.
struct PendingProduct : std::runtime_error {
    PendingProduct() : std::runtime_error("product of two unresolved coefficients") {}
};

/// Constant plus a linear combination of unknowns (by id).
struct Aff {
    QC c;
    std::map<int, QC> lin;

    Aff() = default;
    explicit Aff(QC v) : c(std::move(v)) {}
    static Aff unknown(int id) {
        Aff a;
        a.lin[id] = QC(1);
        return a;
    }

    bool is_const() const { return lin.empty(); }
    bool is_zero() const { return lin.empty() && c.is_zero(); }

    Aff& operator+=(const Aff& o) {
        c += o.c;
        for (const auto& [id, k] : o.lin) {
            QC& t = lin[id];
            t += k;
            if (t.is_zero()) lin.erase(id);
        }
        return *this;
    }
    Aff& operator-=(const Aff& o) {
        c -= o.c;
        for (const auto& [id, k] : o.lin) {
            QC& t = lin[id];
            t -= k;
            if (t.is_zero()) lin.erase(id);
        }
        return *this;
    }
    Aff scaled(const QC& k) const {
        Aff r;
        if (k.is_zero()) return r;
        r.c = c * k;
        for (const auto& [id, v] : lin) r.lin[id] = v * k;
        return r;
    }
};

Aff aff_mul(const Aff& a, const Aff& b) {
    if (!a.lin.empty() && !b.lin.empty()) throw PendingProduct{};
    return a.lin.empty() ? b.scaled(a.c) : a.scaled(b.c);
}

/// Sparse univariate series exponent -> coefficient; arithmetic truncates.
struct Series {
    std::map<int, Aff> c;

    void add(int e, const Aff& a, int cutoff) {
        if (e > cutoff || a.is_zero()) return;
        Aff& t = c[e];
        t += a;
        if (t.is_zero()) c.erase(e);
    }
};

Series series_mul(const Series& a, const Series& b, int cutoff) {
    Series out;
    for (const auto& [ea, ca] : a.c)
        for (const auto& [eb, cb] : b.c) {
            if (ea + eb > cutoff) break;  // b iterates in ascending exponent
            out.add(ea + eb, aff_mul(ca, cb), cutoff);
        }
    return out;
}

/// f(x(t)) truncated to exponents <= cutoff. Requires exponents >= 0.
Series compose(const Polynomial& f, const std::vector<Series>& x, int cutoff) {
    Series acc;
    for (const auto& [e, coef] : f.terms()) {
        Series t;
        t.add(0, Aff(coef.exact_value()), cutoff);
        for (size_t i = 0; i < e.size(); ++i)
            for (int32_t rep = 0; rep < e[i]; ++rep) t = series_mul(t, x[i], cutoff);
        for (const auto& [et, ct] : t.c) acc.add(et, ct, cutoff);
    }
    return acc;
}

/// Online Gaussian elimination over Q(i). Rows are kept reduced against each
/// other; an unknown whose row shrinks to a single entry becomes a value.
struct Eliminator {
    std::map<int, Aff> rows;  // pivot id -> row with lin[pivot] == 1
    std::map<int, QC> value;

    void substitute_values(Aff& a) const {
        for (auto it = a.lin.begin(); it != a.lin.end();) {
            auto v = value.find(it->first);
            if (v != value.end()) {
                a.c += it->second * v->second;
                it = a.lin.erase(it);
            } else {
                ++it;
            }
        }
    }

    void add_equation(Aff eq) {
        substitute_values(eq);
        while (true) {
            int p = -1;
            for (const auto& [id, k] : eq.lin)
                if (rows.count(id)) {
                    p = id;
                    break;
                }
            if (p < 0) break;
            eq -= rows[p].scaled(eq.lin[p]);
        }
        if (eq.lin.empty()) {
            if (!eq.c.is_zero()) throw std::runtime_error("inconsistent series equations");
            return;
        }
        const int piv = eq.lin.begin()->first;
        Aff nrow = eq.scaled(QC(1) / eq.lin[piv]);
        for (auto& [id, r] : rows) {
            auto f = r.lin.find(piv);
            if (f != r.lin.end()) r -= nrow.scaled(f->second);
        }
        rows[piv] = nrow;
        for (bool prog = true; prog;) {
            prog = false;
            for (auto it = rows.begin(); it != rows.end();) {
                Aff& r = it->second;
                substitute_values(r);
                if (r.lin.empty()) {
                    if (!r.c.is_zero()) throw std::runtime_error("inconsistent series equations");
                    it = rows.erase(it);
                    prog = true;
                } else if (r.lin.size() == 1) {
                    value[it->first] = -r.c;
                    it = rows.erase(it);
                    prog = true;
                } else {
                    ++it;
                }
            }
        }
    }

    bool resolved(int id) const { return value.count(id) > 0; }
};

/// Shifts every variable so the minimum exponent is zero; returns the shifted
/// polynomial and the valuation offset <minexp, v> it factored out.
std::pair<Polynomial, Int> clear_negative(const Polynomial& f, const IVec& v) {
    Polynomial g = f;
    Int off = 0;
    for (int i = 0; i < f.nvars(); ++i) {
        int32_t m = g.min_exponent(i);
        if (m != 0) {
            g = g.shifted(i, m);
            off += Int(m) * v[i];
        }
    }
    return {g, off};
}

Int support_valuation(const Polynomial& f, const IVec& v) {
    return min_support_value(f.support(), v);
}

/// Determinant of a small matrix of polynomials, by cofactor expansion.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const size_t k = m.size();
    if (k == 1) return m[0][0];
    Polynomial acc(m[0][0].nvars());
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * poly_det(minor);
        if (j % 2) acc -= cof;
        else acc += cof;
    }
    return acc;
}

/// Scalar-normalized print form: equal keys mean equal up to a constant
/// factor (monomial content is already split off by the transform).
std::string canon_key(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const QC lead = p.terms().begin()->second.exact_value();
    return p.scaled(Coefficient::exact(QC(1) / lead)).to_string();
}

/// True when some coefficient combination of the polynomials is a single
/// term. Such a combination can never vanish on the torus.
bool span_contains_monomial(const std::vector<Polynomial>& polys) {
    std::map<Expt, size_t, GradedLexDesc> col;
    for (const Polynomial& p : polys)
        for (const auto& [e, c] : p.terms()) col.emplace(e, 0);
    size_t next = 0;
    for (auto& [e, idx] : col) idx = next++;
    std::vector<std::vector<QC>> m;
    for (const Polynomial& p : polys) {
        std::vector<QC> row(col.size());
        for (const auto& [e, c] : p.terms()) row[col.at(e)] = c.exact_value();
        m.push_back(std::move(row));
    }
    size_t rpos = 0;
    for (size_t c = 0; c < col.size() && rpos < m.size(); ++c) {
        size_t sel = rpos;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rpos], m[sel]);
        const QC inv = QC(1) / m[rpos][c];
        for (QC& x : m[rpos]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rpos || m[r][c].is_zero()) continue;
            const QC f = m[r][c];
            for (size_t cc = 0; cc < col.size(); ++cc) m[r][cc] -= f * m[rpos][cc];
        }
        ++rpos;
    }
    for (const auto& row : m) {
        int nz = 0;
        for (const QC& x : row)
            if (!x.is_zero()) ++nz;
        if (nz == 1) return true;
    }
    return false;
}

std::optional<QC> snap_exact(const CD& z) {
    for (long maxden : {64L, 4096L, 1L << 20}) {
        auto re = rationalize(z.re, maxden);
        auto im = rationalize(z.im, maxden);
        if (!re || !im) continue;
        CD back{to_double(*re), to_double(*im)};
        if (std::abs(back.re - z.re) < 1e-7 && std::abs(back.im - z.im) < 1e-7)
            return QC(*re, *im);
    }
    return std::nullopt;
}

int64_t to_i64(const Int& x) { return x.convert_to<int64_t>(); }

std::string approx_key(const std::vector<CD>& v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(9);
    for (const CD& z : v) os << z.re << "," << z.im << ";";
    return os.str();
}

}  // namespace

std::vector<QC> gaussian_roots(const QC& a, unsigned g) {
    if (g == 0) throw std::invalid_argument("gaussian_roots: zero exponent");
    std::vector<QC> out;
    if (a.is_zero()) {
        out.emplace_back();
        return out;
    }
    if (g == 1) {
        out.push_back(a);
    } else if (g % 2 == 0) {
        for (const QC& w : gaussian_roots(a, g / 2))
            for (const QC& mu : gaussian_sqrt(w)) out.push_back(mu);
    } else {
        // mu = zeta * r with zeta a fourth root of unity and r rational; this
        // covers every odd-degree case our pins produce.
        const QC units[4] = {QC(1), QC(-1), QC(Rational(0), Rational(1)),
                             QC(Rational(0), Rational(-1))};
        for (const QC& z : units) {
            QC b = a / qc_pow(z, g);
            if (b.im != 0) continue;
            if (auto r = perfect_nth_root(b.re, g)) out.push_back(z * QC(*r));
        }
    }
    std::sort(out.begin(), out.end(), qc_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BranchStart> leading_terms(const PolynomialSystem& sys, const IVec& v_in,
                                       int pin_var, const QC& pin_value,
                                       const SolverConfig& cfg) {
    const int n = sys.nvars;
    if (n < 2) throw std::invalid_argument("leading_terms: need at least two variables");
    if (static_cast<int>(v_in.size()) != n)
        throw std::invalid_argument("leading_terms: direction has wrong length");
    if (ivec_is_zero(v_in)) throw std::invalid_argument("leading_terms: zero direction");
    if (pin_var < 0 || pin_var >= n) throw std::invalid_argument("leading_terms: bad pin variable");
    if (pin_value.is_zero()) throw std::invalid_argument("leading_terms: pin value must be nonzero");
    const IVec v = make_primitive(v_in);
    if (v[pin_var] == 0)
        throw std::invalid_argument("leading_terms: the pinned coordinate needs a nonzero exponent");

    PolynomialSystem f0 = initial_system(sys, v);
    for (size_t j = 0; j < f0.polys.size(); ++j)
        if (f0.polys[j].term_count() < 2)
            throw NoTorusSolutions("initial form " + std::to_string(j + 1) +
                                   " is a single term; no solutions on the torus");

    const IMat U = unimodular_extend(v);
    TransformedSystem tr = transform_system(f0, U);

    // The first transformed coordinate carries the direction, so initial forms
    // lose it entirely; anything else is a bug upstream.
    std::vector<Polynomial> reduced;
    for (const Polynomial& p : tr.reduced.polys) {
        Polynomial g(n - 1);
        for (const auto& [e, c] : p.terms()) {
            if (e[0] != 0) throw std::logic_error("initial form depends on the direction coordinate");
            g.add_term(Expt(e.begin() + 1, e.end()), c);
        }
        reduced.push_back(std::move(g));
    }

    // Distinct up to scalar factors; the monomial content went into the
    // transform's factor record.
    std::vector<Polynomial> uniq;
    {
        std::set<std::string> seen;
        for (const Polynomial& g : reduced)
            if (seen.insert(canon_key(g)).second) uniq.push_back(g);
    }

    if (span_contains_monomial(uniq))
        throw NoTorusSolutions(
            "a monomial lies in the span of the initial forms; no solutions on the torus");
    if (static_cast<int>(uniq.size()) < n - 1)
        throw DegenerateInitialSystem(
            "initial system drops rank after deduplication; leading coefficients are not isolated");
    std::vector<Polynomial> core(uniq.begin(), uniq.begin() + (n - 1));

    // No isolated torus solutions exist at mixed volume zero, whatever the
    // coefficients; any numeric "solutions" would sit on positive-dimensional
    // components.
    {
        std::vector<std::vector<IVec>> supp;
        for (const Polynomial& g : core) supp.push_back(g.support());
        if (mixed_volume(supp) == 0)
            throw DegenerateInitialSystem(
                "initial system has mixed volume zero; leading coefficients are not isolated");
    }

    if (n - 1 <= 3) {
        std::vector<std::vector<Polynomial>> jac(n - 1, std::vector<Polynomial>());
        for (int j = 0; j < n - 1; ++j)
            for (int i = 0; i < n - 1; ++i) jac[j].push_back(core[j].derivative(i));
        if (poly_det(jac).is_zero())
            throw DegenerateInitialSystem(
                "initial system has identically singular Jacobian; leading coefficients are not isolated");
    }

    // Solve the reduced square system on the torus.
    std::vector<std::vector<CD>> sols;
    if (n - 1 == 1) {
        const Polynomial& g = core[0];
        Polynomial h = g.shifted(0, g.min_exponent(0));
        int deg = 0;
        for (const auto& [e, c] : h.terms()) deg = std::max(deg, static_cast<int>(e[0]));
        std::vector<CD> coeffs(deg + 1, CD{0, 0});
        for (const auto& [e, c] : h.terms()) coeffs[e[0]] = c.to_cd();
        for (const CD& r : durand_kerner(coeffs)) sols.push_back({r});
    } else {
        PolynomialSystem g;
        g.nvars = n - 1;
        g.polys = core;
        sols = solve_square(g, cfg).solutions;
    }

    std::vector<std::vector<QC>> torus_exact;
    std::vector<std::vector<CD>> torus_numeric;
    for (const auto& s : sols) {
        bool on_torus = true;
        for (const CD& z : s)
            if (std::sqrt(z.norm2()) < 1e-8) {
                on_torus = false;
                break;
            }
        if (!on_torus) continue;
        std::vector<QC> w;
        bool exact = true;
        for (const CD& z : s) {
            auto q = snap_exact(z);
            if (!q) {
                exact = false;
                break;
            }
            w.push_back(*q);
        }
        if (exact)
            for (const Polynomial& g : uniq)
                if (!g.eval_exact(w).is_zero()) {
                    exact = false;
                    break;
                }
        if (exact) {
            torus_exact.push_back(std::move(w));
            continue;
        }
        bool close = true;
        for (const Polynomial& g : uniq) {
            CD r = g.eval(s);
            if (std::sqrt(r.norm2()) > 1e-6) {
                close = false;
                break;
            }
        }
        if (close) torus_numeric.push_back(s);
    }
    if (torus_exact.empty() && torus_numeric.empty())
        throw NoTorusSolutions("the initial system has no solutions on the torus");

    std::sort(torus_exact.begin(), torus_exact.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return qc_less(a[i], b[i]);
        return false;
    });
    torus_exact.erase(std::unique(torus_exact.begin(), torus_exact.end()), torus_exact.end());

    // Map back: x_j = prod_i y_i^(U[i][j]) with y_1 = mu t, y_(i+1) the torus
    // coordinates. The pin fixes mu^v[pin].
    std::vector<BranchStart> starts;
    const int64_t vp = to_i64(v[pin_var]);
    const unsigned g_pin = static_cast<unsigned>(vp > 0 ? vp : -vp);
    auto numeric_start = [&](const std::vector<CD>& base) {
        const CD pv{to_double(pin_value.re), to_double(pin_value.im)};
        CD target = pv / base[pin_var];
        if (vp < 0) target = CD{1, 0} / target;
        for (const CD& mu : numeric_roots_of(target, g_pin)) {
            BranchStart s;
            s.coeff.assign(n, std::nullopt);
            s.approx.resize(n);
            for (int j = 0; j < n; ++j) s.approx[j] = cx_pow(mu, to_i64(v[j])) * base[j];
            s.exact = false;
            starts.push_back(std::move(s));
        }
    };

    for (const auto& w : torus_exact) {
        std::vector<QC> base(n);
        for (int j = 0; j < n; ++j) {
            QC t(1);
            for (int i = 1; i < n; ++i) t *= qc_pow(w[i - 1], to_i64(U[i][j]));
            base[j] = t;
        }
        const QC target = pin_value / base[pin_var];
        std::vector<QC> mus = vp > 0 ? gaussian_roots(target, g_pin)
                                     : gaussian_roots(QC(1) / target, g_pin);
        if (mus.empty()) {
            std::vector<CD> nb(n);
            for (int j = 0; j < n; ++j) nb[j] = CD{to_double(base[j].re), to_double(base[j].im)};
            numeric_start(nb);
            continue;
        }
        for (const QC& mu : mus) {
            BranchStart s;
            s.coeff.resize(n);
            s.approx.resize(n);
            s.exact = true;
            for (int j = 0; j < n; ++j) {
                QC c = qc_pow(mu, to_i64(v[j])) * base[j];
                s.approx[j] = CD{to_double(c.re), to_double(c.im)};
                s.coeff[j] = std::move(c);
            }
            starts.push_back(std::move(s));
        }
    }
    for (const auto& s : torus_numeric) {
        std::vector<CD> base(n);
        for (int j = 0; j < n; ++j) {
            CD t{1, 0};
            for (int i = 1; i < n; ++i) t *= cx_pow(s[i - 1], to_i64(U[i][j]));
            base[j] = t;
        }
        numeric_start(base);
    }
    if (starts.empty())
        throw std::runtime_error(
            "no exact rescaling matches the pin value; try pinning a different value");

    std::sort(starts.begin(), starts.end(), [](const BranchStart& a, const BranchStart& b) {
        if (a.exact != b.exact) return a.exact;
        if (a.exact) {
            for (size_t i = 0; i < a.coeff.size(); ++i) {
                const QC& x = *a.coeff[i];
                const QC& y = *b.coeff[i];
                if (x != y) return qc_less(x, y);
            }
            return false;
        }
        return approx_key(a.approx) < approx_key(b.approx);
    });
    starts.erase(std::unique(starts.begin(), starts.end(),
                             [](const BranchStart& a, const BranchStart& b) {
                                 if (a.exact != b.exact) return false;
                                 if (a.exact) {
                                     for (size_t i = 0; i < a.coeff.size(); ++i)
                                         if (*a.coeff[i] != *b.coeff[i]) return false;
                                     return true;
                                 }
                                 return approx_key(a.approx) == approx_key(b.approx);
                             }),
                 starts.end());
    return starts;
}

PuiseuxExpansion extend_series(const PolynomialSystem& sys, const IVec& v_in,
                               const BranchStart& start, int order, int pin_var) {
    const int n = sys.nvars;
    if (static_cast<int>(v_in.size()) != n || ivec_is_zero(v_in))
        throw std::invalid_argument("extend_series: bad direction");
    if (pin_var < 0 || pin_var >= n) throw std::invalid_argument("extend_series: bad pin variable");
    if (static_cast<int>(start.coeff.size()) != n)
        throw std::invalid_argument("extend_series: start has wrong length");
    if (!start.coeff[pin_var])
        throw std::invalid_argument("extend_series: the pinned coordinate needs an exact coefficient");
    if (order < 0) throw std::invalid_argument("extend_series: negative order");
    const IVec v = make_primitive(v_in);
    const int N = order;
    const int q = pin_var;

    std::vector<Polynomial> fs;
    std::vector<int> valuation;
    for (const Polynomial& f : sys.polys) {
        if (f.is_zero()) throw std::invalid_argument("extend_series: zero polynomial in the system");
        if (!f.all_exact()) throw std::invalid_argument("extend_series: system must be exact");
        auto [g, off] = clear_negative(f, v);
        (void)off;
        fs.push_back(std::move(g));
        valuation.push_back(static_cast<int>(to_i64(support_valuation(fs.back(), v))));
    }
    const size_t m = fs.size();

    // Unknown a_(i,k) gets id k*n + i, so elimination pivots prefer the lowest
    // order first.
    auto slot = [n](int k, int i) { return k * n + i; };

    std::vector<Series> x(n);
    const int vq = static_cast<int>(to_i64(v[q]));
    x[q].add(vq, Aff(*start.coeff[q]), INT_MAX);
    std::set<int> needed;
    for (int i = 0; i < n; ++i) {
        if (i == q) continue;
        const int vi = static_cast<int>(to_i64(v[i]));
        if (start.coeff[i]) {
            x[i].add(vi, Aff(*start.coeff[i]), INT_MAX);
        } else {
            x[i].add(vi, Aff::unknown(slot(0, i)), INT_MAX);
            needed.insert(slot(0, i));
        }
    }

    Eliminator el;
    auto substitute_series = [&] {
        for (Series& s : x)
            for (auto it = s.c.begin(); it != s.c.end();) {
                el.substitute_values(it->second);
                if (it->second.is_zero()) it = s.c.erase(it);
                else ++it;
            }
    };

    std::vector<std::pair<size_t, int>> deferred;  // (poly index, absolute exponent)
    const int slack = 8;
    for (int ord = 0; ord <= N + slack; ++ord) {
        if (ord > 0) {
            for (int i = 0; i < n; ++i) {
                if (i == q) continue;
                const int vi = static_cast<int>(to_i64(v[i]));
                x[i].add(vi + ord, Aff::unknown(slot(ord, i)), INT_MAX);
                if (ord <= N) needed.insert(slot(ord, i));
            }
        }
        std::vector<std::pair<size_t, int>> batch = std::move(deferred);
        deferred.clear();
        for (size_t j = 0; j < m; ++j) batch.emplace_back(j, valuation[j] + ord);
        bool progress = true;
        while (progress && !batch.empty()) {
            progress = false;
            std::vector<std::pair<size_t, int>> keep;
            for (const auto& [j, e] : batch) {
                try {
                    Series s = compose(fs[j], x, e);
                    auto it = s.c.find(e);
                    el.add_equation(it == s.c.end() ? Aff() : it->second);
                    substitute_series();
                    progress = true;
                } catch (const PendingProduct&) {
                    keep.emplace_back(j, e);
                }
            }
            batch = std::move(keep);
        }
        deferred = std::move(batch);

        if (ord >= N && deferred.empty()) {
            bool done = true;
            for (int id : needed)
                if (!el.resolved(id)) {
                    done = false;
                    break;
                }
            if (done) break;
        }
    }
    if (!deferred.empty())
        throw std::runtime_error(
            "series expansion is underdetermined: equations keep products of unresolved coefficients");
    for (int id : needed)
        if (!el.resolved(id))
            throw std::runtime_error(
                "series coefficients remain undetermined through the requested order");
    substitute_series();

    PuiseuxExpansion exp;
    exp.tropism = v;
    exp.winding = static_cast<int>(to_i64(v[0]));
    exp.order = N;
    exp.parameter_coord = q;
    exp.coords.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int vi = static_cast<int>(to_i64(v[i]));
        Polynomial p(1);
        for (const auto& [e, a] : x[i].c) {
            if (e > vi + N) continue;
            if (!a.is_const()) throw std::logic_error("unresolved coefficient survived the solve");
            p.add_term(Expt{static_cast<int32_t>(e)}, Coefficient::exact(a.c));
        }
        exp.coords.push_back(std::move(p));
    }
    std::ostringstream nrm;
    nrm << "x" << (q + 1) << " = " << qc_str(*start.coeff[q]) << " * t^" << vq << " exactly";
    exp.normalization = nrm.str();
    return exp;
}

CertifyReport certify(const PolynomialSystem& sys, const PuiseuxExpansion& exp) {
    if (static_cast<int>(exp.coords.size()) != sys.nvars)
        throw std::invalid_argument("certify: coordinate count mismatch");
    CertifyReport rep;
    rep.ok = true;
    for (const Polynomial& f : sys.polys) {
        if (!f.all_exact()) throw std::invalid_argument("certify: system must be exact");
        auto [g, off] = clear_negative(f, exp.tropism);
        const int m_orig = static_cast<int>(to_i64(support_valuation(g, exp.tropism) + off));
        Polynomial r(1);
        for (const auto& [e, c] : g.terms()) {
            Polynomial t = Polynomial::constant(1, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * exp.coords[i].pow(static_cast<unsigned>(e[i]));
            r += t;
        }
        int achieved = INT_MAX;
        if (!r.is_zero()) {
            int lo = INT_MAX;
            for (const auto& [e, c] : r.terms()) lo = std::min(lo, static_cast<int>(e[0]));
            achieved = lo + static_cast<int>(to_i64(off));
        }
        const int required = m_orig + exp.order + 1;
        rep.required.push_back(required);
        rep.achieved.push_back(achieved);
        if (achieved < required) rep.ok = false;
    }
    return rep;
}

std::string sample_csv(const PuiseuxExpansion& exp, const std::vector<double>& ts) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t";
    for (size_t i = 0; i < exp.coords.size(); ++i)
        os << ",x" << (i + 1) << "_re,x" << (i + 1) << "_im";
    os << "\n";
    for (double t : ts) {
        if (t <= 0) throw std::invalid_argument("sample_csv: parameter values must be positive");
        os << t;
        std::vector<CD> arg{CD{t, 0}};
        for (const Polynomial& p : exp.coords) {
            CD z = p.eval(arg);
            os << "," << z.re << "," << z.im;
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json expansion_to_json(const PuiseuxExpansion& exp) {
    auto coeff_json = [](const QC& c) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        if (c.im == 0) {
            const Int nu = numerator(c.re), de = denominator(c.re);
            const Int lim = Int(1) << 53;
            if (nu > -lim && nu < lim && de < lim) {
                a.push_back(nu.convert_to<int64_t>());
                a.push_back(de.convert_to<int64_t>());
            } else {
                std::ostringstream ns, ds;
                ns << nu;
                ds << de;
                a.push_back(ns.str());
                a.push_back(ds.str());
            }
            return a;
        }
        a.push_back(to_double(c.re));
        a.push_back(to_double(c.im));
        return a;
    };

    nlohmann::ordered_json j;
    j["tropism"] = nlohmann::ordered_json::array();
    for (const Int& t : exp.tropism) j["tropism"].push_back(to_i64(t));
    j["winding"] = exp.winding;
    j["coords"] = nlohmann::ordered_json::array();
    for (const Polynomial& p : exp.coords) {
        std::vector<std::pair<int, QC>> terms;
        for (const auto& [e, coef] : p.terms())
            terms.emplace_back(static_cast<int>(e[0]), coef.exact_value());
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& [e, coef] : terms) {
            nlohmann::ordered_json t = nlohmann::ordered_json::array();
            t.push_back(e);
            t.push_back(coeff_json(coef));
            c.push_back(std::move(t));
        }
        j["coords"].push_back(std::move(c));
    }
    j["order"] = exp.order;
    j["parameter"] = "x" + std::to_string(exp.parameter_coord + 1);
    j["normalization"] = exp.normalization;
    return j;
}

}  // namespace scurve

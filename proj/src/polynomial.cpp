#include "scurve/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace scurve {

IVec expt_to_ivec(const Expt& e) {
    IVec v(e.size());
    for (size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    return v;
}

bool GradedLexDesc::operator()(const Expt& a, const Expt& b) const {
    long da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    return a > b;  // lexicographic on equal degree
}

const QC& Coefficient::exact_value() const {
    if (kind != Kind::exact)
        throw std::invalid_argument("numeric coefficient where an exact one is required");
    return q;
}

Coefficient Coefficient::operator-() const {
    Coefficient c = *this;
    if (kind == Kind::exact) c.q = -c.q; else c.z = -c.z;
    return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (kind != o.kind)
        throw std::invalid_argument("mixing exact and numeric coefficients");
    if (kind == Kind::exact) q += o.q; else z += o.z;
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    if (kind != o.kind)
        throw std::invalid_argument("mixing exact and numeric coefficients");
    if (kind == Kind::exact) q *= o.q; else z *= o.z;
    return *this;
}

namespace {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

// Prints the imaginary part with its unit, e.g. "i", "-i", "3/2*i".
std::string imag_str(const Rational& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_str(im) + "*i";
}

}  // namespace

std::string Coefficient::to_string() const {
    if (kind == Kind::numeric) {
        std::ostringstream os;
        os.precision(17);
        if (z.im == 0) { os << z.re; return os.str(); }
        os << "(" << z.re << (z.im < 0 ? "" : "+") << z.im << "*i)";
        return os.str();
    }
    if (q.im == 0) return rational_str(q.re);
    if (q.re == 0) return imag_str(q.im);
    std::string s = "(" + rational_str(q.re);
    if (q.im > 0) s += "+";
    return s + imag_str(q.im) + ")";
}

Polynomial Polynomial::constant(int nvars, Coefficient c) {
    Polynomial p(nvars);
    p.add_term(Expt(nvars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(int nvars, const Expt& e, Coefficient c) {
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Expt& e, const Coefficient& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expt e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(nvars_, Coefficient::exact(QC(1)));
    if (!terms_.empty() && !terms_.begin()->second.is_exact())
        r = constant(nvars_, Coefficient::numeric(CD{1.0, 0.0}));
    Polynomial b = *this;
    while (k) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expt d = e;
        d[var] -= 1;
        Coefficient f = c.is_exact() ? Coefficient::exact(QC(Rational(e[var])))
                                     : Coefficient::numeric(CD{double(e[var]), 0.0});
        r.add_term(d, c * f);
    }
    return r;
}

std::vector<IVec> Polynomial::support() const {
    std::vector<IVec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(expt_to_ivec(e));
    return s;
}

int Polynomial::total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (auto x : e) d += x;
        if (first || d > best) { best = d; first = false; }
    }
    return best;
}

int32_t Polynomial::min_exponent(int var) const {
    int32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) { m = e[var]; first = false; }
    }
    return m;
}

Polynomial Polynomial::shifted(int var, int32_t k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Expt d = e;
        d[var] -= k;
        r.terms_.emplace(d, c);
    }
    return r;
}

Polynomial Polynomial::substitute_const(int var, const QC& value) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Expt d = e;
        d[var] = 0;
        r.add_term(d, Coefficient::exact(c.exact_value() * qc_pow(value, e[var])));
    }
    return r;
}

Polynomial Polynomial::widened(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("cannot narrow a polynomial");
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Expt d = e;
        d.resize(new_nvars, 0);
        r.terms_.emplace(d, c);
    }
    return r;
}

bool Polynomial::all_exact() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_exact()) return false;
    return true;
}

QC qc_pow(const QC& base, int64_t e) {
    QC b = base;
    if (e < 0) {
        b = QC(1) / b;
        e = -e;
    }
    QC r(1);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

QC Polynomial::eval_exact(const std::vector<QC>& x) const {
    QC acc(0);
    for (const auto& [e, c] : terms_) {
        QC t = c.exact_value();
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= qc_pow(x[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    std::vector<std::string> names(nvars_);
    for (int i = 0; i < nvars_; ++i) names[i] = "x" + std::to_string(i + 1);
    return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coefficient cc = c;
        std::string sep = first ? "" : " + ";
        // Fold the sign of real coefficients into the separator.
        bool neg = c.is_exact() ? (c.q.im == 0 && c.q.re < 0) : (c.z.im == 0 && c.z.re < 0);
        if (neg) {
            sep = first ? "-" : " - ";
            cc = -c;
        }
        os << sep;
        bool has_vars = false;
        for (auto x : e)
            if (x != 0) has_vars = true;
        std::string cs = cc.to_string();
        if (!has_vars) {
            os << cs;
        } else {
            bool unit = cc.is_exact() && cc.q == QC(1);
            if (!unit) os << cs << "*";
            bool firstv = true;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!firstv) os << "*";
                firstv = false;
                os << names[i];
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        first = false;
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const Coefficient &a = it->second, &b = jt->second;
        if (a.kind != b.kind) return false;
        if (a.is_exact() ? !(a.q == b.q) : !(a.z == b.z)) return false;
    }
    return true;
}

std::string PolynomialSystem::to_string() const {
    std::ostringstream os;
    for (const auto& p : polys) os << p.to_string() << ";\n";
    return os.str();
}

}  // namespace scurve

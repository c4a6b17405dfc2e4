#include "scurve/homotopy.hpp"

#include "scurve/mixedvol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scurve {

std::vector<CD> durand_kerner(std::vector<CD> coeffs, double tol, int max_iters) {
    while (!coeffs.empty() && std::abs(coeffs.back().re) == 0 && std::abs(coeffs.back().im) == 0)
        coeffs.pop_back();
    if (coeffs.size() < 2) return {};

    std::vector<CD> roots;
    size_t low = 0;
    while (low < coeffs.size() - 1 && coeffs[low].re == 0 && coeffs[low].im == 0) {
        roots.push_back({0.0, 0.0});  // exact zero roots split off up front
        ++low;
    }
    std::vector<CD> c(coeffs.begin() + low, coeffs.end());
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return roots;
    for (auto& v : c) v = v / c[d];

    std::vector<CD> z(d);
    CD seed{0.4, 0.9};
    CD acc{1.0, 0.0};
    for (int k = 0; k < d; ++k) {
        acc *= seed;
        z[k] = acc;
    }
    for (int it = 0; it < max_iters; ++it) {
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            CD p{0.0, 0.0};
            for (int j = d; j >= 0; --j) p = p * z[k] + c[j];
            CD denom{1.0, 0.0};
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom.norm2() < 1e-300) {
                z[k] += CD{1e-6, 2e-6};
                worst = 1.0;
                continue;
            }
            CD delta = p / denom;
            z[k] -= delta;
            worst = std::max(worst, std::sqrt(delta.norm2() / std::max(1.0, z[k].norm2())));
        }
        if (worst < tol) break;
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

namespace {

template <class T>
Cx<T> widen(const CD& z) {
    return {T(z.re), T(z.im)};
}

template <class T>
CD narrow_cd(const Cx<T>& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

template <class T>
double vec_norm_inf(const CVec<T>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, static_cast<double>(cx_abs(z)));
    return m;
}

// Homotopy (1 - tau) * gamma * G + tau * F between compiled square systems.
template <class T>
struct Blend {
    const NumSystem<T>& g;
    const NumSystem<T>& f;
    Cx<T> gamma;

    int dim() const { return f.nvars; }

    void eval(const CVec<T>& y, const T& tau, CVec<T>& out) const {
        CVec<T> gv, fv;
        g.eval(y, gv);
        f.eval(y, fv);
        out.resize(gv.size());
        Cx<T> a = gamma * Cx<T>(T(1) - tau);
        for (size_t i = 0; i < gv.size(); ++i) out[i] = a * gv[i] + Cx<T>(tau) * fv[i];
    }

    void jacobian(const CVec<T>& y, const T& tau, CMat<T>& out) const {
        CMat<T> gj, fj;
        g.eval_jacobian(y, gj);
        f.eval_jacobian(y, fj);
        out = fj;
        Cx<T> a = gamma * Cx<T>(T(1) - tau);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j < out[i].size(); ++j)
                out[i][j] = a * gj[i][j] + Cx<T>(tau) * fj[i][j];
    }

    void dtau(const CVec<T>& y, const T&, CVec<T>& out) const {
        CVec<T> gv, fv;
        g.eval(y, gv);
        f.eval(y, fv);
        out.resize(gv.size());
        for (size_t i = 0; i < gv.size(); ++i) out[i] = fv[i] - gamma * gv[i];
    }
};

// The curve system with x1 pinned to a real segment a + tau * (b - a); the
// tracked unknowns are x2..xn.
template <class T>
struct SliceSegment {
    const NumSystem<T>& f;  // full system, n variables, n-1 equations
    T a, b;

    int dim() const { return f.nvars - 1; }

    CVec<T> full(const CVec<T>& y, const T& tau) const {
        CVec<T> x(f.nvars);
        x[0] = Cx<T>(a + tau * (b - a));
        for (int i = 1; i < f.nvars; ++i) x[i] = y[i - 1];
        return x;
    }

    void eval(const CVec<T>& y, const T& tau, CVec<T>& out) const { f.eval(full(y, tau), out); }

    void jacobian(const CVec<T>& y, const T& tau, CMat<T>& out) const {
        CMat<T> jac;
        f.eval_jacobian(full(y, tau), jac);
        out.assign(jac.size(), CVec<T>(f.nvars - 1, Cx<T>{T(0)}));
        for (size_t i = 0; i < jac.size(); ++i)
            for (int j = 1; j < f.nvars; ++j) out[i][j - 1] = jac[i][j];
    }

    void dtau(const CVec<T>& y, const T& tau, CVec<T>& out) const {
        CMat<T> jac;
        f.eval_jacobian(full(y, tau), jac);
        out.resize(jac.size());
        Cx<T> ds{b - a};
        for (size_t i = 0; i < jac.size(); ++i) out[i] = jac[i][0] * ds;
    }
};

enum class TrackState { ok, diverged, failed, ill_conditioned };

template <class T>
struct TrackOutcome {
    TrackState state = TrackState::failed;
    CVec<T> y;
    double min_rcond = 1.0;
};

template <class T, class Sys>
TrackOutcome<T> track(const Sys& sys, CVec<T> y, const SolverConfig& cfg, double rcond_floor) {
    TrackOutcome<T> out;
    const int m = sys.dim();
    T tau(0), h(0.05);
    int steps = 0;

    CVec<T> hv, ht, delta;
    CMat<T> jac;

    while (static_cast<double>(tau) < 1.0) {
        if (++steps > cfg.max_steps) return out;
        if (tau + h > T(1)) h = T(1) - tau;

        // Euler predictor.
        sys.jacobian(y, tau, jac);
        sys.dtau(y, tau, ht);
        for (auto& z : ht) z = -z;
        CVec<T> ydot;
        bool pred_ok = gauss_solve(jac, ht, ydot);
        CVec<T> ynext = y;
        if (pred_ok)
            for (int i = 0; i < m; ++i) ynext[i] += Cx<T>(h) * ydot[i];

        // Newton corrector at tau + h.  The short leash keeps the corrector
        // from hopping onto a neighboring path when the predictor overshoots;
        // a step that needs more than three iterations is retried smaller.
        T tnew = tau + h;
        bool corrected = false;
        for (int it = 0; it < 3; ++it) {
            sys.eval(ynext, tnew, hv);
            sys.jacobian(ynext, tnew, jac);
            for (auto& z : hv) z = -z;
            if (!gauss_solve(jac, hv, delta)) break;
            for (int i = 0; i < m; ++i) ynext[i] += delta[i];
            double dn = vec_norm_inf(delta);
            double yn = std::max(1.0, vec_norm_inf(ynext));
            if (dn <= cfg.newton_tolerance * yn) {
                corrected = true;
                break;
            }
        }

        if (!corrected) {
            h = h / T(2);
            if (static_cast<double>(h) < 1e-13) {
                // Stalled.  A path stalling with a large solution is headed
                // for infinity; anything else is a genuine failure.
                if (vec_norm_inf(y) > 1e6) out.state = TrackState::diverged;
                out.y = y;
                return out;
            }
            continue;
        }

        tau = tnew;
        y = ynext;
        if (vec_norm_inf(y) > cfg.blowup) {
            out.state = TrackState::diverged;
            out.y = y;
            return out;
        }
        sys.jacobian(y, tau, jac);
        double rc = inverse_condition(jac);
        out.min_rcond = std::min(out.min_rcond, rc);
        if (out.min_rcond < rcond_floor && static_cast<double>(tau) < 1.0) {
            out.state = TrackState::ill_conditioned;
            out.y = y;
            return out;
        }
        h = h * T(2);
        if (h > T(0.1)) h = T(0.1);
    }
    out.state = TrackState::ok;
    out.y = y;
    return out;
}

// Final sharpening with plain Newton on the target system.
template <class T>
bool polish(const NumSystem<T>& f, CVec<T>& y, double tol, int iters) {
    CVec<T> fv, delta;
    CMat<T> jac;
    for (int it = 0; it < iters; ++it) {
        f.eval(y, fv);
        if (vec_norm_inf(fv) <= tol) return true;
        f.eval_jacobian(y, jac);
        for (auto& z : fv) z = -z;
        if (!gauss_solve(jac, fv, delta)) return false;
        for (size_t i = 0; i < y.size(); ++i) y[i] += delta[i];
    }
    f.eval(y, fv);
    return vec_norm_inf(fv) <= tol;
}

PolynomialSystem total_degree_start(const PolynomialSystem& sys, Rng& rng,
                                    std::vector<CD>& rho) {
    PolynomialSystem g;
    g.nvars = sys.nvars;
    rho.clear();
    for (size_t i = 0; i < sys.polys.size(); ++i) {
        int d = sys.polys[i].total_degree();
        if (d < 1) throw std::invalid_argument("constant polynomial in square system");
        CD r = rng.unit_complex();
        rho.push_back(r);
        Polynomial p(sys.nvars);
        Expt e(sys.nvars, 0);
        e[i] = d;
        p.add_term(e, Coefficient::numeric(CD{1.0, 0.0}));
        p.add_term(Expt(sys.nvars, 0), Coefficient::numeric(-r));
        g.polys.push_back(std::move(p));
    }
    return g;
}

struct StartGrid {
    std::vector<int> degrees;
    std::vector<double> theta;  // phase of rho_i
    long total = 1;

    std::vector<CD> point(long index) const {
        std::vector<CD> y(degrees.size());
        long rem = index;
        for (size_t i = 0; i < degrees.size(); ++i) {
            int k = static_cast<int>(rem % degrees[i]);
            rem /= degrees[i];
            double ang = (theta[i] + 6.283185307179586 * k) / degrees[i];
            y[i] = {std::cos(ang), std::sin(ang)};
        }
        return y;
    }
};

template <class T>
TrackOutcome<T> run_blend(const PolynomialSystem& sys, const PolynomialSystem& start,
                          CD gamma, const std::vector<CD>& y0, const SolverConfig& cfg,
                          double rcond_floor) {
    NumSystem<T> f = NumSystem<T>::compile(sys);
    NumSystem<T> g = NumSystem<T>::compile(start);
    Blend<T> blend{g, f, widen<T>(gamma)};
    CVec<T> y(y0.size());
    for (size_t i = 0; i < y0.size(); ++i) y[i] = widen<T>(y0[i]);
    TrackOutcome<T> out = track(blend, std::move(y), cfg, rcond_floor);
    if (out.state == TrackState::ok && !polish(f, out.y, cfg.newton_tolerance * 10, 6))
        out.state = TrackState::failed;
    return out;
}

}  // namespace

SquareSolveResult solve_square(const PolynomialSystem& sys, const SolverConfig& cfg) {
    const int m = sys.nvars;
    if (static_cast<int>(sys.polys.size()) != m)
        throw std::invalid_argument("square solve needs as many polynomials as variables");
    for (const auto& p : sys.polys)
        for (const auto& [e, c] : p.terms())
            for (auto x : e)
                if (x < 0) throw std::invalid_argument("negative exponent in square solve");

    Rng rng(cfg.seed);
    CD gamma = rng.unit_complex();
    std::vector<CD> rho;
    PolynomialSystem start = total_degree_start(sys, rng, rho);

    StartGrid grid;
    for (const auto& p : sys.polys) grid.degrees.push_back(p.total_degree());
    for (const auto& r : rho) grid.theta.push_back(std::atan2(r.im, r.re));
    for (int d : grid.degrees) {
        grid.total *= d;
        if (grid.total > 200000) throw std::invalid_argument("start system too large");
    }

    SquareSolveResult res;
    res.paths = static_cast<int>(grid.total);
    for (long p = 0; p < grid.total; ++p) {
        std::vector<CD> y0 = grid.point(p);
        auto od = run_blend<double>(sys, start, gamma, y0, cfg, cfg.escalate_128);
        if (od.state == TrackState::ok) {
            res.solutions.push_back(od.y);
            continue;
        }
        if (od.state == TrackState::diverged) {
            ++res.diverged;
            continue;
        }
        ++res.escalations;
        auto o1 = run_blend<F128>(sys, start, gamma, y0, cfg, cfg.escalate_256);
        if (o1.state == TrackState::ok) {
            std::vector<CD> sol(o1.y.size());
            for (size_t i = 0; i < o1.y.size(); ++i) sol[i] = narrow_cd(o1.y[i]);
            res.solutions.push_back(std::move(sol));
            continue;
        }
        if (o1.state == TrackState::diverged) {
            ++res.diverged;
            continue;
        }
        ++res.escalations;
        auto o2 = run_blend<F256>(sys, start, gamma, y0, cfg, 0.0);
        if (o2.state == TrackState::ok) {
            std::vector<CD> sol(o2.y.size());
            for (size_t i = 0; i < o2.y.size(); ++i) sol[i] = narrow_cd(o2.y[i]);
            res.solutions.push_back(std::move(sol));
        } else if (o2.state == TrackState::diverged) {
            ++res.diverged;
        } else {
            ++res.failed;
        }
    }

    // Keep each isolated solution once: a path headed for infinity sometimes
    // slides into the basin of a root another path already reached.
    std::vector<std::vector<CD>> uniq;
    for (auto& y : res.solutions) {
        bool dup = false;
        for (const auto& u : uniq) {
            double dist = 0.0, scale = 1.0;
            for (size_t i = 0; i < y.size(); ++i) {
                dist = std::max(dist, std::sqrt((y[i] - u[i]).norm2()));
                scale = std::max(scale, std::sqrt(u[i].norm2()));
            }
            if (dist < 1e-8 * scale) {
                dup = true;
                break;
            }
        }
        if (!dup) uniq.push_back(std::move(y));
    }
    res.solutions = std::move(uniq);
    return res;
}

PolynomialSystem slice_system(const PolynomialSystem& sys, CD gamma) {
    if (sys.nvars < 2) throw std::invalid_argument("need at least two variables to slice");
    PolynomialSystem out;
    out.nvars = sys.nvars - 1;
    for (const auto& p : sys.polys) {
        Polynomial q(out.nvars);
        for (const auto& [e, c] : p.terms()) {
            CD z = c.to_cd();
            if (e[0] != 0) {
                CD g = cx_pow(gamma, e[0]);
                z *= g;
            }
            Expt d(e.begin() + 1, e.end());
            q.add_term(d, Coefficient::numeric(z));
        }
        out.polys.push_back(std::move(q));
    }
    return out;
}

std::vector<std::vector<CD>> solve_slice(const PolynomialSystem& sys, CD gamma,
                                         const SolverConfig& cfg) {
    PolynomialSystem sliced = slice_system(sys, gamma);
    SquareSolveResult sq = solve_square(sliced, cfg);
    std::vector<std::vector<CD>> out;
    for (const auto& y : sq.solutions) {
        bool torus = true;
        for (const auto& z : y)
            if (std::sqrt(z.norm2()) < 1e-8) torus = false;
        if (!torus) continue;
        std::vector<CD> x;
        x.reserve(sys.nvars);
        x.push_back(gamma);
        x.insert(x.end(), y.begin(), y.end());
        out.push_back(std::move(x));
    }
    return out;
}

WindingEstimate estimate_winding(const std::vector<std::vector<double>>& abs_samples,
                                 double ratio, int max_winding, double agree_tol) {
    WindingEstimate est;
    if (abs_samples.size() < 6) return est;
    const size_t n = abs_samples[0].size();
    const double logr = std::log(ratio);

    std::vector<std::vector<double>> slope(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k + 1 < abs_samples.size(); ++k) {
            double a = abs_samples[k][i], b = abs_samples[k + 1][i];
            if (a < 1e-280 || b < 1e-280) return est;  // coordinate collapsed to zero
            slope[i].push_back((std::log(b) - std::log(a)) / logr);
        }
    }

    // Aitken delta-squared acceleration of each slope sequence.
    std::vector<std::vector<double>> acc(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& a = slope[i];
        for (size_t k = 0; k + 2 < a.size(); ++k) {
            double d2 = a[k + 2] - 2 * a[k + 1] + a[k];
            double d1 = a[k + 1] - a[k];
            acc[i].push_back(std::abs(d2) < 1e-12 ? a[k + 2] : a[k] - d1 * d1 / d2);
        }
    }

    est.slopes.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& v = acc[i];
        if (v.size() < 3) return est;
        double x2 = v[v.size() - 1], x1 = v[v.size() - 2], x0 = v[v.size() - 3];
        if (std::abs(x2 - x1) > agree_tol || std::abs(x1 - x0) > agree_tol) return est;
        est.slopes[i] = x2;
    }

    long lcd = 1;
    est.exponents.resize(n);
    for (size_t i = 0; i < n; ++i) {
        auto q = rationalize(est.slopes[i], max_winding);
        if (!q || std::abs(est.slopes[i] - to_double(*q)) > agree_tol) return est;
        est.exponents[i] = *q;
        long den = static_cast<long>(denominator(*q).convert_to<long long>());
        lcd = lcd / std::gcd(lcd, den) * den;
    }
    if (lcd > max_winding) return est;
    est.winding = static_cast<int>(lcd);
    est.settled = true;
    return est;
}

namespace {

// One rung of the sample ladder: continue the path from x1 = a to x1 = b.
// Falls back to higher precision when the double track stalls.
bool track_segment(const PolynomialSystem& sys, std::vector<CD>& x, double a, double b,
                   const SolverConfig& cfg, bool& diverged, int& escalations) {
    // Recompiled per call; systems are small and this keeps the helper stateless.
    NumSystem<double> f = NumSystem<double>::compile(sys);
    SliceSegment<double> seg{f, a, b};
    CVec<double> y(x.begin() + 1, x.end());
    auto od = track(seg, y, cfg, cfg.escalate_128);
    if (od.state == TrackState::ok) {
        x[0] = {b, 0.0};
        for (size_t i = 0; i + 1 < x.size(); ++i) x[i + 1] = od.y[i];
        return true;
    }
    if (od.state == TrackState::diverged) {
        diverged = true;
        return false;
    }
    ++escalations;
    NumSystem<F128> f1 = NumSystem<F128>::compile(sys);
    SliceSegment<F128> seg1{f1, F128(a), F128(b)};
    CVec<F128> y1(x.size() - 1);
    for (size_t i = 0; i + 1 < x.size(); ++i) y1[i] = widen<F128>(x[i + 1]);
    auto o1 = track(seg1, y1, cfg, cfg.escalate_256);
    if (o1.state == TrackState::ok) {
        x[0] = {b, 0.0};
        for (size_t i = 0; i + 1 < x.size(); ++i) x[i + 1] = narrow_cd(o1.y[i]);
        return true;
    }
    if (o1.state == TrackState::diverged) {
        diverged = true;
        return false;
    }
    ++escalations;
    NumSystem<F256> f2 = NumSystem<F256>::compile(sys);
    SliceSegment<F256> seg2{f2, F256(a), F256(b)};
    CVec<F256> y2(x.size() - 1);
    for (size_t i = 0; i + 1 < x.size(); ++i) y2[i] = widen<F256>(x[i + 1]);
    auto o2 = track(seg2, y2, cfg, 0.0);
    if (o2.state == TrackState::ok) {
        x[0] = {b, 0.0};
        for (size_t i = 0; i + 1 < x.size(); ++i) x[i + 1] = narrow_cd(o2.y[i]);
        return true;
    }
    diverged = o2.state == TrackState::diverged;
    return false;
}

}  // namespace

CurveRun run_curve(const PolynomialSystem& sys, const SolverConfig& cfg) {
    const int n = sys.nvars;
    if (static_cast<int>(sys.polys.size()) != n - 1)
        throw std::invalid_argument("expected n-1 polynomials in n variables");

    CurveRun run;
    auto points = solve_slice(sys, CD{cfg.s0, 0.0}, cfg);
    run.slice_count = static_cast<long>(points.size());

    {
        // Cross-checks: a second slice at a random complex height must agree,
        // and for small systems the polyhedral count is exact.
        Rng rng(cfg.seed + 1);
        CD g2 = CD{cfg.s0, 0.0} * rng.unit_complex();
        auto points2 = solve_slice(sys, g2, cfg);
        if (points2.size() != points.size()) {
            std::ostringstream os;
            os << "slice counts disagree between heights (" << points.size() << " vs "
               << points2.size() << "); coordinates may be non-generic";
            run.warnings.push_back(os.str());
        }
        if (n <= 5) {
            Int bound = degree_bound(sys);
            if (bound != Int(static_cast<long>(points.size()))) {
                std::ostringstream os;
                os << "slice count " << points.size() << " differs from the polyhedral degree "
                   << bound << "; some branches may be missing";
                run.warnings.push_back(os.str());
            }
        }
    }

    for (auto& start : points) {
        PathResult pr;
        std::vector<CD> x = start;
        std::vector<std::vector<double>> abs_samples;
        auto record = [&]() {
            std::vector<double> row(n);
            for (int i = 0; i < n; ++i) row[i] = std::sqrt(x[i].norm2());
            abs_samples.push_back(std::move(row));
        };
        record();

        WindingEstimate est;
        double s_prev = cfg.s0;
        bool dead = false;
        int escal = 0;
        for (int k = 1; k <= cfg.max_samples; ++k) {
            double s_next = cfg.s0 * std::pow(cfg.ratio, k);
            bool diverged = false;
            if (!track_segment(sys, x, s_prev, s_next, cfg, diverged, escal)) {
                pr.status = diverged ? PathResult::Status::diverged
                                     : PathResult::Status::inconclusive;
                pr.note = diverged ? "coordinates blew up during tracking"
                                   : "path tracking stalled";
                dead = true;
                break;
            }
            s_prev = s_next;
            record();
            pr.samples_used = k;
            est = estimate_winding(abs_samples, cfg.ratio, cfg.max_winding,
                                   cfg.slope_agree_tol);
            if (est.settled) break;
        }
        if (!dead) {
            if (est.settled) {
                pr.status = PathResult::Status::converged;
                pr.winding = est.winding;
                IVec trop(n);
                for (int i = 0; i < n; ++i) {
                    Rational w = est.exponents[i] * est.winding;
                    if (denominator(w) != 1)
                        throw std::logic_error("winding does not clear slope denominators");
                    trop[i] = Int(numerator(w));
                }
                IVec prim = make_primitive(trop);
                if (prim != trop)
                    pr.note = "slope vector needed rescaling";
                pr.tropism = prim;
                pr.winding = static_cast<int>(prim[0].convert_to<long>());
                pr.leading.resize(n);
                for (int i = 0; i < n; ++i) {
                    double sc = std::pow(s_prev, est.slopes[i]);
                    pr.leading[i] = {x[i].re / sc, x[i].im / sc};
                }
            } else {
                pr.status = PathResult::Status::inconclusive;
                pr.note = "slopes did not settle within the sample budget";
            }
        }
        run.paths.push_back(std::move(pr));
    }
    return run;
}

nlohmann::ordered_json curve_run_to_json(const CurveRun& run) {
    nlohmann::ordered_json j;
    j["slice_count"] = run.slice_count.convert_to<long long>();
    j["paths"] = nlohmann::ordered_json::array();
    std::map<std::string, std::pair<nlohmann::ordered_json, int>> groups;
    for (const auto& p : run.paths) {
        nlohmann::ordered_json jp;
        switch (p.status) {
            case PathResult::Status::converged: jp["status"] = "converged"; break;
            case PathResult::Status::diverged: jp["status"] = "diverged"; break;
            case PathResult::Status::inconclusive: jp["status"] = "inconclusive"; break;
        }
        if (p.status == PathResult::Status::converged) {
            jp["tropism"] = nlohmann::ordered_json::array();
            for (const auto& v : p.tropism) jp["tropism"].push_back(v.convert_to<long long>());
            jp["winding"] = p.winding;
            jp["leading"] = nlohmann::ordered_json::array();
            for (const auto& z : p.leading)
                jp["leading"].push_back({z.re, z.im});
            std::string key = ivec_str(p.tropism) + "@" + std::to_string(p.winding);
            if (!groups.count(key)) {
                nlohmann::ordered_json g;
                g["tropism"] = jp["tropism"];
                g["winding"] = p.winding;
                g["count"] = 0;
                groups.emplace(key, std::make_pair(std::move(g), 0));
            }
            groups[key].second += 1;
        }
        jp["samples"] = p.samples_used;
        if (!p.note.empty()) jp["note"] = p.note;
        j["paths"].push_back(std::move(jp));
    }
    j["groups"] = nlohmann::ordered_json::array();
    for (auto& [key, g] : groups) {
        g.first["count"] = g.second;
        j["groups"].push_back(std::move(g.first));
    }
    j["warnings"] = run.warnings;
    return j;
}

}  // namespace scurve

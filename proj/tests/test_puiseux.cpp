#include "scurve/parser.hpp"
#include "scurve/puiseux.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace scurve;

namespace {

PolynomialSystem load_fixture(const char* name) {
    return load_system_file(std::string(SCURVE_FIXTURE_DIR "/") + name);
}

// Coefficient of t^e, zero when absent.
QC coeff_at(const Polynomial& p, int e) {
    for (const auto& [expt, c] : p.terms())
        if (expt[0] == e) return c.exact_value();
    return QC(0);
}

const PuiseuxExpansion& branch_with_leading(const std::vector<PuiseuxExpansion>& exps,
                                            int e2, const QC& w2, int e3, const QC& w3) {
    for (const auto& e : exps)
        if (coeff_at(e.coords[1], e2) == w2 && coeff_at(e.coords[2], e3) == w3) return e;
    REQUIRE(false);
    return exps.front();
}

// The start whose x2 coefficient matches and whose x3 sign is positive,
// so rescaled runs pick corresponding branches.
const BranchStart& branch_start_with(const std::vector<BranchStart>& v, const QC& x2) {
    for (const auto& s : v)
        if (s.exact && *s.coeff[1] == x2 && s.coeff[2]->re > 0) return s;
    REQUIRE(false);
    return v.front();
}

}  // namespace

TEST_CASE("gaussian roots enumerate exact radicals") {
    CHECK(gaussian_roots(QC(4), 2) == std::vector<QC>{QC(-2), QC(2)});
    CHECK(gaussian_roots(QC(2), 2).empty());
    CHECK(gaussian_roots(QC(-4), 2) ==
          std::vector<QC>{QC(Rational(0), Rational(-2)), QC(Rational(0), Rational(2))});
    CHECK(gaussian_roots(QC(8), 3) == std::vector<QC>{QC(2)});
    CHECK(gaussian_roots(QC(-8), 3) == std::vector<QC>{QC(-2)});
    CHECK(gaussian_roots(QC(16), 4).size() == 4);
    CHECK(gaussian_roots(QC(Rational(1, 4)), 2) ==
          std::vector<QC>{QC(Rational(-1, 2)), QC(Rational(1, 2))});
    // 2i = (1+i)^2.
    std::vector<QC> r = gaussian_roots(QC(Rational(0), Rational(2)), 2);
    REQUIRE(r.size() == 2);
    CHECK(std::find(r.begin(), r.end(), QC(Rational(1), Rational(1))) != r.end());
    // 27i has the single fourth-unit-multiple cube root -3i.
    CHECK(gaussian_roots(QC(Rational(0), Rational(27)), 3) ==
          std::vector<QC>{QC(Rational(0), Rational(-3))});
    for (const QC& mu : gaussian_roots(QC(Rational(-4, 9)), 2)) CHECK(mu * mu == QC(Rational(-4, 9)));
}

TEST_CASE("viviani leading terms at the pretropism are exact") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    std::vector<BranchStart> starts = leading_terms(viv, {2, 1, 0}, 0, QC(2));
    REQUIRE(starts.size() == 4);
    std::set<std::pair<Rational, Rational>> seen;
    for (const BranchStart& s : starts) {
        REQUIRE(s.exact);
        CHECK(*s.coeff[0] == QC(2));
        seen.insert({s.coeff[1]->re, s.coeff[2]->re});
        CHECK(s.coeff[1]->im == 0);
        CHECK(s.coeff[2]->im == 0);
    }
    std::set<std::pair<Rational, Rational>> want{
        {Rational(2), Rational(2)},
        {Rational(2), Rational(-2)},
        {Rational(-2), Rational(2)},
        {Rational(-2), Rational(-2)},
    };
    CHECK(seen == want);
}

TEST_CASE("irrational pins fall back to numeric leading terms") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    std::vector<BranchStart> starts = leading_terms(viv, {2, 1, 0}, 0, QC(1));
    REQUIRE(!starts.empty());
    const double s2 = std::sqrt(2.0);
    for (const BranchStart& s : starts) {
        CHECK(!s.exact);
        CHECK(std::abs(s.approx[0].re - 1) < 1e-9);
        CHECK(std::abs(s.approx[0].im) < 1e-9);
        CHECK(std::abs(std::abs(s.approx[1].re) - s2) < 1e-7);
        CHECK(std::abs(std::abs(s.approx[2].re) - 2) < 1e-7);
    }
}

TEST_CASE("viviani series matches its closed form through order nine") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    std::vector<BranchStart> starts = leading_terms(viv, {2, 1, 0}, 0, QC(2));
    std::vector<PuiseuxExpansion> exps;
    for (const BranchStart& s : starts) exps.push_back(extend_series(viv, {2, 1, 0}, s, 9, 0));

    // x1 = 2t^2, x2 = 2t - t^3 - (1/4)t^5 - (1/8)t^7 - (5/64)t^9,
    // x3 = 2 - t^2 - (1/4)t^4 - (1/8)t^6 - (5/64)t^8 on the branch with
    // positive leading signs; from x2 = 2t*sqrt(1-t^2), x3 = 2*sqrt(1-t^2).
    const PuiseuxExpansion& e = branch_with_leading(exps, 1, QC(2), 0, QC(2));
    CHECK(e.winding == 2);
    CHECK(e.parameter_coord == 0);
    CHECK(coeff_at(e.coords[0], 2) == QC(2));
    CHECK(e.coords[0].term_count() == 1);

    CHECK(coeff_at(e.coords[1], 1) == QC(2));
    CHECK(coeff_at(e.coords[1], 3) == QC(-1));
    CHECK(coeff_at(e.coords[1], 5) == QC(Rational(-1, 4)));
    CHECK(coeff_at(e.coords[1], 7) == QC(Rational(-1, 8)));
    CHECK(coeff_at(e.coords[1], 9) == QC(Rational(-5, 64)));
    for (const auto& [expt, c] : e.coords[1].terms()) CHECK(expt[0] % 2 == 1);

    CHECK(coeff_at(e.coords[2], 0) == QC(2));
    CHECK(coeff_at(e.coords[2], 2) == QC(-1));
    CHECK(coeff_at(e.coords[2], 4) == QC(Rational(-1, 4)));
    CHECK(coeff_at(e.coords[2], 6) == QC(Rational(-1, 8)));
    CHECK(coeff_at(e.coords[2], 8) == QC(Rational(-5, 64)));

    for (const PuiseuxExpansion& x : exps) {
        CertifyReport rep = certify(viv, x);
        CHECK(rep.ok);
        for (size_t j = 0; j < rep.required.size(); ++j)
            CHECK(rep.achieved[j] >= rep.required[j]);
    }
}

TEST_CASE("rescaling the pin rescales every coefficient consistently") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    auto s2 = leading_terms(viv, {2, 1, 0}, 0, QC(2));
    auto s8 = leading_terms(viv, {2, 1, 0}, 0, QC(8));
    REQUIRE(s2.size() == s8.size());
    PuiseuxExpansion a = extend_series(viv, {2, 1, 0}, branch_start_with(s2, QC(2)), 5, 0);
    PuiseuxExpansion b = extend_series(viv, {2, 1, 0}, branch_start_with(s8, QC(4)), 5, 0);
    // b(t) = a(2t): coefficient at t^e scales by 2^e.
    for (int i = 0; i < 3; ++i)
        for (const auto& [expt, c] : a.coords[i].terms()) {
            QC scale = qc_pow(QC(2), expt[0]);
            CHECK(coeff_at(b.coords[i], expt[0]) == c.exact_value() * scale);
        }
}

TEST_CASE("the shifted viviani expansion matches the closed-form parametrization") {
    // x2 = -2t*sqrt(1-t^2) expands to -2t + t^3 + (1/4)t^5 + (1/8)t^7 + (5/64)t^9.
    PolynomialSystem eq2 = load_fixture("eq2.pol");
    std::vector<BranchStart> starts = leading_terms(eq2, {2, 1, 1}, 0, QC(-2));
    REQUIRE(starts.size() == 4);
    std::vector<PuiseuxExpansion> exps;
    for (const BranchStart& s : starts) exps.push_back(extend_series(eq2, {2, 1, 1}, s, 9, 0));
    bool found = false;
    for (const PuiseuxExpansion& e : exps) {
        if (coeff_at(e.coords[1], 1) != QC(-2) || coeff_at(e.coords[2], 1) != QC(-2)) continue;
        found = true;
        CHECK(coeff_at(e.coords[0], 2) == QC(-2));
        CHECK(coeff_at(e.coords[1], 3) == QC(1));
        CHECK(coeff_at(e.coords[1], 5) == QC(Rational(1, 4)));
        CHECK(coeff_at(e.coords[1], 7) == QC(Rational(1, 8)));
        CHECK(coeff_at(e.coords[1], 9) == QC(Rational(5, 64)));
        CHECK(e.coords[2].term_count() == 1);  // x3 = -2t exactly
        CHECK(certify(eq2, e).ok);
    }
    CHECK(found);
}

TEST_CASE("a hidden tropism direction reports no torus solutions") {
    PolynomialSystem eq4 = load_fixture("eq4.pol");
    CHECK_THROWS_AS(leading_terms(eq4, {2, 1, 1}, 1, QC(1)), NoTorusSolutions);
    PolynomialSystem eq7 = load_fixture("eq7n4.pol");
    CHECK_THROWS_AS(leading_terms(eq7, {1, 1, 1, 1}, 0, QC(1)), NoTorusSolutions);
}

TEST_CASE("degenerate initial systems are refused with their own error") {
    PolynomialSystem eq5 = load_fixture("eq5.pol");
    CHECK_THROWS_AS(leading_terms(eq5, {3, 1, 1}, 1, QC(1)), DegenerateInitialSystem);
}

TEST_CASE("order-by-order recovery pins down the true-tropism branch") {
    PolynomialSystem eq5 = load_fixture("eq5.pol");
    BranchStart st;
    st.coeff.assign(3, std::nullopt);
    st.coeff[1] = QC(1);
    PuiseuxExpansion e = extend_series(eq5, {3, 1, 1}, st, 6, 1);
    CHECK(e.winding == 3);
    // Hand cascade with x2 = t: the valuation-1 rows force x3 = -t + ..., then
    // f2 at t^2 gives b1 = 1/2, f1 at t^3 gives a0 = -1/2, f3 at t^3 gives
    // b2 = -1.
    CHECK(coeff_at(e.coords[0], 3) == QC(Rational(-1, 2)));
    for (const auto& [expt, c] : e.coords[0].terms()) CHECK(expt[0] >= 3);
    CHECK(coeff_at(e.coords[1], 1) == QC(1));
    CHECK(coeff_at(e.coords[2], 1) == QC(-1));
    CHECK(coeff_at(e.coords[2], 2) == QC(Rational(1, 2)));
    CHECK(coeff_at(e.coords[2], 3) == QC(-1));
    CHECK(certify(eq5, e).ok);

    // The two-polynomial presentation leaves only the quadratic initial form
    // -x2*x3 - x3^2, so every equation couples products of unknowns and the
    // linear recovery must refuse rather than guess.
    PolynomialSystem eq4 = load_fixture("eq4.pol");
    CHECK_THROWS_AS(extend_series(eq4, {3, 1, 1}, st, 6, 1), std::runtime_error);

    // The certified series from the richer presentation still satisfies the
    // two-polynomial system: same curve.
    CHECK(certify(eq4, e).ok);
}

TEST_CASE("certification rejects printed coefficients that are off the curve") {
    PolynomialSystem eq5 = load_fixture("eq5.pol");
    PuiseuxExpansion claimed;
    claimed.tropism = {3, 1, 1};
    claimed.winding = 3;
    claimed.order = 5;
    claimed.parameter_coord = 1;
    claimed.coords = {
        parse_polynomial("108*x1^3"),
        parse_polynomial("x1 - 3*x1^2 - 15*x1^3 + 27*x1^4 + 36*x1^5"),
        parse_polynomial("-x1 - 3*x1^3 - 18*x1^4 + 18*x1^5 + 162*x1^6"),
    };
    CertifyReport rep = certify(eq5, claimed);
    CHECK(!rep.ok);
}

TEST_CASE("sampling evaluates the expansion on a positive grid") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    std::vector<BranchStart> starts = leading_terms(viv, {2, 1, 0}, 0, QC(2));
    PuiseuxExpansion e = extend_series(viv, {2, 1, 0}, starts.front(), 9, 0);
    std::string csv = sample_csv(e, {0.1, 0.2});
    CHECK(csv.rfind("t,x1_re,x1_im,x2_re,x2_im,x3_re,x3_im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    // Sampled points nearly satisfy the system at small t.
    std::vector<CD> x;
    std::vector<CD> arg{CD{0.1, 0}};
    for (const Polynomial& c : e.coords) x.push_back(c.eval(arg));
    for (const Polynomial& f : viv.polys) CHECK(std::sqrt(f.eval(x).norm2()) < 1e-9);
    CHECK_THROWS(sample_csv(e, {0.0}));
}

TEST_CASE("expansions serialize exponent-coefficient pairs") {
    PolynomialSystem viv = load_fixture("viviani.pol");
    std::vector<BranchStart> starts = leading_terms(viv, {2, 1, 0}, 0, QC(2));
    PuiseuxExpansion e = extend_series(viv, {2, 1, 0}, starts.front(), 3, 0);
    nlohmann::ordered_json j = expansion_to_json(e);
    CHECK(j["tropism"] == nlohmann::ordered_json::array({2, 1, 0}));
    CHECK(j["winding"] == 2);
    CHECK(j["order"] == 3);
    REQUIRE(j["coords"].size() == 3);
    // x1 = 2t^2 is the single pair [2, [2, 1]].
    CHECK(j["coords"][0].size() == 1);
    CHECK(j["coords"][0][0][0] == 2);
    CHECK(j["coords"][0][0][1] == nlohmann::ordered_json::array({2, 1}));
}

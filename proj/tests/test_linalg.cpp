#include "scurve/linalg.hpp"
#include "scurve/lp.hpp"
#include "scurve/numeric.hpp"

#include <doctest.h>

using namespace scurve;

namespace {

int ri(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.unit() * (hi - lo + 1e-9));
}

QMat random_qmat(Rng& rng, int rows, int cols, int span) {
    QMat m(rows, QVec(cols));
    for (auto& r : m)
        for (auto& x : r) x = Rational(ri(rng, -span, span));
    return m;
}

QMat qmul(const QMat& a, const QMat& b) {
    QMat c(a.size(), QVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

TEST_CASE("rref is idempotent and reports the rank") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = ri(rng, 1, 5), cols = ri(rng, 1, 5);
        QMat m = random_qmat(rng, rows, cols, 4);
        QMat once = m;
        std::vector<int> piv;
        int r1 = rref(once, &piv);
        QMat twice = once;
        int r2 = rref(twice);
        CHECK(r1 == r2);
        CHECK(once == twice);
        CHECK(static_cast<int>(piv.size()) == r1);
        CHECK(r1 <= std::min(rows, cols));
    }
}

TEST_CASE("kernel basis vectors annihilate the matrix") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = ri(rng, 1, 4), cols = ri(rng, 1, 5);
        QMat m = random_qmat(rng, rows, cols, 3);
        int r = rank(m);
        QMat k = kernel_basis(m, cols);
        CHECK(static_cast<int>(k.size()) == cols - r);
        for (const QVec& v : k)
            for (const QVec& row : m) {
                Rational dot = 0;
                for (int j = 0; j < cols; ++j) dot += row[j] * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("solve_linear returns a residual-free solution exactly when consistent") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = ri(rng, 1, 4), cols = ri(rng, 1, 4);
        QMat a = random_qmat(rng, rows, cols, 3);
        QVec x0(cols);
        for (auto& x : x0) x = Rational(ri(rng, -3, 3));
        QVec b(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) b[i] += a[i][j] * x0[j];
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        for (int i = 0; i < rows; ++i) {
            Rational s = 0;
            for (int j = 0; j < cols; ++j) s += a[i][j] * (*sol)[j];
            CHECK(s == b[i]);
        }
    }
    // x + y = 0 and x + y = 1 cannot both hold.
    QMat a{{1, 1}, {1, 1}};
    CHECK(!solve_linear(a, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("determinant is multiplicative and detects singularity") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        int n = ri(rng, 1, 4);
        QMat a = random_qmat(rng, n, n, 3), b = random_qmat(rng, n, n, 3);
        CHECK(det(qmul(a, b)) == det(a) * det(b));
        auto inv = inverse(a);
        if (det(a) == 0) {
            CHECK(!inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            QMat prod = qmul(a, *inv);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(prod[i][j] == Rational(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("primitive_from_rational clears denominators to a content-one vector") {
    QVec v{Rational(1, 2), Rational(-3, 4), Rational(0)};
    CHECK(primitive_from_rational(v) == IVec{2, -3, 0});
    CHECK(primitive_from_rational({Rational(0), Rational(0)}) == IVec{0, 0});
    CHECK(primitive_from_rational({Rational(-4), Rational(-6)}) == IVec{-2, -3});
}

TEST_CASE("integer rowspace and kernel are canonical and orthogonal") {
    IMat rows{{2, 4, 6}, {1, 2, 3}, {0, 0, 2}};
    IMat rs = rowspace_canonical(rows);
    CHECK(rs.size() == 2);
    IMat ker = kernel_primitive(rows, 3);
    REQUIRE(ker.size() == 1);
    for (const IVec& k : ker)
        for (const IVec& r : rows) CHECK(ivec_dot(k, r) == 0);
    // Scaling the input does not change either basis.
    IMat scaled{{4, 8, 12}, {3, 6, 9}, {0, 0, 6}};
    CHECK(rowspace_canonical(scaled) == rs);
    CHECK(kernel_primitive(scaled, 3) == ker);
}

TEST_CASE("unimodular_inverse round-trips") {
    IMat u{{1, 2, 0}, {0, 1, 3}, {0, 0, 1}};
    IMat v = unimodular_inverse(u);
    IMat id = imat_mul(u, v);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id[i][j] == Int(i == j ? 1 : 0));
    CHECK(det_int(u) == 1);
}

TEST_CASE("solve_qc handles complex right-hand sides exactly") {
    // (1+i) x = 2i has the solution x = 1+i.
    std::vector<std::vector<QC>> a{{QC(Rational(1), Rational(1))}};
    std::vector<QC> b{QC(Rational(0), Rational(2))};
    auto x = solve_qc(a, b);
    CHECK(x[0] == QC(Rational(1), Rational(1)));

    std::vector<std::vector<QC>> sing{{QC(1), QC(1)}, {QC(2), QC(2)}};
    CHECK_THROWS(solve_qc(sing, {QC(1), QC(1)}));
}

TEST_CASE("lp_solve maximizes and classifies feasibility") {
    // max x + y s.t. x + 2y <= 4, x <= 2 has optimum 3 at (2, 1).
    LinearProgram lp(2);
    lp.c = {Rational(1), Rational(1)};
    lp.add({Rational(1), Rational(2)}, Rel::le, 4);
    lp.add({Rational(1), Rational(0)}, Rel::le, 2);
    LPResult res = lp_solve(lp);
    REQUIRE(res.status == LPStatus::optimal);
    CHECK(res.value == 3);
    CHECK(res.x[0] == 2);
    CHECK(res.x[1] == 1);

    LinearProgram infeas(1);
    infeas.add({Rational(1)}, Rel::le, -1);
    CHECK(!lp_feasible(infeas));

    LinearProgram unb(1);
    unb.c = {Rational(1)};
    unb.add({Rational(-1)}, Rel::le, 0);
    CHECK(lp_solve(unb).status == LPStatus::unbounded);
}

#include "scurve/geometry.hpp"
#include "scurve/numeric.hpp"
#include "scurve/parser.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace scurve;

namespace {

int ri(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.unit() * (hi - lo + 1e-9));
}

IVec random_primitive(Rng& rng, int n) {
    while (true) {
        IVec v(n);
        for (auto& x : v) x = ri(rng, -5, 5);
        if (!ivec_is_zero(v)) return make_primitive(v);
    }
}

}  // namespace

TEST_CASE("polytope_from_points keeps only extreme points") {
    // Unit square plus its center and a duplicate corner.
    std::vector<IVec> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}};
    LatticePolytope p = polytope_from_points(2, pts);
    CHECK(p.points.size() == 4);
    CHECK(p.vertices.size() == 4);

    pts.push_back({1, 2});  // collinear with (1,0)-(1,1): that corner stops being extreme
    LatticePolytope q = polytope_from_points(2, pts);
    CHECK(q.points.size() == 5);
    CHECK(q.vertices.size() == 4);
    CHECK(std::find(q.vertices.begin(), q.vertices.end(), IVec{1, 1}) == q.vertices.end());

    // Doubled square plus its center and an apex over the top edge: five extremes.
    std::vector<IVec> pent{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 3}};
    CHECK(polytope_from_points(2, pent).vertices.size() == 5);

    std::vector<IVec> seg{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
    LatticePolytope s = polytope_from_points(3, seg);
    CHECK(s.vertices == std::vector<IVec>{{0, 0, 0}, {2, 2, 2}});
}

TEST_CASE("newton_polytope reads the support") {
    Polynomial f = parse_polynomial("x1^2 + x2^2 + x3^2 - 4");
    LatticePolytope np = newton_polytope(f);
    CHECK(np.points.size() == 4);
    CHECK(np.vertices.size() == 4);
}

TEST_CASE("support extremes satisfy min-max duality on faces") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = ri(rng, 2, 4);
        std::vector<IVec> pts;
        for (int k = ri(rng, 2, 7); k > 0; --k) {
            IVec p(n);
            for (auto& x : p) x = ri(rng, 0, 4);
            pts.push_back(p);
        }
        IVec v = random_primitive(rng, n);
        IVec neg(v);
        for (auto& x : neg) x = -x;
        CHECK(min_support_value(pts, v) == -max_support_value(pts, neg));
        std::vector<IVec> fmin = face_points_min(pts, v);
        CHECK(fmin == face_points_max(pts, neg));
        CHECK(!fmin.empty());
        for (const IVec& p : fmin) CHECK(ivec_dot(p, v) == min_support_value(pts, v));
        // Every non-face point values strictly higher.
        std::set<IVec> onface(fmin.begin(), fmin.end());
        for (const IVec& p : pts)
            if (!onface.count(p)) CHECK(ivec_dot(p, v) > min_support_value(pts, v));
    }
}

TEST_CASE("unimodular_extend produces a determinant-one matrix starting at v") {
    Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        int n = ri(rng, 2, 8);
        IVec v = random_primitive(rng, n);
        IMat u = unimodular_extend(v);
        REQUIRE(static_cast<int>(u.size()) == n);
        CHECK(u[0] == v);
        Int d = det_int(u);
        CHECK((d == 1 || d == -1));
        // First coordinate of the mapped exponent is the weight <v, a>.
        IVec a(n);
        for (auto& x : a) x = ri(rng, -3, 3);
        CHECK(imat_vec(u, a)[0] == ivec_dot(v, a));
    }
}

TEST_CASE("transform_system is an identity on torus points") {
    Rng rng(33);
    PolynomialSystem sys = parse_system("x1^2*x2 - 3*x2 + 1; x1*x2^2 + x1 - 2;");
    for (int trial = 0; trial < 10; ++trial) {
        IVec v = random_primitive(rng, 2);
        IMat u = unimodular_extend(v);
        TransformedSystem tr = transform_system(sys, u);
        REQUIRE(tr.reduced.polys.size() == sys.polys.size());
        for (int rep = 0; rep < 5; ++rep) {
            // Random torus point y, pushed through x_j = prod_i y_i^(U[i][j]).
            std::vector<CD> y;
            for (int i = 0; i < 2; ++i) {
                CD z = rng.unit_complex();
                z.re += 1.5;  // keep away from zero
                y.push_back(z);
            }
            std::vector<CD> x(2, CD{1, 0});
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 2; ++i)
                    x[j] *= cx_pow(y[i], u[i][j].convert_to<int64_t>());
            for (size_t k = 0; k < sys.polys.size(); ++k) {
                CD lhs = sys.polys[k].eval(x);
                CD factor{1, 0};
                for (int i = 0; i < 2; ++i)
                    factor *= cx_pow(y[i], tr.factors[k][i]);
                CD rhs = factor * tr.reduced.polys[k].eval(y);
                CHECK(std::sqrt((lhs - rhs).norm2()) < 1e-9 * (1 + std::sqrt(lhs.norm2())));
            }
        }
        // The split-off monomial factor leaves each variable with minimum exponent zero.
        for (const Polynomial& p : tr.reduced.polys)
            for (int i = 0; i < 2; ++i) CHECK(p.min_exponent(i) == 0);
    }
}

TEST_CASE("make_primitive never flips orientation") {
    CHECK(make_primitive({-2, 4}) == IVec{-1, 2});
    CHECK(make_primitive({0, 0, 3}) == IVec{0, 0, 1});
    CHECK(make_primitive({6, -9}) == IVec{2, -3});
    IVec z{0, 0};
    CHECK(make_primitive(z) == z);
}

#include "scurve/mixedvol.hpp"

#include "scurve/geometry.hpp"
#include "scurve/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace scurve {

namespace {

// Candidate directions for the face decomposition: the one-dimensional part
// of the prevariety's skeleton, negated to the max convention, plus both
// signs of every lineality generator. Directions whose faces are too fat
// contribute zero, so an over-complete list is harmless.
std::vector<IVec> skeleton_directions(const TropicalFan& fan) {
    std::vector<IVec> out;
    for (const auto& c : fan.cones) {
        for (const auto& r : c.rays) {
            IVec neg(r.size());
            for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
            out.push_back(std::move(neg));
        }
        for (const auto& l : c.lineality) {
            out.push_back(l);
            IVec neg(l.size());
            for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
            out.push_back(std::move(neg));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IVec> project_drop_first(const std::vector<IVec>& pts, const IMat& u) {
    std::vector<IVec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        IVec q = imat_vec(u, p);
        out.emplace_back(q.begin() + 1, q.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Int mixed_volume(const std::vector<std::vector<IVec>>& supports) {
    const int m = static_cast<int>(supports.size());
    if (m == 0) throw std::invalid_argument("no supports");
    for (const auto& s : supports) {
        if (s.empty()) throw std::invalid_argument("empty support");
        if (static_cast<int>(s[0].size()) != m)
            throw std::invalid_argument("need as many supports as dimensions");
    }
    for (const auto& s : supports) {
        bool degenerate = true;
        for (const auto& p : s)
            if (p != s[0]) degenerate = false;
        if (degenerate) return 0;  // a single point has no extent in any direction
    }
    if (m == 1) {
        Int lo = supports[0][0][0], hi = lo;
        for (const auto& p : supports[0]) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }

    std::vector<std::vector<IVec>> subs(supports.begin(), supports.end() - 1);
    const auto& q = supports.back();

    TropicalFan fan = tropical_prevariety(m, subs);
    Int total = 0;
    for (const auto& v : skeleton_directions(fan)) {
        Int weight = max_support_value(q, v);
        if (weight == 0) continue;
        IMat u = unimodular_extend(v);
        std::vector<std::vector<IVec>> faces;
        faces.reserve(subs.size());
        for (const auto& s : subs)
            faces.push_back(project_drop_first(face_points_max(s, v), u));
        total += weight * mixed_volume(faces);
    }
    return total;
}

Int mixed_volume_by_inclusion_exclusion(const std::vector<std::vector<IVec>>& supports) {
    const int m = static_cast<int>(supports.size());
    if (m == 0 || m > 20) throw std::invalid_argument("unsupported support count");
    Rational acc = 0;
    Int fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<IVec> sum = {IVec(m, 0)};
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            std::vector<IVec> next;
            next.reserve(sum.size() * supports[i].size());
            for (const auto& a : sum)
                for (const auto& b : supports[i]) {
                    IVec s(m);
                    for (int j = 0; j < m; ++j) s[j] = a[j] + b[j];
                    next.push_back(std::move(s));
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            sum = std::move(next);
        }
        int bits = __builtin_popcount(mask);
        Rational term(lattice_volume(sum), fact);
        acc += ((m - bits) % 2 == 0) ? term : -term;
    }
    if (denominator(acc) != 1)
        throw std::logic_error("inclusion-exclusion sum is not an integer");
    return Int(numerator(acc));
}

Int degree_bound(const PolynomialSystem& sys) {
    const int n = sys.nvars;
    if (static_cast<int>(sys.polys.size()) != n - 1)
        throw std::invalid_argument("expected n-1 polynomials in n variables");
    std::vector<std::vector<IVec>> supports;
    for (const auto& p : sys.polys) supports.push_back(p.support());
    IVec zero(n, 0), e1(n, 0);
    e1[0] = 1;
    supports.push_back({zero, e1});
    return mixed_volume(supports);
}

DegreeDecomposition degree_decomposition(const PolynomialSystem& sys) {
    const int n = sys.nvars;
    if (static_cast<int>(sys.polys.size()) != n - 1)
        throw std::invalid_argument("expected n-1 polynomials in n variables");
    std::vector<std::vector<IVec>> supports;
    for (const auto& p : sys.polys) supports.push_back(p.support());

    DegreeDecomposition out;
    TropicalFan fan = tropical_prevariety(n, supports);
    for (const auto& w : pretropism_rays(fan)) {
        IMat u = unimodular_extend(w);
        std::vector<std::vector<IVec>> faces;
        faces.reserve(supports.size());
        for (const auto& s : supports) {
            std::vector<IVec> face = face_points_min(s, w);
            std::vector<IVec> proj;
            proj.reserve(face.size());
            for (const auto& p : face) {
                IVec q = imat_vec(u, p);
                proj.emplace_back(q.begin() + 1, q.end());
            }
            std::sort(proj.begin(), proj.end());
            proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
            faces.push_back(std::move(proj));
        }
        Int weight = w[0] * mixed_volume(faces);
        if (weight == 0) continue;
        out.total += weight;
        out.terms.push_back({w, weight});
    }
    return out;
}

nlohmann::ordered_json decomposition_to_json(const DegreeDecomposition& d) {
    nlohmann::ordered_json j;
    j["total"] = d.total.convert_to<long long>();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : d.terms) {
        nlohmann::ordered_json jt;
        jt["ray"] = nlohmann::ordered_json::array();
        for (const auto& x : t.ray) jt["ray"].push_back(x.convert_to<long long>());
        jt["weight"] = t.weight.convert_to<long long>();
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

}  // namespace scurve

#include "scurve/tropical.hpp"

#include "scurve/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scurve {

Polynomial initial_form(const Polynomial& p, const IVec& v) {
    Int best = min_support_value(p.support(), v);
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (ivec_dot(expt_to_ivec(e), v) == best) r.add_term(e, c);
    return r;
}

PolynomialSystem initial_system(const PolynomialSystem& sys, const IVec& v) {
    PolynomialSystem r;
    r.nvars = sys.nvars;
    for (const auto& p : sys.polys) r.polys.push_back(initial_form(p, v));
    return r;
}

namespace {

bool cone_less(const Cone& a, const Cone& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.rays != b.rays) return a.rays < b.rays;
    return a.lineality < b.lineality;
}

// Cones on which the support's minimum is attained at both a_i and a_j.
std::vector<Cone> pair_cones(int n, const std::vector<IVec>& support) {
    const int s = static_cast<int>(support.size());
    std::vector<Cone> out;
    std::map<std::string, size_t> seen;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            IMat eq(1, IVec(n));
            for (int k = 0; k < n; ++k) eq[0][k] = support[i][k] - support[j][k];
            IMat ineq;
            for (int c = 0; c < s; ++c) {
                if (c == i || c == j) continue;
                IVec row(n);
                for (int k = 0; k < n; ++k) row[k] = support[c][k] - support[i][k];
                ineq.push_back(std::move(row));
            }
            Cone cone = Cone::from_h(n, std::move(eq), std::move(ineq));
            if (cone.dim == 0) continue;
            auto sig = cone.signature();
            if (seen.emplace(sig, out.size()).second) out.push_back(std::move(cone));
        }
    }
    return out;
}

void dedup_and_prune(std::vector<Cone>& cones) {
    std::map<std::string, size_t> seen;
    std::vector<Cone> uniq;
    for (auto& c : cones)
        if (seen.emplace(c.signature(), uniq.size()).second) uniq.push_back(std::move(c));
    // Keep only maximal cones: a cone strictly inside another adds nothing,
    // and dropping it mid-refinement is safe because intersecting preserves
    // containment.
    std::vector<bool> drop(uniq.size(), false);
    for (size_t i = 0; i < uniq.size(); ++i)
        for (size_t j = 0; j < uniq.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (uniq[i].dim <= uniq[j].dim && uniq[i].is_subset_of(uniq[j])) drop[i] = true;
        }
    cones.clear();
    for (size_t i = 0; i < uniq.size(); ++i)
        if (!drop[i]) cones.push_back(std::move(uniq[i]));
}

}  // namespace

TropicalFan tropical_prevariety(int n, const std::vector<std::vector<IVec>>& supports) {
    TropicalFan fan;
    fan.n = n;
    if (supports.empty()) {
        fan.cones.push_back(Cone::from_h(n, {}, {}));
        return fan;
    }
    for (const auto& s : supports)
        if (s.size() < 2) return fan;  // some initial form is a lone monomial

    std::vector<Cone> current = pair_cones(n, supports[0]);
    dedup_and_prune(current);
    for (size_t k = 1; k < supports.size() && !current.empty(); ++k) {
        std::vector<Cone> walls = pair_cones(n, supports[k]);
        std::vector<Cone> next;
        for (const auto& c : current)
            for (const auto& w : walls) {
                Cone d = intersect_cones(c, w);
                if (d.dim >= 1) next.push_back(std::move(d));
            }
        dedup_and_prune(next);
        current = std::move(next);
    }
    std::sort(current.begin(), current.end(), cone_less);
    fan.cones = std::move(current);
    return fan;
}

TropicalFan tropical_prevariety(const PolynomialSystem& sys) {
    std::vector<std::vector<IVec>> supports;
    supports.reserve(sys.polys.size());
    for (const auto& p : sys.polys) supports.push_back(p.support());
    return tropical_prevariety(sys.nvars, supports);
}

std::vector<IVec> pretropism_rays(const TropicalFan& fan) {
    std::vector<IVec> out;
    auto consider = [&out](IVec v) {
        if (v[0] > 0) out.push_back(std::move(v));
    };
    for (const auto& c : fan.cones) {
        for (const auto& r : c.rays) consider(r);
        for (const auto& l : c.lineality) {
            consider(l);
            IVec neg(l.size());
            for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
            consider(std::move(neg));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Membership interior_membership(const TropicalFan& fan, const IVec& w) {
    Membership m;
    if (ivec_is_zero(w)) return m;
    IVec v = make_primitive(w);
    for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const Cone& c = fan.cones[ci];
        for (const auto& r : c.rays)
            if (r == v) {
                m.kind = Membership::Kind::ray_generator;
                m.cone_index = static_cast<int>(ci);
                m.generators = {r};
                return m;
            }
    }
    for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const Cone& c = fan.cones[ci];
        if (!c.contains(v)) continue;
        m.kind = Membership::Kind::interior_of_cone;
        m.cone_index = static_cast<int>(ci);
        if (auto lambda = cone_combination(c, v)) {
            for (size_t j = 0; j < lambda->size(); ++j)
                if ((*lambda)[j] > 0) m.generators.push_back(c.rays[j]);
        }
        return m;
    }
    return m;
}

nlohmann::ordered_json fan_to_json(const TropicalFan& fan) {
    std::vector<IVec> rays;
    for (const auto& c : fan.cones)
        for (const auto& r : c.rays) rays.push_back(r);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    auto ivec_json = [](const IVec& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& x : v) a.push_back(x.convert_to<long long>());
        return a;
    };

    nlohmann::ordered_json j;
    j["nvars"] = fan.n;
    j["rays"] = nlohmann::ordered_json::array();
    for (const auto& r : rays) j["rays"].push_back(ivec_json(r));

    j["cones"] = nlohmann::ordered_json::array();
    for (const auto& c : fan.cones) {
        nlohmann::ordered_json jc;
        jc["dim"] = c.dim;
        jc["rays"] = nlohmann::ordered_json::array();
        for (const auto& r : c.rays) {
            auto it = std::lower_bound(rays.begin(), rays.end(), r);
            jc["rays"].push_back(static_cast<int>(it - rays.begin()));
        }
        if (!c.lineality.empty()) {
            jc["lineality"] = nlohmann::ordered_json::array();
            for (const auto& l : c.lineality) jc["lineality"].push_back(ivec_json(l));
        }
        j["cones"].push_back(std::move(jc));
    }

    j["pretropisms"] = nlohmann::ordered_json::array();
    for (const auto& p : pretropism_rays(fan)) j["pretropisms"].push_back(ivec_json(p));
    return j;
}

}  // namespace scurve

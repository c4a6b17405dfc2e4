#include "scurve/homotopy.hpp"
#include "scurve/manifest.hpp"
#include "scurve/mixedvol.hpp"
#include "scurve/parser.hpp"
#include "scurve/puiseux.hpp"
#include "scurve/tropical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace scurve;
using nlohmann::ordered_json;

namespace {

/// Input has the wrong shape for the command (not a parse error): exit 3.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string file;
    std::string out;
    bool json = false;
    uint64_t seed = 20177;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "polynomial system (.pol)")->required();
    cmd->add_flag("--json", c.json, "machine-readable JSON output");
    cmd->add_option("--out", c.out, "write output to a file instead of stdout");
    cmd->add_option("--seed", c.seed, "seed for any randomized numerics");
}

std::string read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedSystem {
    PolynomialSystem sys;
    std::string digest;
};

LoadedSystem load_input(const std::string& path) {
    const std::string text = read_input(path);
    PolynomialSystem sys = parse_system(text);
    if (sys.polys.empty()) throw ParseError("no polynomials in input", 1, 1);
    for (const Polynomial& p : sys.polys)
        if (p.is_zero()) throw ParseError("zero polynomial in input", 1, 1);
    return {std::move(sys), fnv1a_hex(text)};
}

void require_curve_shape(const PolynomialSystem& sys) {
    if (sys.nvars < 2 || static_cast<int>(sys.polys.size()) != sys.nvars - 1)
        throw ShapeError("expected n-1 polynomials in n variables (n >= 2), got " +
                         std::to_string(sys.polys.size()) + " in " + std::to_string(sys.nvars));
}

IVec parse_ray(const std::string& s, int n) {
    IVec v;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            size_t used = 0;
            long x = std::stol(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used])))
                ++used;
            if (used != part.size()) throw std::invalid_argument(part);
            v.push_back(Int(x));
        } catch (const std::exception&) {
            throw ShapeError("bad ray component '" + part + "'");
        }
    }
    if (static_cast<int>(v.size()) != n)
        throw ShapeError("ray has " + std::to_string(v.size()) + " components, the system has " +
                         std::to_string(n) + " variables");
    if (v[0] <= 0) throw ShapeError("ray must have positive first coordinate");
    return v;
}

Rational parse_rational(const std::string& s) {
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(s)) throw ShapeError("bad rational '" + s + "'");
        return Rational(Int(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num) || !digits(den) || Int(den) == 0)
        throw ShapeError("bad rational '" + s + "'");
    return Rational(Int(num), Int(den));
}

struct Pin {
    int var = 0;
    QC value = QC(1);
    std::string label = "x1=1";
};

Pin parse_pin(const std::string& s, int n) {
    Pin p;
    if (s.empty()) return p;
    const size_t eq = s.find('=');
    if (s.size() < 4 || s[0] != 'x' || eq == std::string::npos || eq < 2)
        throw ShapeError("pin must look like x1=2 or x2=1/3");
    int idx = 0;
    try {
        size_t used = 0;
        idx = std::stoi(s.substr(1, eq - 1), &used);
        if (used != eq - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw ShapeError("pin must look like x1=2 or x2=1/3");
    }
    if (idx < 1 || idx > n) throw ShapeError("pin variable x" + std::to_string(idx) + " out of range");
    p.var = idx - 1;
    p.value = QC(parse_rational(s.substr(eq + 1)));
    if (p.value.is_zero()) throw ShapeError("pin value must be nonzero");
    p.label = s;
    return p;
}

int emit(const Common& c, const ordered_json& data, const std::string& text) {
    std::string payload = c.json ? data.dump(2) + "\n" : text;
    if (c.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(c.out);
        if (!out) throw std::runtime_error("cannot write " + c.out);
        out << payload;
    }
    return 0;
}

class Timer {
  public:
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json manifest_json(const std::string& command, const std::string& digest,
                           ordered_json config, const Timer& timer) {
    RunManifest m;
    m.command = command;
    m.input_digest = digest;
    m.config = std::move(config);
    m.wall_ms = timer.ms();
    return m.to_json();
}

// ---- prevariety ----

int cmd_prevariety(const Common& c) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    TropicalFan fan = tropical_prevariety(in.sys);
    ordered_json data = fan_to_json(fan);
    data["manifest"] =
        manifest_json("prevariety", in.digest, ordered_json{{"seed", c.seed}}, timer);

    std::ostringstream text;
    text << "prevariety of " << in.sys.polys.size() << " polynomials in " << in.sys.nvars
         << " variables\n";
    text << "cones:\n";
    for (const Cone& cone : fan.cones) {
        text << "  dim " << cone.dim << ":";
        for (const IVec& r : cone.rays) text << " " << ivec_str(r);
        if (!cone.lineality.empty()) {
            text << "  (lineality:";
            for (const IVec& l : cone.lineality) text << " " << ivec_str(l);
            text << ")";
        }
        text << "\n";
    }
    text << "pretropisms:";
    for (const IVec& r : pretropism_rays(fan)) text << " " << ivec_str(r);
    text << "\n";
    return emit(c, data, text.str());
}

// ---- series / certify / sample ----

struct SeriesOpts {
    std::string ray;
    int order = 5;
    std::string pin;
};

struct SeriesRun {
    IVec ray;
    Pin pin;
    bool degenerate = false;
    std::vector<PuiseuxExpansion> expansions;
    std::vector<CertifyReport> reports;
    std::vector<std::vector<CD>> numeric_starts;
};

SeriesRun run_series(const PolynomialSystem& sys, const SeriesOpts& opt, uint64_t seed) {
    if (sys.nvars < 2 || static_cast<int>(sys.polys.size()) < sys.nvars - 1)
        throw ShapeError("expected at least n-1 polynomials in n variables (n >= 2), got " +
                         std::to_string(sys.polys.size()) + " in " + std::to_string(sys.nvars));
    SeriesRun run;
    run.ray = parse_ray(opt.ray, sys.nvars);
    run.pin = parse_pin(opt.pin, sys.nvars);
    if (run.ray[run.pin.var] == 0) {
        if (!opt.pin.empty()) throw ShapeError("pinned coordinate has zero exponent on this ray");
        for (int i = 0; i < sys.nvars; ++i)
            if (run.ray[i] != 0) {
                run.pin.var = i;
                run.pin.label = "x" + std::to_string(i + 1) + "=1";
                break;
            }
    }
    if (opt.order < 0) throw ShapeError("order must be nonnegative");

    SolverConfig cfg;
    cfg.seed = seed;
    try {
        std::vector<BranchStart> starts =
            leading_terms(sys, run.ray, run.pin.var, run.pin.value, cfg);
        for (const BranchStart& st : starts) {
            if (!st.exact) {
                run.numeric_starts.push_back(st.approx);
                continue;
            }
            run.expansions.push_back(
                extend_series(sys, run.ray, st, opt.order, run.pin.var));
            run.reports.push_back(certify(sys, run.expansions.back()));
        }
    } catch (const DegenerateInitialSystem&) {
        // The initial system does not isolate the leading coefficients; leave
        // them unknown and let the order-by-order solve pin them down.
        run.degenerate = true;
        BranchStart st;
        st.coeff.assign(sys.nvars, std::nullopt);
        st.coeff[run.pin.var] = run.pin.value;
        run.expansions.push_back(extend_series(sys, run.ray, st, opt.order, run.pin.var));
        run.reports.push_back(certify(sys, run.expansions.back()));
    }
    return run;
}

ordered_json series_json(const SeriesRun& run, int order) {
    ordered_json j;
    j["ray"] = ordered_json::array();
    for (const Int& x : run.ray) j["ray"].push_back(x.convert_to<int64_t>());
    j["pin"] = run.pin.label;
    j["order"] = order;
    j["degenerate_start"] = run.degenerate;
    j["branches"] = ordered_json::array();
    for (size_t b = 0; b < run.expansions.size(); ++b) {
        ordered_json e = expansion_to_json(run.expansions[b]);
        const CertifyReport& rep = run.reports[b];
        e["certified"] = rep.ok;
        e["required"] = rep.required;
        e["achieved"] = ordered_json::array();
        for (int a : rep.achieved)
            e["achieved"].push_back(a == INT_MAX ? ordered_json(nullptr) : ordered_json(a));
        j["branches"].push_back(std::move(e));
    }
    j["numeric_starts"] = ordered_json::array();
    for (const auto& st : run.numeric_starts) {
        ordered_json s = ordered_json::array();
        for (const CD& z : st) s.push_back(ordered_json::array({z.re, z.im}));
        j["numeric_starts"].push_back(std::move(s));
    }
    return j;
}

std::string series_text(const SeriesRun& run, int order) {
    std::ostringstream text;
    text << "ray " << ivec_str(run.ray) << ", pin " << run.pin.label << ", order " << order
         << "\n";
    if (run.degenerate)
        text << "initial coefficients were under-determined; recovered order by order\n";
    for (size_t b = 0; b < run.expansions.size(); ++b) {
        const PuiseuxExpansion& e = run.expansions[b];
        text << "branch " << (b + 1) << " (winding " << e.winding << ", "
             << (run.reports[b].ok ? "certified" : "NOT certified") << "):\n";
        for (size_t i = 0; i < e.coords.size(); ++i)
            text << "  x" << (i + 1) << " = " << e.coords[i].to_string({"t"}) << "\n";
    }
    for (size_t s = 0; s < run.numeric_starts.size(); ++s) {
        text << "numeric branch " << (run.expansions.size() + s + 1) << " leading coefficients:";
        for (const CD& z : run.numeric_starts[s]) text << " (" << z.re << "," << z.im << ")";
        text << "  [leading order only]\n";
    }
    return text.str();
}

ordered_json series_config(const SeriesRun& run, int order, uint64_t seed) {
    ordered_json cfg;
    cfg["ray"] = ordered_json::array();
    for (const Int& x : run.ray) cfg["ray"].push_back(x.convert_to<int64_t>());
    cfg["order"] = order;
    cfg["pin"] = run.pin.label;
    cfg["seed"] = seed;
    return cfg;
}

int cmd_series(const Common& c, const SeriesOpts& opt) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    SeriesRun run = run_series(in.sys, opt, c.seed);
    ordered_json data = series_json(run, opt.order);
    data["manifest"] =
        manifest_json("series", in.digest, series_config(run, opt.order, c.seed), timer);
    return emit(c, data, series_text(run, opt.order));
}

int cmd_certify(const Common& c, const SeriesOpts& opt) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    SeriesRun run = run_series(in.sys, opt, c.seed);
    bool all_ok = !run.expansions.empty();
    ordered_json branches = ordered_json::array();
    for (size_t b = 0; b < run.expansions.size(); ++b) {
        const CertifyReport& rep = run.reports[b];
        all_ok = all_ok && rep.ok;
        ordered_json e;
        e["winding"] = run.expansions[b].winding;
        e["ok"] = rep.ok;
        e["required"] = rep.required;
        e["achieved"] = ordered_json::array();
        for (int a : rep.achieved)
            e["achieved"].push_back(a == INT_MAX ? ordered_json(nullptr) : ordered_json(a));
        branches.push_back(std::move(e));
    }
    ordered_json data;
    data["ray"] = ordered_json::array();
    for (const Int& x : run.ray) data["ray"].push_back(x.convert_to<int64_t>());
    data["order"] = opt.order;
    data["ok"] = all_ok;
    data["branches"] = std::move(branches);
    data["manifest"] =
        manifest_json("certify", in.digest, series_config(run, opt.order, c.seed), timer);

    std::ostringstream text;
    text << "certification " << (all_ok ? "PASSED" : "FAILED") << " for ray " << ivec_str(run.ray)
         << " at order " << opt.order << "\n";
    for (size_t b = 0; b < run.reports.size(); ++b) {
        text << "branch " << (b + 1) << ":";
        for (size_t k = 0; k < run.reports[b].required.size(); ++k) {
            const int a = run.reports[b].achieved[k];
            text << " f" << (k + 1) << " needs " << run.reports[b].required[k] << " got ";
            if (a == INT_MAX) text << "exact";
            else text << a;
            text << ";";
        }
        text << "\n";
    }
    if (!run.numeric_starts.empty())
        text << run.numeric_starts.size()
             << " numeric branch(es) skipped (no exact leading coefficients)\n";
    return emit(c, data, text.str());
}

struct SampleOpts {
    double tmin = 0.01;
    double tmax = 1.0;
    int count = 50;
    int branch = 0;
};

int cmd_sample(const Common& c, const SeriesOpts& opt, const SampleOpts& so) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    SeriesRun run = run_series(in.sys, opt, c.seed);
    if (so.count < 1) throw ShapeError("count must be positive");
    if (!(so.tmin > 0) || !(so.tmax >= so.tmin))
        throw ShapeError("need 0 < tmin <= tmax");
    if (so.branch < 0 || so.branch >= static_cast<int>(run.expansions.size()))
        throw ShapeError("branch index out of range (have " +
                         std::to_string(run.expansions.size()) + " extended branches)");
    std::vector<double> ts;
    for (int i = 0; i < so.count; ++i)
        ts.push_back(so.count == 1
                         ? so.tmin
                         : so.tmin + (so.tmax - so.tmin) * i / double(so.count - 1));
    const PuiseuxExpansion& exp = run.expansions[so.branch];

    ordered_json cfg = series_config(run, opt.order, c.seed);
    cfg["tmin"] = so.tmin;
    cfg["tmax"] = so.tmax;
    cfg["count"] = so.count;
    cfg["branch"] = so.branch;
    ordered_json manifest = manifest_json("sample", in.digest, cfg, timer);

    if (c.json) {
        ordered_json data;
        data["branch"] = so.branch;
        data["points"] = ordered_json::array();
        for (double t : ts) {
            ordered_json row = ordered_json::array();
            row.push_back(t);
            std::vector<CD> arg{CD{t, 0}};
            for (const Polynomial& p : exp.coords) {
                CD z = p.eval(arg);
                row.push_back(z.re);
                row.push_back(z.im);
            }
            data["points"].push_back(std::move(row));
        }
        data["manifest"] = std::move(manifest);
        return emit(c, data, "");
    }
    // CSV with the manifest on a leading comment line.
    std::string text = "# " + manifest.dump() + "\n" + sample_csv(exp, ts);
    return emit(c, ordered_json{}, text);
}

// ---- endgame ----

struct EndgameOpts {
    double s0 = 0.1;
    double r = 0.4;
    int max_winding = 8;
};

int cmd_endgame(const Common& c, const EndgameOpts& opt) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    require_curve_shape(in.sys);
    SolverConfig cfg;
    cfg.seed = c.seed;
    cfg.s0 = opt.s0;
    cfg.ratio = opt.r;
    cfg.max_winding = opt.max_winding;
    if (!(cfg.s0 > 0 && cfg.s0 < 1) || !(cfg.ratio > 0 && cfg.ratio < 1) || cfg.max_winding < 1)
        throw ShapeError("need 0 < s0 < 1, 0 < r < 1, max-winding >= 1");

    CurveRun run = run_curve(in.sys, cfg);
    bool any_conclusive = false;
    for (const PathResult& p : run.paths)
        if (p.status != PathResult::Status::inconclusive) any_conclusive = true;
    if (!any_conclusive) {
        std::cerr << "endgame: every path was inconclusive\n";
        for (const std::string& w : run.warnings) std::cerr << "warning: " << w << "\n";
        return 5;
    }

    ordered_json cfgj{{"seed", c.seed},
                      {"s0", cfg.s0},
                      {"r", cfg.ratio},
                      {"max_winding", cfg.max_winding}};
    ordered_json data = curve_run_to_json(run);
    data["manifest"] = manifest_json("endgame", in.digest, cfgj, timer);

    std::ostringstream text;
    text << run.paths.size() << " path(s) tracked from " << run.slice_count
         << " slice point(s)\n";
    for (const auto& g : data["groups"]) {
        text << "tropism [";
        bool first = true;
        for (const auto& x : g["tropism"]) {
            if (!first) text << ",";
            text << x;
            first = false;
        }
        text << "] winding " << g["winding"] << ": " << g["count"] << " path(s)\n";
    }
    int inconclusive = 0, diverged = 0;
    for (const PathResult& p : run.paths) {
        if (p.status == PathResult::Status::inconclusive) ++inconclusive;
        if (p.status == PathResult::Status::diverged) ++diverged;
    }
    if (diverged) text << diverged << " path(s) diverged\n";
    if (inconclusive) text << inconclusive << " path(s) inconclusive\n";
    for (const std::string& w : run.warnings) text << "warning: " << w << "\n";
    return emit(c, data, text.str());
}

// ---- degree / mixedvol ----

int cmd_degree(const Common& c) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    require_curve_shape(in.sys);
    Int bound = degree_bound(in.sys);
    DegreeDecomposition dec = degree_decomposition(in.sys);
    ordered_json data;
    data["bound"] = bound.convert_to<int64_t>();
    data["decomposition"] = decomposition_to_json(dec);
    data["manifest"] = manifest_json("degree", in.digest, ordered_json{{"seed", c.seed}}, timer);

    std::ostringstream text;
    text << "degree bound " << bound << "\n";
    for (const DegreeTerm& t : dec.terms)
        text << "  " << ivec_str(t.ray) << " contributes " << t.weight << "\n";
    if (dec.total != bound)
        text << "decomposition total " << dec.total << " differs from the bound\n";
    return emit(c, data, text.str());
}

int cmd_mixedvol(const Common& c) {
    Timer timer;
    LoadedSystem in = load_input(c.file);
    if (in.sys.nvars < 1 || static_cast<int>(in.sys.polys.size()) != in.sys.nvars)
        throw ShapeError("mixed volume needs n polynomials in n variables, got " +
                         std::to_string(in.sys.polys.size()) + " in " +
                         std::to_string(in.sys.nvars));
    std::vector<std::vector<IVec>> supports;
    for (const Polynomial& p : in.sys.polys) supports.push_back(p.support());
    Int mv = mixed_volume(supports);
    ordered_json data;
    data["mixed_volume"] = mv.convert_to<int64_t>();
    data["manifest"] = manifest_json("mixedvol", in.digest, ordered_json{{"seed", c.seed}}, timer);
    return emit(c, data, "mixed volume " + mv.str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Puiseux series expansions of space curves via tropical geometry"};
    app.require_subcommand(1);

    Common c_prev, c_series, c_endgame, c_degree, c_mixedvol, c_certify, c_sample;
    SeriesOpts s_series, s_certify, s_sample;
    SampleOpts samp;
    EndgameOpts eg;

    CLI::App* prev = app.add_subcommand("prevariety", "tropical prevariety and pretropisms");
    add_common(prev, c_prev);

    auto add_series_opts = [](CLI::App* cmd, SeriesOpts& s, bool need_ray) {
        auto* ray = cmd->add_option("--ray", s.ray, "candidate tropism, e.g. 2,1,0");
        if (need_ray) ray->required();
        cmd->add_option("--order", s.order, "number of series orders past the leading term");
        cmd->add_option("--pin", s.pin, "normalization, e.g. x1=2 (default: first active x_i = 1)");
    };

    CLI::App* ser = app.add_subcommand("series", "Puiseux series expansion along a ray");
    add_common(ser, c_series);
    add_series_opts(ser, s_series, true);

    CLI::App* egc = app.add_subcommand("endgame", "numeric tropism recovery by path tracking");
    add_common(egc, c_endgame);
    egc->add_option("--s0", eg.s0, "initial slice value");
    egc->add_option("--r", eg.r, "geometric slice ratio");
    egc->add_option("--max-winding", eg.max_winding, "largest winding number considered");

    CLI::App* deg = app.add_subcommand("degree", "degree bound and its tropism decomposition");
    add_common(deg, c_degree);

    CLI::App* mvc = app.add_subcommand("mixedvol", "mixed volume of the Newton polytopes");
    add_common(mvc, c_mixedvol);

    CLI::App* cert = app.add_subcommand("certify", "exact certification of a series expansion");
    add_common(cert, c_certify);
    add_series_opts(cert, s_certify, true);

    CLI::App* smp = app.add_subcommand("sample", "CSV samples of a series branch");
    add_common(smp, c_sample);
    add_series_opts(smp, s_sample, true);
    smp->add_option("--tmin", samp.tmin, "smallest parameter value");
    smp->add_option("--tmax", samp.tmax, "largest parameter value");
    smp->add_option("--count", samp.count, "number of sample points");
    smp->add_option("--branch", samp.branch, "which extended branch to sample");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prev->parsed()) return cmd_prevariety(c_prev);
        if (ser->parsed()) return cmd_series(c_series, s_series);
        if (egc->parsed()) return cmd_endgame(c_endgame, eg);
        if (deg->parsed()) return cmd_degree(c_degree);
        if (mvc->parsed()) return cmd_mixedvol(c_mixedvol);
        if (cert->parsed()) return cmd_certify(c_certify, s_certify);
        if (smp->parsed()) return cmd_sample(c_sample, s_sample, samp);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoTorusSolutions& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "the tropism may be hidden inside a higher-dimensional cone; try `scurve "
                     "endgame` to recover it numerically\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "cli.hpp"

#include "simplexbd/chain.hpp"
#include "simplexbd/error.hpp"
#include "simplexbd/grid.hpp"
#include "simplexbd/homology_point.hpp"
#include "simplexbd/report.hpp"
#include "simplexbd/theta.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace sbd::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<long> n;
    std::optional<long> n_max;
    std::optional<long> L;
    std::string m = "9,4";
    long denominator = kDefaultDenominator;
    std::uint64_t seed = kDefaultSeed;
    std::string format;
    std::string out;
    std::string alpha;
    std::string map_id;
    std::string point;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long r = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' expects an integer, got '" + v + "'");
    }
}

// key=value lines; '#' starts a comment.
void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key == "n") cfg.n = to_long(key, val);
        else if (key == "n-max" || key == "n_max") cfg.n_max = to_long(key, val);
        else if (key == "L") cfg.L = to_long(key, val);
        else if (key == "m") cfg.m = val;
        else if (key == "grid-denominator" || key == "grid_denominator") cfg.denominator = to_long(key, val);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_long(key, val));
        else if (key == "format") cfg.format = val;
        else if (key == "out") cfg.out = val;
        else if (key == "alpha") cfg.alpha = val;
        else throw UsageError("unknown config key '" + key + "'");
    }
}

CoefficientTuple coefficients(const RunConfig& cfg) {
    CoefficientTuple m;
    try {
        m = CoefficientTuple::parse(cfg.m);
    } catch (const Error& e) {
        throw UsageError(std::string("bad --m: ") + e.what());
    }
    if (m.L() > 1) throw UsageError("only L in {0,1} is supported; --m must have one or two entries");
    if (cfg.L && *cfg.L != static_cast<long>(m.L()))
        throw UsageError("--L " + std::to_string(*cfg.L) + " does not match --m with " + std::to_string(m.m.size()) +
                         " entries");
    return m;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg.out + "'");
    f << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw UsageError("unsupported --format '" + cfg.format + "' for this command");
}

int cmd_verify_equations(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json"});
    const long L = cfg.L.value_or(1);
    if (L < 0 || L > 1) throw UsageError("--L must be 0 or 1");
    const long n_lo = cfg.n.value_or(1);
    const long n_hi = std::max(n_lo, cfg.n_max.value_or(n_lo));
    if (n_lo < 1) throw UsageError("EQUATION needs n >= 1");
    if (n_hi > static_cast<long>(kDefaultThetaCap)) throw UsageError("n exceeds the Θ dimension cap");
    if (cfg.denominator < n_hi + 2) throw UsageError("grid denominator must be at least n+2");

    json reports = json::array();
    std::size_t instances = 0, failed = 0;
    for (long nn = n_lo; nn <= n_hi; ++nn) {
        const auto n = static_cast<std::size_t>(nn);
        const SampleGrid grid = canonical_grid(n - 1, cfg.denominator, cfg.seed);
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t j = 0; j <= p; ++j)
                for (std::size_t i = 0; i <= static_cast<std::size_t>(L); ++i)
                    for (std::size_t k = 0; k <= static_cast<std::size_t>(L); ++k) {
                        EquationResult r = check_equation(static_cast<std::size_t>(L), n, j, p, i, k, grid.points);
                        ++instances;
                        if (!r.pass) ++failed;
                        reports.push_back(equation_report(static_cast<std::size_t>(L), n, j, p, i, k, grid, r));
                    }
    }
    json doc = {{"check", "equations"},
                {"parameters", {{"n", n_lo}, {"n_max", n_hi}, {"L", L}}},
                {"grid", {{"denominator", cfg.denominator}, {"seed", cfg.seed}}},
                {"verdict", failed == 0 ? "pass" : "fail"},
                {"instances", instances},
                {"failed", failed},
                {"certificate", kSamplingDisclaimer},
                {"reports", reports}};
    emit(cfg, doc.dump(2) + "\n", out);
    return failed == 0 ? kPass : kViolation;
}

int cmd_verify_boundary(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json"});
    const CoefficientTuple m = coefficients(cfg);
    const long lo = cfg.n.value_or(2);
    const long hi = std::max(lo, cfg.n_max.value_or(lo));
    if (lo < 1) throw UsageError("∂∘∂ needs a simplex of dimension >= 1");
    if (hi > static_cast<long>(kDefaultThetaCap)) throw UsageError("n exceeds the Θ dimension cap");
    if (cfg.denominator < hi + 2) throw UsageError("grid denominator must be at least n+2");

    json reports = json::array();
    bool ok = true;
    for (long d = lo; d <= hi; ++d) {
        const auto top = static_cast<std::size_t>(d);
        SampleGrid grid;
        grid.denominator = cfg.denominator;
        grid.seed = cfg.seed;
        // T = id(Δ_top); the doubled composites start at Δ_{top-2}, empty for top = 1.
        if (top >= 2) grid = canonical_grid(top - 2, cfg.denominator, cfg.seed);
        const Chain c = Chain::single(SingularTerm::identity(top));
        BoundarySquaredResult r = check_boundary_squared(c, m, grid.points);
        ok = ok && r.pass;
        reports.push_back(boundary_report(top, m, grid, r));
    }
    json doc = reports.size() == 1 ? reports[0]
                                   : json{{"check", "boundary_squared"},
                                          {"verdict", ok ? "pass" : "fail"},
                                          {"reports", reports}};
    emit(cfg, doc.dump(2) + "\n", out);
    return ok ? kPass : kViolation;
}

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("map parameter without '=': " + item);
        kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    return kv;
}

std::size_t need(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("map id is missing '" + key + "'");
    long v = to_long(key, it->second);
    if (v < 0) throw UsageError("'" + key + "' must be nonnegative");
    return static_cast<std::size_t>(v);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"text"});
    if (cfg.map_id.empty() || cfg.point.empty()) throw UsageError("eval needs a map id and a point");
    const auto colon = cfg.map_id.find(':');
    const std::string kind = cfg.map_id.substr(0, colon);
    const auto kv = colon == std::string::npos ? std::map<std::string, std::string>{}
                                               : parse_params(cfg.map_id.substr(colon + 1));

    std::vector<Rational> raw;
    try {
        std::string s = cfg.point;
        for (char& ch : s)
            if (ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) raw.push_back(parse_rational(item));
    } catch (const Error& e) {
        throw UsageError(std::string("unparsable point: ") + e.what());
    }

    try {
        const BaryPoint x(raw);
        BaryPoint y = x;
        if (kind == "theta") {
            const ThetaKey key{need(kv, "L"), need(kv, "n"), need(kv, "i")};
            y = theta(key)(x);
        } else if (kind == "theta_inverse") {
            const ThetaKey key{need(kv, "L"), need(kv, "n"), need(kv, "i")};
            y = theta(key).inv(x);
        } else if (kind == "pi_alpha") {
            const std::size_t n = need(kv, "n");
            if (x.dim() != n) throw Error(ErrorKind::DimensionMismatch, "point is not in Δ_" + std::to_string(n));
            auto a = kv.find("alpha");
            if (a == kv.end()) throw UsageError("pi_alpha needs alpha=");
            Rational alpha;
            try {
                alpha = parse_rational(a->second);
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
            y = project_layer(x, alpha);
        } else if (kind == "face" || kind == "face_delete") {
            const FaceMap key{need(kv, "L"), need(kv, "n"), need(kv, "i"), need(kv, "j")};
            y = kind == "face" ? face_insert(key, x) : face_delete(key, x);
        } else if (kind == "lambda_phi") {
            const std::size_t n = need(kv, "n");
            y = lambda_lift(phi_n0(n), n)(x);
        } else if (kind == "counterexample") {
            y = counterexample_map()(x);
        } else {
            throw UsageError("unknown map kind '" + kind + "'");
        }
        emit(cfg, to_string(y) + "\n", out);
        return kPass;
    } catch (const Error& e) {
        err << "domain violation: " << e.what() << "\n";
        return kViolation;
    }
}

// Pixel positions of e_0, e_1, e_2.
const long kPix[3][2] = {{40, 440}, {440, 440}, {240, 94}};

std::string pixel(const BaryPoint& x) {
    Rational px = 0, py = 0;
    for (int v = 0; v < 3; ++v) {
        px += x[static_cast<std::size_t>(v)] * kPix[v][0];
        py += x[static_cast<std::size_t>(v)] * kPix[v][1];
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", px.get_d(), py.get_d());
    return buf;
}

struct Segment {
    std::string kind;
    std::string label;
    BaryPoint a;
    BaryPoint b;
};

int cmd_figure(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "svg"});
    if (cfg.n.value_or(2) != 2) throw UsageError("figure export is planar; it needs --n 2");
    const CoefficientTuple m = coefficients(cfg);
    const std::size_t L = m.L();

    std::vector<Segment> segs;
    const BaryPoint s0{Rational(1), Rational(0)}, s1{Rational(0), Rational(1)};
    for (std::size_t j = 0; j <= 2; ++j) {
        for (std::size_t i = 0; i <= L; ++i) {
            const SingularTerm t =
                SingularTerm::identity(2).then(Primitive::face_insert(L, 2, i, j)).then(Primitive::theta(L, 1, i));
            const Integer c = (j % 2 == 0 ? 1 : -1) * m.m[i];
            std::string label = (sgn(c) >= 0 ? "+" : "") + c.get_str();
            segs.push_back({"boundary", label, t.evaluate(s0), t.evaluate(s1)});
        }
    }
    if (!cfg.alpha.empty()) {
        Rational a;
        try {
            a = parse_rational(cfg.alpha);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        if (sgn(a) < 0 || a > 1) throw UsageError("--alpha must lie in [0,1]");
        for (std::size_t j = 0; j <= 2; ++j) {
            std::vector<Rational> p(3, Rational(0)), q(3, Rational(0));
            p[j] = a;
            q[j] = a;
            p[(j + 1) % 3] = 1 - a;
            q[(j + 2) % 3] = 1 - a;
            segs.push_back({"cross", "x" + std::to_string(j) + "=" + to_string(a), BaryPoint(p), BaryPoint(q)});
        }
    }

    std::string text;
    if (cfg.format == "svg") {
        text += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
        text += "<polygon points=\"" + pixel(vertex(2, 0)) + " " + pixel(vertex(2, 1)) + " " + pixel(vertex(2, 2)) +
                "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
        for (const auto& s : segs) {
            const std::string colour = s.kind == "cross" ? "#1f77b4" : (s.label[0] == '-' ? "#d62728" : "#2ca02c");
            auto pa = pixel(s.a), pb = pixel(s.b);
            auto ca = pa.find(','), cb = pb.find(',');
            text += "<line x1=\"" + pa.substr(0, ca) + "\" y1=\"" + pa.substr(ca + 1) + "\" x2=\"" + pb.substr(0, cb) +
                    "\" y2=\"" + pb.substr(cb + 1) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
            const BaryPoint mid = segment_eval(s.a, s.b, Rational(1, 2));
            auto pm = pixel(mid);
            auto cm = pm.find(',');
            text += "<text x=\"" + pm.substr(0, cm) + "\" y=\"" + pm.substr(cm + 1) + "\" font-size=\"11\">" + s.label +
                    "</text>\n";
        }
        text += "</svg>\n";
    } else {
        text += "kind,label,start,end\n";
        for (const auto& s : segs)
            text += s.kind + "," + s.label + ",\"" + to_string(s.a) + "\",\"" + to_string(s.b) + "\"\n";
    }
    emit(cfg, text, out);
    return kPass;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "csv"});
    const CoefficientTuple m = coefficients(cfg);
    const long lo = cfg.n.value_or(0);
    const long hi = std::max(lo, cfg.n_max.value_or(8));
    if (lo < 0) throw UsageError("--n must be nonnegative");
    std::string text;
    for (long n = lo; n <= hi; ++n) text += homology_row(static_cast<std::size_t>(n), m) + "\n";
    emit(cfg, text, out);
    return kPass;
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
    for (std::size_t q = 0; q < args.size(); ++q) {
        if (args[q] == "--config") {
            if (q + 1 >= args.size()) throw UsageError("--config needs a path");
            return args[q + 1];
        }
        if (args[q].rfind("--config=", 0) == 0) return args[q].substr(9);
    }
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        if (auto path = config_path(args)) load_config(*path, cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"Exact verification of a generalized simplicial boundary operator", "simplexbd"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_file;
    long n = 0, n_max = 0, L = 0;
    app.add_option("--config", config_file, "key=value file; flags override it");
    auto* opt_n = app.add_option("--n", n, "dimension (start of range)");
    auto* opt_nmax = app.add_option("--n-max", n_max, "end of the dimension range");
    auto* opt_L = app.add_option("--L", L, "Θ family level (0 or 1)");
    app.add_option("--m", cfg.m, "coefficient tuple, e.g. \"9,4\"");
    app.add_option("--grid-denominator", cfg.denominator, "common denominator D of the sample grid");
    app.add_option("--seed", cfg.seed, "seed for the random grid points");
    app.add_option("--format", cfg.format, "json | csv | svg | text");
    app.add_option("--out", cfg.out, "write the output here instead of stdout");
    app.add_option("--alpha", cfg.alpha, "cross level for figure export");

    auto* eq = app.add_subcommand("verify-equations", "check every EQUATION instance for the given n range");
    auto* bd = app.add_subcommand("verify-boundary", "certify ∂∘∂ = 0 on T = id(Δ_n) by explicit pairing");
    auto* ev = app.add_subcommand("eval", "evaluate a map at an exact point");
    ev->add_option("map", cfg.map_id, "e.g. theta:L=1,n=2,i=1 or pi_alpha:n=2,alpha=0")->required();
    ev->add_option("point", cfg.point, "e.g. [1/4,3/4]")->required();
    auto* fig = app.add_subcommand("figure", "export boundary and cross segments of Δ_2");
    auto* hom = app.add_subcommand("homology", "homology table of the one-point space");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (opt_n->count()) cfg.n = n;
    if (opt_nmax->count()) cfg.n_max = n_max;
    if (opt_L->count()) cfg.L = L;

    try {
        if (eq->parsed()) return cmd_verify_equations(cfg, out);
        if (bd->parsed()) return cmd_verify_boundary(cfg, out);
        if (ev->parsed()) return cmd_eval(cfg, out, err);
        if (fig->parsed()) return cmd_figure(cfg, out);
        if (hom->parsed()) return cmd_homology(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kViolation;
    }
    return kUsage;
}

}  // namespace sbd::cli

#include "kuznum/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace kuznum::cli {

using nlohmann::json;

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// ---- json helpers

json rat(const Rational& q) { return to_canonical_string(q); }

json vec(const RatVector& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(rat(e));
    return a;
}

json mat(const RatMatrix& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i).transpose()));
    return a;
}

json quad(const QuadNumber& q) {
    return {{"a", rat(q.a())}, {"b", rat(q.b())}, {"radicand", rat(Rational(q.radicand()))}};
}

json slope(const ExtSlope& s) { return s.infinite ? json("+inf") : rat(s.value); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational, got " + j.dump());
}

// ---- text rendering

bool is_quad_object(const json& j) {
    return j.is_object() && j.size() == 3 && j.contains("a") && j.contains("b") && j.contains("radicand");
}

std::string scalar_text(const json& j) {
    if (j.is_null()) return "none";
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) {
            const std::string head = s.substr(0, s.size() - 2);
            if (head.find('/') == std::string::npos && !head.empty()) return head;
        }
        return s;
    }
    if (is_quad_object(j)) {
        const QuadNumber q(parse_rational(j["a"].get<std::string>()), parse_rational(j["b"].get<std::string>()),
                           parse_rational(j["radicand"].get<std::string>()));
        return q.to_string();
    }
    return j.dump();
}

bool is_scalar(const json& j) { return !j.is_structured() || is_quad_object(j); }

bool is_flat_array(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return is_scalar(e); });
}

std::string flat_text(const json& j) {
    std::string s = "(";
    bool first = true;
    for (const auto& e : j) {
        if (!first) s += ", ";
        s += scalar_text(e);
        first = false;
    }
    return s + ")";
}

void render_text(const json& j, int indent, std::ostream& os);

void render_value(const std::string& prefix, const json& value, int indent, std::ostream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_scalar(value)) {
        os << pad << prefix << scalar_text(value) << '\n';
    } else if (is_flat_array(value)) {
        os << pad << prefix << flat_text(value) << '\n';
    } else if (value.is_array() && value.empty()) {
        os << pad << prefix << "(none)\n";
    } else {
        std::string head = prefix;
        while (!head.empty() && head.back() == ' ') head.pop_back();
        os << pad << head << '\n';
        if (value.is_array()) {
            for (const auto& e : value) render_value("- ", e, indent + 2, os);
        } else {
            render_text(value, indent + 2, os);
        }
    }
}

void render_text(const json& j, int indent, std::ostream& os) {
    for (const auto& [key, value] : j.items()) render_value(key + ": ", value, indent, os);
}

// ---- svg

std::string fixed6(const QuadNumber& x) {
    const Integer scale = 1000000;
    const QuadNumber scaled = x * Rational(scale);
    const Integer n = scaled.sign() >= 0 ? floor(scaled) : Integer(-floor(-scaled));
    return fixed_truncated(Rational(n, scale), 6);
}

std::string fixed6(const Rational& q) { return fixed_truncated(q, 6); }

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string class_text(const ChernVector& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
    return s + ")";
}

std::string witness_title(const WallCircle& wall) {
    std::string s;
    for (std::size_t i = 0; i < wall.witnesses.size(); ++i) s += (i ? "; " : "") + class_text(wall.witnesses[i]);
    return "w = " + s;
}

// ---- commands

struct Options {
    std::string variety;
    std::string config_path;
    bool as_json = false;
    std::string out_path;

    std::vector<std::string> classes;
    std::string convention = "chi";
    std::string alpha = "1/4";
    std::string beta = "-1/2";
    std::string mu = "0";
    int shift = 0;
    int max_rank = 3;
    int max_c1 = 3;
    unsigned threads = 1;
    std::optional<std::string> collection;
    std::string gens;
    bool stability_assumed = false;
    std::string beta_min = "-4";
    std::string beta_max = "2";
    std::string alpha_max = "3";
};

struct Context {
    const Options& opt;
    const VarietyDesc& x;

    Collection collection() const {
        if (opt.collection) return parse_class_list(*opt.collection, x);
        return standard_collection(x);
    }
    ChernVector arg(std::size_t i, bool truncated = false) const {
        if (i >= opt.classes.size()) throw ParseError("missing class argument");
        return parse_class(opt.classes[i], x, truncated);
    }
    void expect_args(std::size_t n) const {
        if (opt.classes.size() != n) {
            throw ParseError("expected " + std::to_string(n) + " class argument" + (n == 1 ? "" : "s") + ", got " +
                             std::to_string(opt.classes.size()));
        }
    }
    TiltParams tilt() const { return {parse_rational(opt.alpha), parse_rational(opt.beta), parse_rational(opt.mu)}; }
};

json vectors(const std::vector<ChernVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec(v));
    return a;
}

json wall_json(const WallCircle& w) {
    json j = {{"kind", to_string(w.kind)}};
    if (w.kind == WallCircle::Kind::circle) {
        j["center"] = rat(w.center);
        j["radius_sq"] = rat(w.radius_sq);
    } else if (w.kind == WallCircle::Kind::vertical_line) {
        j["line_beta"] = rat(w.line_beta);
    }
    j["witnesses"] = vectors(w.witnesses);
    return j;
}

json cmd_chi(const Context& c) {
    c.expect_args(2);
    return {{"value", rat(euler_pairing(c.x, c.arg(0), c.arg(1)))}};
}

json cmd_gram(const Context& c) {
    c.expect_args(0);
    GramConvention conv;
    if (c.opt.convention == "chi") {
        conv = GramConvention::chi;
    } else if (c.opt.convention == "paper") {
        conv = GramConvention::paper;
    } else {
        throw ParseError("unknown convention '" + c.opt.convention + "' (chi or paper)");
    }
    return {{"convention", c.opt.convention}, {"matrix", mat(gram_matrix(c.x, conv))}};
}

json cmd_orth(const Context& c) {
    Collection coll;
    if (!c.opt.classes.empty()) {
        for (std::size_t i = 0; i < c.opt.classes.size(); ++i) coll.push_back(c.arg(i));
    } else {
        coll = c.collection();
    }
    const auto basis = right_orthogonal(c.x, coll);
    json coords = json::array();
    for (const auto& b : basis) {
        json row = json::array();
        for (const auto& e : lattice_coords(c.x, b)) row.push_back(e.str());
        coords.push_back(row);
    }
    return {{"collection", vectors(coll)},
            {"numerically_exceptional", is_numerically_exceptional(c.x, coll)},
            {"basis", vectors(basis)},
            {"lattice_coordinates", coords},
            {"rank", basis.size()}};
}

json cmd_project(const Context& c) {
    c.expect_args(1);
    const Collection coll = c.collection();
    const ChernVector v = c.arg(0);
    const ChernVector p = sod_project(c.x, coll, v);
    json chis = json::array();
    for (const auto& e : coll) chis.push_back(rat(euler_pairing(c.x, e, p)));
    return {{"class", vec(v)}, {"projection", vec(p)}, {"chi_with_members", chis}};
}

json cmd_classify(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0);
    const ClassReport r = classify_class(c.x, c.collection(), v);
    json labels = json::array();
    for (const auto l : r.labels) labels.push_back(to_string(l));
    return {{"class", vec(v)},
            {"chi_self", rat(r.chi_self)},
            {"serre_eigenvalue", to_string(r.serre_eigenvalue)},
            {"labels", labels}};
}

json cmd_serre(const Context& c) {
    c.expect_args(0);
    const RatMatrix s = serre_numeric(c.x);
    const Rational sign = (c.x.dim % 2 == 0) ? 1 : -1;
    const RatMatrix twist = sign * twist_matrix(c.x.rank(), Rational(-c.x.index));
    const Collection coll = c.collection();
    return {{"matrix", mat(s)},
            {"matches_canonical_twist", s == twist},
            {"residual_basis", vectors(right_orthogonal(c.x, coll))},
            {"residual_action", mat(residual_serre(c.x, coll))}};
}

json cmd_zh(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0, true);
    const Charge z = charge_h(c.x, v, c.opt.shift);
    return {{"class", vec(v)}, {"shift", c.opt.shift}, {"re", rat(z.re)}, {"im", rat(z.im)},
            {"slope", slope(slope_h(c.x, v))}};
}

json cmd_ztilt(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0, true);
    const TiltParams p = c.tilt();
    const Charge z = charge_tilt(c.x, v, c.opt.shift, p);
    return {{"class", vec(v)}, {"shift", c.opt.shift}, {"alpha", rat(p.alpha)}, {"beta", rat(p.beta)},
            {"re", rat(z.re)}, {"im", rat(z.im)}, {"slope", slope(slope_tilt(c.x, v, p))}};
}

json cmd_heart(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0, true);
    const TiltParams p = c.tilt();
    const HeartVerdict h = heart_case(c.x, v, c.opt.shift, p);
    json checks = json::array();
    for (const auto& chk : h.slope_checks) {
        checks.push_back({{"name", chk.name},
                          {"relation", chk.relation},
                          {"value", slope(chk.value)},
                          {"threshold", rat(chk.threshold)},
                          {"satisfied", chk.satisfied}});
    }
    return {{"class", vec(v)},
            {"shift", h.shift_of_sheaf},
            {"alpha", rat(p.alpha)},
            {"beta", rat(p.beta)},
            {"mu", rat(p.mu)},
            {"case", h.in_heart() ? json(h.case_id) : json("not-in-heart")},
            {"checks", checks}};
}

json cmd_blms(const Context& c) {
    c.expect_args(0);
    const TiltParams p = c.tilt();
    const BlmsReport r = blms_check(c.x, c.collection(), p);
    json conds = json::array();
    for (const auto& cond : r.conditions) {
        conds.push_back({{"id", cond.id}, {"passed", cond.passed}, {"details", cond.details}});
    }
    return {{"alpha", rat(p.alpha)},
            {"beta", rat(p.beta)},
            {"mu", rat(p.mu)},
            {"verdict", r.passed ? "PASS" : "FAIL"},
            {"conditions", conds}};
}

json cmd_alpha_range(const Context& c) {
    c.expect_args(0);
    const Rational beta = parse_rational(c.opt.beta);
    const Rational mu = parse_rational(c.opt.mu);
    json intervals = json::array();
    for (const auto& iv : alpha_range(c.x, c.collection(), beta, mu)) {
        intervals.push_back({{"lower", quad(iv.lower)},
                             {"lower_closed", iv.lower_closed},
                             {"upper", iv.upper ? quad(*iv.upper) : json("+inf")},
                             {"upper_closed", iv.upper_closed},
                             {"text", to_string(iv)}});
    }
    return {{"beta", rat(beta)}, {"mu", rat(mu)}, {"intervals", intervals}};
}

json beta_zero_json(const BetaZero& bz) {
    return {{"F", rat(bz.F)}, {"beta0", quad(bz.beta0)}, {"bound", quad(bz.bound)}};
}

json cmd_beta0(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0, true);
    json j = beta_zero_json(beta_zero(c.x, v));
    j["class"] = vec(v.head(3));
    return j;
}

json cmd_nowall(const Context& c) {
    c.expect_args(1);
    const ChernVector v = c.arg(0, true);
    const NoWallCertificate cert = nowall_certificate(c.x, v);
    json j = beta_zero_json(cert.beta0);
    j["class"] = vec(v.head(3));
    j["certified"] = cert.certified;
    j["interval"] = "(0, " + cert.beta0.bound.to_string() + ")";
    j["step"] = cert.lattice_step ? rat(*cert.lattice_step) : json(nullptr);
    if (cert.witness) {
        j["witness"] = {rat(cert.witness->first), rat(cert.witness->second)};
        j["witness_value"] = quad(*cert.witness_value);
    } else {
        j["witness"] = nullptr;
    }
    j["conclusion"] = cert.conclusion;
    return j;
}

std::vector<WallCircle> scan(const Context& c, ChernVector& v) {
    c.expect_args(1);
    v = c.arg(0, true);
    if (c.opt.max_rank < 0 || c.opt.max_c1 < 0) throw ParseError("scan bounds must be nonnegative");
    return wall_scan(c.x, v, {c.opt.max_rank, c.opt.max_c1}, c.opt.threads);
}

json cmd_walls(const Context& c) {
    ChernVector v;
    const auto walls = scan(c, v);
    json list = json::array();
    for (const auto& w : walls) list.push_back(wall_json(w));
    return {{"class", vec(v.head(3))},
            {"bounds", {{"max_rank", c.opt.max_rank}, {"max_c1", c.opt.max_c1}}},
            {"label", "candidate numerical walls"},
            {"walls", list}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << content;
}

}  // namespace

std::string render_walls_svg(const std::vector<WallCircle>& walls, const Viewport& vp) {
    if (vp.beta_max <= vp.beta_min || vp.alpha_max <= 0) throw DomainError("empty viewport");
    const Rational px(100);
    const std::string x0 = fixed6(vp.beta_min * px), x1 = fixed6(vp.beta_max * px);
    const std::string top = fixed6(-vp.alpha_max * px);
    const std::string width = fixed6((vp.beta_max - vp.beta_min) * px), height = fixed6(vp.alpha_max * px);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"" << x0 << ' ' << top << ' ' << width << ' ' << height << "\">\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << top << "\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"#fafafa\"/>\n";
    os << "<line class=\"axis\" x1=\"" << x0 << "\" y1=\"0.000000\" x2=\"" << x1
       << "\" y2=\"0.000000\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    if (vp.beta_min <= 0 && vp.beta_max >= 0) {
        os << "<line class=\"axis\" x1=\"0.000000\" y1=\"0.000000\" x2=\"0.000000\" y2=\"" << top
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    for (const auto& w : walls) {
        const std::string title = "<title>" + xml_escape(witness_title(w)) + "</title>";
        if (w.kind == WallCircle::Kind::circle) {
            const QuadNumber left(w.center * px, -px, w.radius_sq);
            const QuadNumber right(w.center * px, px, w.radius_sq);
            const std::string r = fixed_truncated_sqrt(w.radius_sq * px * px, 6);
            os << "<path class=\"wall\" d=\"M " << fixed6(left) << " 0.000000 A " << r << ' ' << r << " 0 0 1 "
               << fixed6(right) << " 0.000000\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\">" << title
               << "</path>\n";
        } else if (w.kind == WallCircle::Kind::vertical_line) {
            const std::string lx = fixed6(w.line_beta * px);
            os << "<line class=\"wall\" x1=\"" << lx << "\" y1=\"0.000000\" x2=\"" << lx << "\" y2=\"" << top
               << "\" stroke=\"#2c3e50\" stroke-width=\"1\">" << title << "</line>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

Config parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config: top level must be an object");
    Config config;
    try {
        const json entries = doc.value("varieties", json::array());
        if (!entries.is_array()) throw ParseError("config: 'varieties' must be an array");
        for (const auto& e : entries) {
            VarietyDesc x;
            x.name = lowercase(e.at("name").get<std::string>());
            x.dim = e.at("dim").get<int>();
            if (x.dim < 2) throw ParseError("config: " + x.name + ": dim must be at least 2");
            const Rational degree = rational_from_json(e.at("degree"));
            if (!is_integer(degree) || degree <= 0) throw ParseError("config: " + x.name + ": degree must be a positive integer");
            x.degree = numerator(degree);
            x.index = e.at("index").get<int>();
            const auto& todd = e.at("todd");
            const auto& denoms = e.at("denoms");
            if (!todd.is_array() || static_cast<int>(todd.size()) != x.dim + 1 || !denoms.is_array() ||
                static_cast<int>(denoms.size()) != x.dim + 1) {
                throw ParseError("config: " + x.name + ": todd and denoms need dim + 1 entries");
            }
            x.todd = RatVector(x.dim + 1);
            for (int i = 0; i <= x.dim; ++i) x.todd(i) = rational_from_json(todd[static_cast<std::size_t>(i)]);
            for (const auto& dn : denoms) {
                const Rational q = rational_from_json(dn);
                if (!is_integer(q) || q <= 0) throw ParseError("config: " + x.name + ": denoms must be positive integers");
                x.denoms.push_back(numerator(q));
            }
            x.low_deg_H_generated = e.value("low_deg_H_generated", false);
            if (e.contains("generators")) {
                for (const auto& g : e.at("generators")) {
                    if (!g.is_array() || static_cast<int>(g.size()) != x.dim + 1) {
                        throw ParseError("config: " + x.name + ": generators need dim + 1 entries");
                    }
                    ChernVector v(x.dim + 1);
                    for (int i = 0; i <= x.dim; ++i) v(i) = rational_from_json(g[static_cast<std::size_t>(i)]);
                    x.generators.push_back(v);
                }
            }
            for (const auto& other : config.varieties) {
                if (other.name == x.name) throw ParseError("config: duplicate variety name '" + x.name + "'");
            }
            if (find_preset(x.name) != nullptr) throw ParseError("config: '" + x.name + "' shadows a preset");
            config.varieties.push_back(std::move(x));
        }
        if (doc.contains("default_variety")) {
            config.default_variety = lowercase(doc.at("default_variety").get<std::string>());
            if (find_variety(config, *config.default_variety) == nullptr) {
                throw ParseError("config: unknown default_variety '" + *config.default_variety + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

const VarietyDesc* find_variety(const Config& config, std::string_view name) {
    const std::string key = lowercase(name);
    for (const auto& x : config.varieties) {
        if (x.name == key) return &x;
    }
    return find_preset(key);
}

ChernVector parse_class(std::string_view token, const VarietyDesc& x, bool allow_truncated) {
    const std::string t = trim(token);
    if (t.empty()) throw ParseError("empty class token");
    if (t == "O") return line_bundle_class(x, 0);
    if (t.size() > 3 && t.compare(0, 2, "O(") == 0 && t.back() == ')') {
        const std::string inner = trim(std::string_view(t).substr(2, t.size() - 3));
        Rational k;
        try {
            k = parse_rational(inner);
        } catch (const ParseError&) {
            throw ParseError("malformed twist in '" + t + "'");
        }
        if (!is_integer(k) || abs(k) > 1000000) throw ParseError("twist must be an integer in '" + t + "'");
        return line_bundle_class(x, numerator(k).convert_to<long>());
    }
    if (t == "S") {
        if (x.name != "q3" && x.name != "y4") throw ParseError("unknown symbol 'S' for variety " + x.name);
        ChernVector v(4);
        v << 2, -1, 0, Rational(1, 12);
        return v;
    }
    if (std::isalpha(static_cast<unsigned char>(t.front()))) throw ParseError("unknown symbol '" + t + "'");
    const auto parts = split(t, ',');
    const auto n = static_cast<Eigen::Index>(parts.size());
    if (n != x.rank() && !(allow_truncated && n == 3)) {
        throw ParseError("wrong arity: '" + t + "' has " + std::to_string(n) + " entries, " + x.name + " needs " +
                         std::to_string(x.rank()) + (allow_truncated ? " (or 3)" : ""));
    }
    ChernVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = parse_rational(parts[static_cast<std::size_t>(i)]);
    return v;
}

std::vector<ChernVector> parse_class_list(std::string_view list, const VarietyDesc& x) {
    std::vector<ChernVector> out;
    if (trim(list).empty()) return out;
    for (const auto& token : split(list, ';')) out.push_back(parse_class(token, x));
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact numerical K-theory and tilt-stability checks", "kuznum"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--variety", opt.variety, "variety name (p4, q3, y4, y2 or a config entry)");
    app.add_option("--config", opt.config_path, "JSON file with extra varieties");
    app.add_flag("--json", opt.as_json, "print the report as JSON");
    app.add_option("--out", opt.out_path, "write the report (or SVG) to this file");

    using Handler = std::function<json(const Context&)>;
    std::map<std::string, Handler> handlers;
    std::map<std::string, CLI::App*> subs;

    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("classes", opt.classes, "class tokens: O(k), S or c0,c1,...");
        handlers[name] = std::move(h);
        subs[name] = sub;
        return sub;
    };
    auto tilt_opts = [&](CLI::App* sub, bool with_alpha) {
        if (with_alpha) sub->add_option("--alpha", opt.alpha, "alpha > 0 (rational)");
        sub->add_option("--beta", opt.beta, "beta (rational)");
        sub->add_option("--mu", opt.mu, "double-tilt threshold (rational)");
    };
    auto collection_opt = [&](CLI::App* sub) {
        sub->add_option("--collection", opt.collection, "exceptional collection, e.g. \"O;O(1);O(2)\"");
    };
    auto scan_opts = [&](CLI::App* sub) {
        sub->add_option("--max-rank", opt.max_rank, "bound on |c0| of destabilizing classes");
        sub->add_option("--max-c1", opt.max_c1, "bound on |c1| of destabilizing classes");
        sub->add_option("--threads", opt.threads, "worker threads for the scan");
    };

    add("chi", "Euler pairing chi(v, w)", cmd_chi);
    add("gram", "Gram matrix of chi in the basis 1, H, ..., H^n", cmd_gram)
        ->add_option("--convention", opt.convention, "chi or paper (chi divided by the degree)");
    collection_opt(add("orth", "right orthogonal lattice of a collection", cmd_orth));
    collection_opt(add("project", "projection onto the right orthogonal", cmd_project));
    collection_opt(add("classify", "classify a residual class", cmd_classify));
    collection_opt(add("serre", "numerical Serre action", cmd_serre));
    add("zh", "Z_H and mu_H", cmd_zh)->add_option("--shift", opt.shift, "shift k of E[k]");
    auto* ztilt = add("ztilt", "Z_{alpha,beta} and mu_{alpha,beta}", cmd_ztilt);
    tilt_opts(ztilt, true);
    ztilt->add_option("--shift", opt.shift, "shift k of E[k]");
    auto* heart = add("heart", "membership in the double-tilted heart", cmd_heart);
    tilt_opts(heart, true);
    heart->add_option("--shift", opt.shift, "shift of the sheaf (0, 1 or 2)");
    auto* blms = add("blms", "check the three conditions for an induced stability condition", cmd_blms);
    tilt_opts(blms, true);
    collection_opt(blms);
    auto* arange = add("alpha-range", "alpha > 0 where the induced-stability check passes", cmd_alpha_range);
    tilt_opts(arange, false);
    collection_opt(arange);
    add("beta0", "the beta_0 line of a truncated class", cmd_beta0);
    add("nowall", "no-wall certificate along the beta_0 line", cmd_nowall);
    scan_opts(add("walls", "bounded scan for candidate numerical walls", cmd_walls));
    auto* svg = add("svg", "render the wall scan as SVG", nullptr);
    scan_opts(svg);
    svg->add_option("--beta-min", opt.beta_min, "left edge of the viewport");
    svg->add_option("--beta-max", opt.beta_max, "right edge of the viewport");
    svg->add_option("--alpha-max", opt.alpha_max, "top edge of the viewport");
    auto* fullness = add("fullness", "fullness checklist for a collection plus residual generators", nullptr);
    collection_opt(fullness);
    fullness->add_option("--gens", opt.gens, "residual generators, e.g. \"S\"");
    fullness->add_flag("--stability-assumed", opt.stability_assumed, "assume a numerical stability condition on the residual");

    std::vector<const char*> argv{"kuznum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    std::string command;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) command = name;
    }

    try {
        Config config;
        if (!opt.config_path.empty()) config = load_config(opt.config_path);
        std::string name = opt.variety;
        if (name.empty()) name = config.default_variety.value_or("q3");
        const VarietyDesc* x = find_variety(config, name);
        if (x == nullptr) throw ParseError("unknown variety '" + name + "'");
        for (const auto& w : consistency_warnings(*x)) err << "warning: " << w << "\n";
        const Context ctx{opt, *x};

        if (command == "svg") {
            ChernVector v;
            const auto walls = scan(ctx, v);
            const Viewport vp{parse_rational(opt.beta_min), parse_rational(opt.beta_max), parse_rational(opt.alpha_max)};
            const std::string doc = render_walls_svg(walls, vp);
            if (opt.out_path.empty()) {
                out << doc;
            } else {
                write_file(opt.out_path, doc);
                const json report = {{"command", command}, {"variety", x->name},
                                     {"result", {{"file", opt.out_path}, {"walls", walls.size()}}}};
                if (opt.as_json) {
                    out << report.dump(2) << "\n";
                } else {
                    render_text(report, 0, out);
                }
            }
            return 0;
        }

        json result;
        if (command == "fullness") {
            ctx.expect_args(0);
            const FullnessVerdict v =
                fullness_report(*x, ctx.collection(), parse_class_list(opt.gens, *x), opt.stability_assumed);
            json checks = json::array();
            for (const auto& chk : v.checks) {
                checks.push_back({{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
            }
            result = {{"verdict", to_string(v.verdict)},
                      {"collection_rank", v.collection_rank},
                      {"residual_rank", v.residual_rank},
                      {"total_rank", v.total_rank},
                      {"stability_assumed", v.stability_assumed},
                      {"checks", checks}};
        } else {
            result = handlers.at(command)(ctx);
        }
        const json report = {{"command", command}, {"variety", x->name}, {"result", result}};
        std::ostringstream body;
        if (opt.as_json) {
            body << report.dump(2) << "\n";
        } else {
            render_text(report, 0, body);
        }
        if (opt.out_path.empty()) {
            out << body.str();
        } else {
            write_file(opt.out_path, body.str());
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace kuznum::cli

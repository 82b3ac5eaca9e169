#include "strata/json_io.hpp"

#include <fstream>

namespace strata {

namespace {

void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw input_error(where + ": expected a JSON object");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw input_error(where + ": unknown field '" + key + "'");
    }
}

int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw input_error(where + ": expected an integer");
    return j.get<int>();
}

long long get_ll(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw input_error(where + ": expected an integer");
    return j.get<long long>();
}

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw input_error(where + ": expected a string");
    return j.get<std::string>();
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw input_error(where + ": malformed rational '" + s + "'");
        }
    }
    throw input_error(where + ": expected an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
    if (r.den() == 1) return json(r.num());
    return json(std::to_string(r.num()) + "/" + std::to_string(r.den()));
}

GradedBasis classes_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of classes");
    GradedBasis out;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        expect_object(j[i], at);
        check_keys(j[i], {"degree", "label"}, at);
        if (!j[i].contains("degree")) throw input_error(at + ": missing 'degree'");
        GradedClass c;
        c.degree = get_int(j[i]["degree"], at + ".degree");
        c.label = j[i].contains("label") ? get_string(j[i]["label"], at + ".label") : "";
        out.classes.push_back(std::move(c));
    }
    return out;
}

json classes_to_json(const GradedBasis& b) {
    json out = json::array();
    for (const GradedClass& c : b.classes) out.push_back({{"degree", c.degree}, {"label", c.label}});
    return out;
}

MiddleStructure middle_from_json(const json& j, const std::string& where) {
    expect_object(j, where);
    check_keys(j, {"basis", "star"}, where);
    if (!j.contains("basis") || !j["basis"].is_array())
        throw input_error(where + ": middle structure needs a 'basis' array");
    MiddleStructure out;
    for (const json& s : j["basis"]) out.basis.push_back(get_string(s, where + ".basis"));
    if (j.contains("star")) {
        IntMat star;
        if (!j["star"].is_array()) throw input_error(where + ".star: expected a matrix");
        for (const json& row : j["star"]) {
            IntRow r;
            if (!row.is_array()) throw input_error(where + ".star: expected a matrix");
            for (const json& v : row) r.push_back(get_ll(v, where + ".star"));
            star.push_back(std::move(r));
        }
        out.star = std::move(star);
    }
    return out;
}

json middle_to_json(const MiddleStructure& m) {
    json out{{"basis", m.basis}};
    if (m.star) out["star"] = *m.star;
    return out;
}

}  // namespace

json to_json(const GradedPoly& p) {
    json out = json::object();
    for (const auto& [deg, c] : p.coeffs()) out[std::to_string(deg)] = c;
    return out;
}

GradedPoly poly_from_json(const json& j) {
    expect_object(j, "polynomial");
    GradedPoly out;
    for (const auto& [key, value] : j.items()) {
        size_t used = 0;
        int deg = 0;
        try {
            deg = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != key.size()) throw input_error("polynomial: degree key '" + key + "' is not an integer");
        const long long c = get_ll(value, "polynomial[" + key + "]");
        if (c < 0) throw input_error("polynomial: negative coefficient at degree " + key);
        if (c > 0) out.add_coeff(deg, c);
    }
    return out;
}

json to_json(const Subspace& w) { return json{{"span", w.span}}; }

Subspace subspace_from_json(const json& j) {
    expect_object(j, "subspace");
    check_keys(j, {"span"}, "subspace");
    if (!j.contains("span") || !j["span"].is_array()) throw input_error("subspace: needs a 'span' array");
    IntMat rows;
    for (const json& row : j["span"]) {
        if (!row.is_array()) throw input_error("subspace: span rows must be arrays");
        IntRow r;
        for (const json& v : row) r.push_back(get_ll(v, "subspace.span"));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return Subspace::zero();
    const int ambient = static_cast<int>(rows[0].size());
    for (const IntRow& r : rows)
        if (static_cast<int>(r.size()) != ambient) throw input_error("subspace: span rows have mixed lengths");
    return Subspace::from_span(std::move(rows), ambient);
}

json to_json(const SpaceExpr& s) {
    switch (s.kind) {
        case SpaceKind::Point: return json("point");
        case SpaceKind::Circle: return json("circle");
        case SpaceKind::Torus: return json{{"torus", s.param}};
        case SpaceKind::Sphere: return json{{"sphere", s.param}};
        case SpaceKind::Disc: return json{{"disc", s.param}};
        case SpaceKind::Cone:
        case SpaceKind::Suspension: {
            json node{{"link", to_json(*s.link)}};
            if (!s.w.is_zero()) node["w"] = to_json(s.w);
            return json{{s.kind == SpaceKind::Cone ? "cone" : "suspension", std::move(node)}};
        }
        case SpaceKind::Product: return json{{"product", json::array({to_json(*s.left), to_json(*s.right)})}};
        case SpaceKind::Smooth: {
            json node{{"name", s.name}, {"classes", classes_to_json(s.smooth_basis)}, {"dim", s.smooth_dim}};
            if (s.smooth_middle) node["middle"] = middle_to_json(*s.smooth_middle);
            return json{{"smooth", std::move(node)}};
        }
    }
    throw std::logic_error("unreachable space kind");
}

SpacePtr space_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "point") return make_point();
        if (s == "circle") return make_circle();
        throw input_error("space: unknown primitive '" + s + "'");
    }
    expect_object(j, "space");
    if (j.size() != 1) throw input_error("space: expected exactly one constructor key");
    const std::string kind = j.begin().key();
    const json& body = j.begin().value();
    if (kind == "torus") return make_torus(get_int(body, "torus"));
    if (kind == "sphere") return make_sphere(get_int(body, "sphere"));
    if (kind == "disc") return make_disc(get_int(body, "disc"));
    if (kind == "cone" || kind == "suspension") {
        expect_object(body, kind);
        check_keys(body, {"link", "w"}, kind);
        if (!body.contains("link")) throw input_error(kind + ": missing 'link'");
        SpacePtr link = space_from_json(body["link"]);
        Subspace w = body.contains("w") ? subspace_from_json(body["w"]) : Subspace::zero();
        return kind == "cone" ? make_cone(std::move(link), std::move(w))
                              : make_suspension(std::move(link), std::move(w));
    }
    if (kind == "product") {
        if (!body.is_array() || body.size() < 2) throw input_error("product: expected an array of >= 2 factors");
        SpacePtr out = space_from_json(body[0]);
        for (size_t i = 1; i < body.size(); ++i) out = make_product(std::move(out), space_from_json(body[i]));
        return out;
    }
    if (kind == "smooth") {
        expect_object(body, "smooth");
        check_keys(body, {"name", "classes", "dim", "middle"}, "smooth");
        if (!body.contains("name") || !body.contains("classes"))
            throw input_error("smooth: needs 'name' and 'classes'");
        std::optional<MiddleStructure> middle;
        if (body.contains("middle")) middle = middle_from_json(body["middle"], "smooth.middle");
        const int dim = body.contains("dim") ? get_int(body["dim"], "smooth.dim") : -1;
        return make_smooth(get_string(body["name"], "smooth.name"),
                           classes_from_json(body["classes"], "smooth.classes"), std::move(middle), dim);
    }
    throw input_error("space: unknown constructor '" + kind + "'");
}

json to_json(const MorseProblem& p) {
    json comps = json::array();
    for (const CriticalComponent& c : p.components) {
        json stable = json::array();
        for (const SpacePtr& f : c.stable) stable.push_back(to_json(*f));
        json unstable = json::array();
        for (const SpacePtr& f : c.unstable) unstable.push_back(to_json(*f));
        comps.push_back({{"name", c.name},
                         {"base", to_json(*c.base)},
                         {"stable", std::move(stable)},
                         {"unstable", std::move(unstable)},
                         {"h_value", rational_to_json(c.h_value)}});
    }
    json out{{"space", to_json(*p.space)}, {"components", std::move(comps)}};
    if (!p.label.empty()) out["label"] = p.label;
    return out;
}

MorseProblem morse_from_json(const json& j) {
    expect_object(j, "morse");
    check_keys(j, {"space", "components", "label"}, "morse");
    if (!j.contains("space") || !j.contains("components"))
        throw input_error("morse: needs 'space' and 'components'");
    if (!j["components"].is_array()) throw input_error("morse.components: expected an array");
    MorseProblem out;
    out.space = space_from_json(j["space"]);
    if (j.contains("label")) out.label = get_string(j["label"], "morse.label");
    for (size_t i = 0; i < j["components"].size(); ++i) {
        const json& cj = j["components"][i];
        const std::string at = "morse.components[" + std::to_string(i) + "]";
        expect_object(cj, at);
        check_keys(cj, {"name", "base", "stable", "unstable", "h_value"}, at);
        if (!cj.contains("name")) throw input_error(at + ": missing 'name'");
        CriticalComponent c;
        c.name = get_string(cj["name"], at + ".name");
        c.base = cj.contains("base") ? space_from_json(cj["base"]) : make_point();
        for (const char* side : {"stable", "unstable"}) {
            if (!cj.contains(side)) continue;
            if (!cj[side].is_array()) throw input_error(at + "." + side + ": expected an array");
            for (const json& f : cj[side])
                (side == std::string("stable") ? c.stable : c.unstable).push_back(space_from_json(f));
        }
        if (cj.contains("h_value")) c.h_value = rational_from_json(cj["h_value"], at + ".h_value");
        out.components.push_back(std::move(c));
    }
    validate(out);
    return out;
}

json to_json(const SpectralModel& m) {
    json out{{"kind", m.kind == SpectralKind::SpindleCircle ? "spindle_circle" : "suspension_torus2"},
             {"grid_points", m.grid_points},
             {"mode_cutoff", m.mode_cutoff},
             {"epsilon", m.epsilons},
             {"threshold", m.threshold ? json(*m.threshold) : json("auto")}};
    if (m.kind == SpectralKind::SuspensionTorus2) out["w"] = to_json(m.w);
    return out;
}

SpectralModel spectral_from_json(const json& j) {
    expect_object(j, "spectral");
    check_keys(j, {"kind", "w", "grid_points", "mode_cutoff", "epsilon", "threshold"}, "spectral");
    if (!j.contains("kind")) throw input_error("spectral: missing 'kind'");
    SpectralModel out;
    const std::string kind = get_string(j["kind"], "spectral.kind");
    if (kind == "spindle_circle")
        out.kind = SpectralKind::SpindleCircle;
    else if (kind == "suspension_torus2")
        out.kind = SpectralKind::SuspensionTorus2;
    else
        throw input_error("spectral.kind: unknown model '" + kind + "'");
    if (j.contains("w")) {
        if (out.kind == SpectralKind::SpindleCircle)
            throw input_error("spectral: 'w' applies only to suspension_torus2");
        out.w = subspace_from_json(j["w"]);
    }
    if (j.contains("grid_points")) out.grid_points = get_int(j["grid_points"], "spectral.grid_points");
    if (j.contains("mode_cutoff")) out.mode_cutoff = get_int(j["mode_cutoff"], "spectral.mode_cutoff");
    if (j.contains("epsilon")) {
        if (!j["epsilon"].is_array()) throw input_error("spectral.epsilon: expected an array");
        for (const json& e : j["epsilon"]) {
            if (!e.is_number()) throw input_error("spectral.epsilon: expected numbers");
            out.epsilons.push_back(e.get<double>());
        }
    }
    if (j.contains("threshold") && !(j["threshold"].is_string() && j["threshold"] == "auto")) {
        if (!j["threshold"].is_number()) throw input_error("spectral.threshold: expected a number or \"auto\"");
        out.threshold = j["threshold"].get<double>();
    }
    validate(out);
    return out;
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw input_error("output format must be text, json, or csv; got '" + s + "'");
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "text";
}

json to_json(const ProblemFile& f) {
    json out{{"version", f.version}};
    if (f.cohomology) out["cohomology"] = to_json(*f.cohomology);
    if (f.morse) out["morse"] = to_json(*f.morse);
    if (f.spectral) out["spectral"] = to_json(*f.spectral);
    out["output"] = json{{"format", to_string(f.format)}, {"verbosity", f.verbosity}};
    return out;
}

ProblemFile problem_from_json(const json& j) {
    expect_object(j, "problem file");
    check_keys(j, {"version", "cohomology", "morse", "spectral", "output"}, "problem file");
    if (!j.contains("version")) throw input_error("problem file: missing 'version'");
    ProblemFile out;
    out.version = get_int(j["version"], "version");
    if (out.version != 1) throw input_error("problem file: unsupported version " + std::to_string(out.version));
    int problems = 0;
    if (j.contains("cohomology")) {
        out.cohomology = space_from_json(j["cohomology"]);
        ++problems;
    }
    if (j.contains("morse")) {
        out.morse = morse_from_json(j["morse"]);
        ++problems;
    }
    if (j.contains("spectral")) {
        out.spectral = spectral_from_json(j["spectral"]);
        ++problems;
    }
    if (problems != 1)
        throw input_error("problem file: needs exactly one of 'cohomology', 'morse', 'spectral'");
    if (j.contains("output")) {
        const json& o = j["output"];
        expect_object(o, "output");
        check_keys(o, {"format", "verbosity"}, "output");
        if (o.contains("format")) out.format = format_from_string(get_string(o["format"], "output.format"));
        if (o.contains("verbosity")) out.verbosity = get_int(o["verbosity"], "output.verbosity");
    }
    return out;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open problem file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
    return problem_from_json(j);
}

}  // namespace strata

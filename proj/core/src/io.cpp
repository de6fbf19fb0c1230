#include "padic/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "padic/errors.hpp"

namespace padic {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON");
    return j;
}

Rat rat_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        throw SchemaError(std::string("expected string field '") + key + "'");
    try {
        return rat_from_string(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

long int_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        throw SchemaError(std::string("expected integer field '") + key + "'");
    return it->get<long>();
}

PSeries poly_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("poly: expected object");
    long vars = int_field(j, "vars");
    if (vars < 1) throw SchemaError("poly: vars must be positive");
    auto terms = j.find("terms");
    if (terms == j.end() || !terms->is_array())
        throw SchemaError("poly: expected array field 'terms'");
    PSeries f(static_cast<int>(vars));
    for (const auto& t : *terms) {
        if (!t.is_object()) throw SchemaError("poly: term must be an object");
        auto exp = t.find("exp");
        if (exp == t.end() || !exp->is_array() ||
            exp->size() != static_cast<size_t>(vars))
            throw SchemaError("poly: term 'exp' must list one exponent per variable");
        std::vector<uint32_t> e;
        for (const auto& x : *exp) {
            if (!x.is_number_integer() || x.get<long>() < 0)
                throw SchemaError("poly: exponents must be nonnegative integers");
            e.push_back(static_cast<uint32_t>(x.get<long>()));
        }
        Rat num = rat_field(t, "num");
        Rat den = t.contains("den") ? rat_field(t, "den") : Rat(1);
        if (den == 0) throw SchemaError("poly: zero denominator");
        f.add_term(MultiIndex(std::move(e)), num / den);
    }
    return f;
}

json poly_to_json(const PSeries& f) {
    json terms = json::array();
    for (const auto& [a, c] : f.terms()) {
        json t;
        t["exp"] = a.entries();
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return json{{"vars", f.dim()}, {"terms", std::move(terms)}};
}

LaurentSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("domain: expected object");
    LaurentSpec spec;
    auto read_side = [&](const char* key, const char* bound_key,
                         std::vector<LaurentConstraint>& out) {
        auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_array()) throw SchemaError(std::string("domain: '") + key +
                                               "' must be an array");
        for (const auto& c : *it) {
            if (!c.is_object() || !c.contains("poly"))
                throw SchemaError("domain: constraint needs a 'poly'");
            PSeries f = poly_from_json(c.at("poly"));
            Rat q = rat_field(c, bound_key);
            out.push_back({std::move(f), Radius::from_log(std::move(q))});
        }
    };
    read_side("caps", "log_r", spec.caps);
    read_side("cups", "log_s", spec.cups);
    if (j.contains("vars")) {
        spec.d = static_cast<int>(int_field(j, "vars"));
    } else if (!spec.caps.empty()) {
        spec.d = spec.caps.front().poly.dim();
    } else if (!spec.cups.empty()) {
        spec.d = spec.cups.front().poly.dim();
    } else {
        throw SchemaError("domain: unconstrained spec needs 'vars'");
    }
    spec.validate();
    return spec;
}

json spec_to_json(const LaurentSpec& spec) {
    auto side = [](const std::vector<LaurentConstraint>& cs, const char* bound_key) {
        json arr = json::array();
        for (const auto& c : cs) {
            json e;
            e["poly"] = poly_to_json(c.poly);
            e[bound_key] = c.bound.logp.value().get_str();
            arr.push_back(std::move(e));
        }
        return arr;
    };
    return json{{"vars", spec.d},
                {"caps", side(spec.caps, "log_r")},
                {"cups", side(spec.cups, "log_s")}};
}

DiffSystem system_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("system: expected object");
    DiffSystem sys;
    long p = int_field(j, "p");
    if (p < 2) throw SchemaError("system: p must be a prime >= 2");
    sys.p = static_cast<unsigned long>(p);
    sys.d = static_cast<int>(int_field(j, "d"));
    sys.mu = static_cast<int>(int_field(j, "mu"));
    if (sys.d < 1 || sys.mu < 1) throw SchemaError("system: d and mu must be positive");

    auto g = j.find("G");
    if (g == j.end() || !g->is_array() || g->size() != static_cast<size_t>(sys.d))
        throw SchemaError("system: 'G' must list one matrix per coordinate");
    for (const auto& mat : *g) {
        if (!mat.is_array() || mat.size() != static_cast<size_t>(sys.mu))
            throw SchemaError("system: each matrix needs mu rows");
        std::vector<std::vector<RatFunc>> rows;
        for (const auto& row : mat) {
            if (!row.is_array() || row.size() != static_cast<size_t>(sys.mu))
                throw SchemaError("system: each matrix row needs mu entries");
            std::vector<RatFunc> out_row;
            for (const auto& e : row) {
                if (!e.is_object() || !e.contains("num"))
                    throw SchemaError("system: entry needs a 'num' polynomial");
                PSeries num = poly_from_json(e.at("num"));
                PSeries den = e.contains("den")
                                  ? poly_from_json(e.at("den"))
                                  : PSeries::constant(sys.d, Rat(1));
                RatFunc rf{std::move(num), std::move(den)};
                rf.normalize();
                out_row.push_back(std::move(rf));
            }
            rows.push_back(std::move(out_row));
        }
        sys.G.push_back(std::move(rows));
    }

    auto dom = j.find("domain");
    if (dom == j.end()) {
        sys.domain = LaurentSpec::polydisk(sys.d);
    } else {
        sys.domain = spec_from_json(*dom);
    }
    sys.validate();
    return sys;
}

json system_to_json(const DiffSystem& sys) {
    json g = json::array();
    for (const auto& mat : sys.G) {
        json jm = json::array();
        for (const auto& row : mat) {
            json jr = json::array();
            for (const auto& rf : row) {
                jr.push_back(json{{"num", poly_to_json(rf.num)},
                                  {"den", poly_to_json(rf.den)}});
            }
            jm.push_back(std::move(jr));
        }
        g.push_back(std::move(jm));
    }
    return json{{"p", sys.p},
                {"d", sys.d},
                {"mu", sys.mu},
                {"G", std::move(g)},
                {"domain", spec_to_json(sys.domain)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

PSeries poly_from_json_text(const std::string& text) {
    return poly_from_json(parse_text(text));
}

std::string poly_to_json_text(const PSeries& f) { return poly_to_json(f).dump(); }

LaurentSpec spec_from_json_text(const std::string& text) {
    return spec_from_json(parse_text(text));
}

std::string spec_to_json_text(const LaurentSpec& spec) {
    return spec_to_json(spec).dump();
}

DiffSystem system_from_json_text(const std::string& text) {
    return system_from_json(parse_text(text));
}

std::string system_to_json_text(const DiffSystem& sys) {
    return system_to_json(sys).dump();
}

PSeries load_poly(const std::string& path) {
    return poly_from_json_text(read_file(path));
}

LaurentSpec load_spec(const std::string& path) {
    return spec_from_json_text(read_file(path));
}

DiffSystem load_system(const std::string& path) {
    return system_from_json_text(read_file(path));
}

}  // namespace padic

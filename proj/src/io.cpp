#include "eesurf/io.hpp"

#include <cctype>

namespace eesurf {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::ParseError, path + ": " + msg);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) fail(path, std::string("missing field '") + key + "'");
    return obj.at(key);
}

long json_long(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long>();
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// "a", "t", "-t", "a+b*t", "b*t", "a-t"
QuadElem parse_quad_string(const RingSpec& ring, const std::string& raw, const std::string& path) {
    std::string s = strip(raw);
    if (s.empty()) fail(path, "empty value");
    Rational a = 0, b = 0;
    std::size_t pos = s.find('t');
    try {
        if (pos == std::string::npos) {
            a = parse_rational(s);
        } else {
            if (pos + 1 != s.size()) fail(path, "bad element '" + raw + "'");
            std::string head = s.substr(0, pos);
            std::size_t split = std::string::npos;
            for (std::size_t i = 1; i < head.size(); ++i)
                if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') split = i;
            std::string coef = head;
            if (split != std::string::npos) {
                a = parse_rational(head.substr(0, split));
                coef = head.substr(split);
            }
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+") b = 1;
            else if (coef == "-") b = -1;
            else b = parse_rational(coef[0] == '+' ? coef.substr(1) : coef);
        }
    } catch (const Error&) {
        fail(path, "bad element '" + raw + "'");
    }
    return QuadElem(ring, a, b);
}

}  // namespace

Rational parse_json_rational(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(strip(v.get<std::string>()));
        } catch (const Error&) {
            fail(path, "bad rational '" + v.get<std::string>() + "'");
        }
    }
    fail(path, "expected an integer or a rational string");
}

QuadElem parse_quad(const RingSpec& ring, const Json& v, const std::string& path) {
    if (v.is_array()) {
        if (v.size() != 2) fail(path, "expected [a, b]");
        return QuadElem(ring, parse_json_rational(v[0], path + "[0]"), parse_json_rational(v[1], path + "[1]"));
    }
    if (v.is_string()) return parse_quad_string(ring, v.get<std::string>(), path);
    return QuadElem(ring, parse_json_rational(v, path));
}

InputDocument parse_input(const Json& doc) {
    if (!doc.is_object()) fail("$", "expected an object");
    InputDocument in;
    const Json& r = field(doc, "ring", "$");
    long d = json_long(field(r, "d", "$.ring"), "$.ring.d");
    long f = json_long(field(r, "f", "$.ring"), "$.ring.f");
    try {
        in.ring = make_ring(d, f);
    } catch (const Error& e) {
        fail("$.ring", e.what());
    }
    const Json& gens = field(doc, "generators", "$");
    if (!gens.is_array()) fail("$.generators", "expected an array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string p = "$.generators[" + std::to_string(g) + "]";
        const Json& gen = gens[g];
        if (!gen.is_object()) fail(p, "expected an object");
        if (gen.contains("ring")) {
            const Json& gr = gen["ring"];
            if (!gr.is_object() || json_long(field(gr, "d", p + ".ring"), p + ".ring.d") != d ||
                json_long(field(gr, "f", p + ".ring"), p + ".ring.f") != f)
                fail(p + ".ring", "generator ring differs from the document ring");
        }
        const Json& lin = field(gen, "linear", p);
        if (!lin.is_array() || lin.size() != 2) fail(p + ".linear", "expected a 2x2 array");
        std::array<QuadElem, 4> e;
        for (int i = 0; i < 2; ++i) {
            if (!lin[i].is_array() || lin[i].size() != 2) fail(p + ".linear", "expected a 2x2 array");
            for (int j = 0; j < 2; ++j) {
                std::string ep = p + ".linear[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                e[2 * i + j] = parse_quad(in.ring, lin[i][j], ep);
                if (!e[2 * i + j].is_integral()) fail(ep, "entry is not in R");
            }
        }
        TorusPoint t;
        if (gen.contains("translation")) {
            const Json& tr = gen["translation"];
            if (!tr.is_array() || tr.size() != 4) fail(p + ".translation", "expected 4 rationals");
            std::array<Rational, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = parse_json_rational(tr[i], p + ".translation[" + std::to_string(i) + "]");
            t = TorusPoint(c);
        }
        in.generators.emplace_back(t, Mat2::from_entries(e[0], e[1], e[2], e[3]));
    }
    if (doc.contains("options")) {
        const Json& o = doc["options"];
        if (!o.is_object()) fail("$.options", "expected an object");
        if (o.contains("cap")) {
            long c = json_long(o["cap"], "$.options.cap");
            if (c < 1) fail("$.options.cap", "cap must be positive");
            in.cap = static_cast<int>(c);
        }
    }
    return in;
}

InputDocument parse_input_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON at byte ") + std::to_string(e.byte));
    }
    return parse_input(doc);
}

namespace {

Json big(const Integer& n) { return n.fits_slong_p() ? Json(n.get_si()) : Json(n.get_str()); }

}  // namespace

Json to_json(const Rational& r) { return rational_str(r); }

Json to_json(const QuadElem& x) { return Json::array({rational_str(x.a()), rational_str(x.b())}); }

Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m.entry(0, 0)), to_json(m.entry(0, 1))}),
                        Json::array({to_json(m.entry(1, 0)), to_json(m.entry(1, 1))})});
}

Json to_json(const TorusPoint& p) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i) a.push_back(rational_str(p[i]));
    return a;
}

Json to_json(const AffineAut& h) { return {{"linear", to_json(h.linear)}, {"translation", to_json(h.translation)}}; }

Json to_json(const RingSpec& r) { return {{"d", r.d}, {"f", r.f}, {"name", r.name()}}; }

Json to_json(const RootOfUnity& z) { return z.str(); }

Json to_json(const FixedPointSet& f) {
    Json j = {{"kind", f.kind_name()}};
    if (f.kind == FixedPointSet::Kind::Finite) j["count"] = big(f.count);
    if (f.kind == FixedPointSet::Kind::PositiveDimensional) {
        j["dimension"] = f.dimension;
        j["component_count"] = big(f.component_count);
    }
    Json pts = Json::array();
    for (const auto& p : f.points) pts.push_back(to_json(p));
    j["points"] = pts;
    return j;
}

Json to_json(const EnriquesCheck& c) {
    Json j = {{"holds", c.holds},
              {"isomorphism_type_holds", c.isomorphism_type_holds},
              {"discrepancy", c.discrepancy},
              {"lifted_assumption", c.lifted_assumption}};
    j["h"] = c.h ? to_json(*c.h) : Json(nullptr);
    j["h_o"] = c.h_o ? to_json(*c.h_o) : Json(nullptr);
    return j;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["surface_type"] = surface_type_name(r.surface_type);
    j["smooth"] = r.smooth;
    j["group_order"] = r.group_order;
    j["translation_order"] = r.translation_order;
    j["kernel_det_order"] = r.kernel_det_order;
    j["s"] = r.s;
    j["catalog_label"] = r.catalog_label ? Json(r.catalog_label->str()) : Json(nullptr);
    j["sl_label"] = r.sl_label ? Json(r.sl_label->str()) : Json(nullptr);
    Json m = Json::array();
    for (const auto& l : r.catalog_matches) m.push_back(l.str());
    j["catalog_matches"] = m;
    j["enriques_index"] = r.enriques_index ? Json(*r.enriques_index) : Json(nullptr);
    Json fps = Json::array();
    for (const auto& g : r.fixed_point_summary)
        fps.push_back({{"generator", g.generator}, {"eig_class", eig_class_name(g.eig_class)}, {"fixed", to_json(g.fixed)}});
    j["fixed_point_summary"] = fps;
    j["common_fixed_set"] = to_json(r.common_fixed);
    j["elements_with_fixed_points"] = r.elements_with_fixed_points;
    j["enriques_check"] = r.enriques_check ? to_json(*r.enriques_check) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const VerifyLine& v) {
    Json j = {{"label", v.label.str()}, {"status", v.status}};
    if (v.status == "ok" || v.status == "fail") {
        j["expected_order"] = v.expected_order;
        j["actual_order"] = v.actual_order;
        j["relations_ok"] = v.relations_ok;
        j["s_ok"] = v.s_ok;
        j["eigen_ok"] = v.eigen_ok;
        j["recognized"] = v.recognized;
        j["matches"] = v.matches;
    } else if (v.status == "not_realizable") {
        j["expected_order"] = v.expected_order;
    }
    j["detail"] = v.detail;
    return j;
}

Json to_json(const CatalogReport& r) {
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back(to_json(l));
    return {{"lines", lines}, {"failures", r.failures}, {"verified", r.verified}, {"not_realizable", r.not_realizable}};
}

Json to_json(const CatalogEntry& e) {
    Json syms = Json::array();
    for (const auto& s : e.symbols) {
        Json js = {{"name", s.name}};
        if (s.is_sl()) js["sl_order"] = s.sl_order;
        else {
            Json opts = Json::array();
            for (const auto& [a, b] : s.eigen) opts.push_back(Json::array({a.str(), b.str()}));
            js["eigen"] = opts;
        }
        syms.push_back(js);
    }
    Json j = {{"label", e.label.str()},       {"stated_ring", e.stated_ring}, {"realizable", e.realizable},
              {"order", e.order},             {"s", e.s},                     {"symbols", syms},
              {"relations", e.relations},     {"flags", e.flags},             {"b1_template", e.b1_template},
              {"sl_label", e.sl_label().str()}};
    j["ring"] = e.ring ? to_json(*e.ring) : Json(nullptr);
    j["field"] = e.field.empty() ? Json(nullptr) : Json(e.field);
    Json d = Json::array();
    for (const auto& l : e.duplicates) d.push_back(l.str());
    j["duplicates"] = d;
    return j;
}

Json to_json(const Realization& r) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < r.generators.size(); ++i)
        gens.push_back({{"symbol", r.symbols[i]}, {"linear", to_json(r.generators[i])}});
    return {{"label", r.label.str()}, {"ring", to_json(r.ring)}, {"generators", gens}};
}

Json element_report(const AffineAut& h, std::size_t index) {
    Json j = {{"index", index}};
    j["det"] = to_json(h.linear.det());
    j["trace"] = to_json(h.linear.tr());
    auto o = element_order(h.linear);
    j["order"] = o ? Json(*o) : Json(nullptr);
    auto ao = affine_order(h);
    j["affine_order"] = ao ? big(*ao) : Json(nullptr);
    std::optional<EigenClass> ec;
    if (o && h.linear.det().is_unit()) ec = eigen_classify(h.linear);
    j["eigenvalues"] = ec ? Json::array({ec->lambda1.str(), ec->lambda2.str()}) : Json(nullptr);
    j["eig_class"] = o ? Json(eig_class_name(element_eig_class(h))) : Json(nullptr);
    return j;
}

Json group_report(const AffineGroup& h) {
    Json j;
    j["order"] = h.size();
    j["linear_order"] = h.linear_image.size();
    j["translation_order"] = h.translation_subgroup.size();
    j["kernel_det_order"] = h.kernel_det.size();
    j["s"] = h.linear_image.s;
    j["det_generator"] = h.linear_image.det_generator.str();
    try {
        GlClassification c = classify_gl(h.linear_image);
        j["catalog_label"] = c.label.str();
        j["sl_label"] = c.sl_label.str();
        Json m = Json::array();
        for (const auto& l : c.matches) m.push_back(l.str());
        j["catalog_matches"] = m;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInCatalog) throw;
        j["catalog_label"] = nullptr;
        j["sl_label"] = nullptr;
        j["catalog_matches"] = Json::array();
    }
    return j;
}

namespace {

bool has_object(const Json& j) {
    if (j.is_object()) return true;
    if (j.is_array())
        for (const auto& x : j)
            if (has_object(x)) return true;
    return false;
}

void pretty_into(const Json& j, int indent, std::string& out) {
    std::string pad(indent + 2, ' ');
    if (!has_object(j) && j.dump().size() <= 100) {
        out += j.dump();
        return;
    }
    bool obj = j.is_object();
    if (j.empty()) {
        out += obj ? "{}" : "[]";
        return;
    }
    out += obj ? "{\n" : "[\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad;
        if (obj) out += Json(it.key()).dump() + ": ";
        pretty_into(it.value(), indent + 2, out);
        out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string pretty(const Json& j) {
    std::string out;
    pretty_into(j, 0, out);
    return out;
}

Json error_payload(const std::string& error, const std::string& detail) {
    return {{"error", error}, {"detail", detail}};
}

}  // namespace eesurf

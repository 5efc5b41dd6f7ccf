#include "eesurf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eesurf/io.hpp"

namespace eesurf {

namespace {

struct Options {
    std::string input;
    std::optional<int> cap;
    std::string format = "json";
    bool quiet = false;
    std::optional<std::size_t> element;
    bool common = false;
    std::string label;
    std::vector<std::string> params;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

void text_lines(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
    if (o.quiet) return;
    if (o.format == "text") text_lines(j, "", out);
    else out << pretty(j) << "\n";
}

void emit_verify(const CatalogReport& r, const Options& o, std::ostream& out) {
    if (o.quiet) return;
    if (o.format == "json") {
        for (const auto& l : r.lines) out << to_json(l).dump() << "\n";
        out << Json{{"failures", r.failures}, {"verified", r.verified}, {"not_realizable", r.not_realizable}}.dump()
            << "\n";
        return;
    }
    for (const auto& l : r.lines) {
        out << l.label.str() << " " << l.status;
        if (l.status == "ok" || l.status == "fail")
            out << " order " << l.actual_order << "/" << l.expected_order << " recognized " << l.recognized;
        if (!l.detail.empty()) out << " (" << l.detail << ")";
        out << "\n";
    }
    out << "verified " << r.verified << ", failures " << r.failures << ", not realizable " << r.not_realizable
        << "\n";
}

int cap_of(const Options& o, const InputDocument& in) { return o.cap.value_or(in.cap.value_or(kDefaultAffineCap)); }

int dispatch(const std::string& cmd, const std::string& sub, const Options& o, std::ostream& out) {
    if (cmd == "catalog") {
        if (sub == "verify") {
            CatalogReport r = verify_catalog();
            emit_verify(r, o, out);
            return r.failures == 0 ? 0 : 2;
        }
        if (sub == "realize") {
            CatalogLabel label;
            try {
                label = parse_label(o.label);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::NotInCatalog) throw Error(ErrorKind::ParseError, e.detail());
                throw;
            }
            std::map<std::string, std::string> raw;
            for (const auto& p : o.params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected name=value, got '" + p + "'");
                raw[p.substr(0, eq)] = p.substr(eq + 1);
            }
            emit(to_json(realize(label, parse_params(label, raw))), o, out);
            return 0;
        }
        Json all = Json::array();
        for (const auto& e : catalog_entries()) all.push_back(to_json(e));
        emit(all, o, out);
        return 0;
    }
    InputDocument in = parse_input_text(read_input(o.input));
    if (cmd == "element") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < in.generators.size(); ++i) arr.push_back(element_report(in.generators[i], i));
        emit({{"ring", to_json(in.ring)}, {"elements", arr}}, o, out);
        return 0;
    }
    if (cmd == "fixed-points") {
        if (o.common) {
            emit({{"common", to_json(common_fixed_set(in.generators))}}, o, out);
            return 0;
        }
        Json arr = Json::array();
        for (std::size_t i = 0; i < in.generators.size(); ++i) {
            if (o.element && *o.element != i) continue;
            arr.push_back({{"index", i}, {"fixed", to_json(fixed_set(in.generators[i]))}});
        }
        if (o.element && *o.element >= in.generators.size())
            throw Error(ErrorKind::BadParameter, "no generator with index " + std::to_string(*o.element));
        emit(o.element ? arr[0] : Json{{"elements", arr}}, o, out);
        return 0;
    }
    AffineGroup h = close_affine(in.generators, in.ring, cap_of(o, in));
    if (cmd == "group") emit(group_report(h), o, out);
    else emit(to_json(surface_type(h)), o, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quotients of E x E by finite affine groups"};
    app.require_subcommand(1);
    Options o;
    auto common_flags = [&](CLI::App* c) {
        c->add_option("--cap", o.cap, "closure bound")->check(CLI::PositiveNumber);
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        c->add_flag("--quiet", o.quiet, "suppress output");
    };
    for (const char* name : {"element", "group", "surface", "fixed-points"}) {
        CLI::App* c = app.add_subcommand(name);
        c->add_option("--input", o.input, "input document, - for stdin")->required();
        common_flags(c);
        if (std::string(name) == "fixed-points") {
            auto* e = c->add_option("--element", o.element, "generator index");
            auto* m = c->add_flag("--common", o.common, "common fixed set of all generators");
            e->excludes(m);
        }
    }
    CLI::App* catalog = app.add_subcommand("catalog");
    catalog->require_subcommand(1);
    CLI::App* verify = catalog->add_subcommand("verify");
    common_flags(verify);
    CLI::App* realize_cmd = catalog->add_subcommand("realize");
    realize_cmd->add_option("--label", o.label, "catalog label such as HQ8(2)")->required();
    realize_cmd->add_option("--param", o.params, "name=value, e.g. b1=-1");
    common_flags(realize_cmd);
    CLI::App* dump = catalog->add_subcommand("dump");
    common_flags(dump);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_payload("ParseError", e.what()).dump() << "\n";
        return 1;
    }

    std::string cmd, sub;
    for (CLI::App* c : app.get_subcommands()) cmd = c->get_name();
    if (cmd == "catalog")
        for (CLI::App* c : catalog->get_subcommands()) sub = c->get_name();
    try {
        return dispatch(cmd, sub, o, out);
    } catch (const Error& e) {
        err << error_payload(error_name(e.kind()), e.detail()).dump() << "\n";
        return e.kind() == ErrorKind::ParseError ? 1 : 2;
    }
}

}  // namespace eesurf

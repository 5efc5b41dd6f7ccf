#pragma once

#include <string>
#include <vector>

#include "eesurf/catalog.hpp"
#include "eesurf/classifier.hpp"
#include "json.hpp"

namespace eesurf {

using Json = nlohmann::json;

struct InputDocument {
    RingSpec ring;
    std::vector<AffineAut> generators;
    std::optional<int> cap;
};

// Errors carry the JSON path of the offending value.
InputDocument parse_input(const Json& doc);
InputDocument parse_input_text(const std::string& text);

// Accepts an integer, a rational string, an expression such as "1/2-3*t", or [a, b] meaning a + b t.
QuadElem parse_quad(const RingSpec& ring, const Json& v, const std::string& path);
Rational parse_json_rational(const Json& v, const std::string& path);

Json to_json(const Rational& r);
Json to_json(const QuadElem& x);
Json to_json(const Mat2& m);
Json to_json(const TorusPoint& p);
Json to_json(const AffineAut& h);
Json to_json(const RingSpec& r);
Json to_json(const RootOfUnity& z);
Json to_json(const FixedPointSet& f);
Json to_json(const ClassificationReport& r);
Json to_json(const EnriquesCheck& c);
Json to_json(const VerifyLine& v);
Json to_json(const CatalogReport& r);
Json to_json(const CatalogEntry& e);
Json to_json(const Realization& r);
Json element_report(const AffineAut& h, std::size_t index);
Json group_report(const AffineGroup& h);

// Indented JSON with short scalar arrays kept on one line.
std::string pretty(const Json& j);

Json error_payload(const std::string& error, const std::string& detail);

}  // namespace eesurf

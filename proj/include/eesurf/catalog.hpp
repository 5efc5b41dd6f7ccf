#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eesurf/torus.hpp"

namespace eesurf {

struct Symbol {
    std::string name;
    // Elements of SL(2,R) of the given order when eigen is empty, otherwise an element
    // whose unordered eigenvalue pair is one of the options.
    int sl_order = 0;
    std::vector<std::pair<RootOfUnity, RootOfUnity>> eigen;

    bool is_sl() const { return eigen.empty(); }
};

struct CatalogEntry {
    CatalogLabel label;
    std::string stated_ring;       // ring or field named in the source
    bool realizable = false;
    std::optional<RingSpec> ring;  // realization ring when realizable
    std::string field;             // extension field when not realizable
    long order = 1;
    int s = 1;
    std::vector<Symbol> symbols;
    std::vector<std::string> relations;
    std::vector<std::array<long, 8>> witness;  // per symbol, integer coordinates over ring
    bool b1_template = false;                  // g1 = [[0,b1],[-1/b1,0]] (and g2 = i g1^T for HQ8(9))
    std::vector<std::string> flags;
    std::vector<CatalogLabel> duplicates;

    std::vector<std::string> symbol_names() const;
    std::vector<Relation> parsed_relations() const;
    CatalogLabel sl_label() const;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const CatalogLabel& label);

struct Realization {
    CatalogLabel label;
    RingSpec ring;
    std::vector<std::string> symbols;
    std::vector<Mat2> generators;
};

Realization realize(const CatalogLabel& label, const std::map<std::string, QuadElem>& params = {});
// Accepts "b1" given as an integer, "a,b", or "[a,b]" over the entry's ring.
std::map<std::string, QuadElem> parse_params(const CatalogLabel& label, const std::map<std::string, std::string>& raw);

struct VerifyLine {
    CatalogLabel label;
    std::string status;  // ok, fail, not_realizable, info
    long expected_order = 0;
    long actual_order = 0;
    bool relations_ok = false;
    bool s_ok = false;
    bool eigen_ok = false;
    std::string recognized;
    std::vector<std::string> matches;
    std::string detail;
};

struct CatalogReport {
    std::vector<VerifyLine> lines;
    int failures = 0;
    int verified = 0;
    int not_realizable = 0;
};

CatalogReport verify_catalog();

enum class FamilyTag { K3, Hyperelliptic, RuledElliptic, Enriques };

using EPoint = std::array<Rational, 2>;  // point x + y theta of E
using APoint = std::array<Rational, 4>;  // point of A

struct FamilyParams {
    int index = 1;       // j for K3, s otherwise
    bool split = false;  // G_{s,s}^HE
    std::optional<RingSpec> ring;
    std::vector<APoint> translations;  // (P_i, Q_i)
    std::optional<APoint> u;           // (U1, V1) for K3, (U_o, V_o) for Enriques
    std::optional<EPoint> u1, p1, q1;
};

struct FamilyMember {
    RingSpec ring;
    std::vector<AffineAut> generators;
    std::vector<std::string> flags;
};

FamilyMember family_affine(FamilyTag tag, const FamilyParams& params);
std::string family_tag_name(FamilyTag t);

}  // namespace eesurf

#include "eesurf/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "eesurf/fixed_points.hpp"
#include "json.hpp"

namespace eesurf {

namespace {

using C8 = std::array<long, 8>;

// Frequently used matrices; theta is the ring generator.
constexpr C8 kI = {1, 0, 0, 0, 0, 0, 1, 0};
constexpr C8 kNegI = {-1, 0, 0, 0, 0, 0, -1, 0};
constexpr C8 kJ = {0, 0, 1, 0, -1, 0, 0, 0};      // [[0,1],[-1,0]]
constexpr C8 kJinv = {0, 0, -1, 0, 1, 0, 0, 0};   // [[0,-1],[1,0]]
constexpr C8 kAnti = {0, 0, -1, 0, -1, 0, 0, 0};  // [[0,-1],[-1,0]]
constexpr C8 kDiag1m = {1, 0, 0, 0, 0, 0, -1, 0};
constexpr C8 kDiagm1 = {-1, 0, 0, 0, 0, 0, 1, 0};
constexpr C8 kOrd3 = {-1, 0, -1, 0, 1, 0, 0, 0};  // [[-1,-1],[1,0]]
constexpr C8 kOrd6 = {0, 0, -1, 0, 1, 0, 1, 0};   // [[0,-1],[1,1]]
constexpr C8 kTr1 = {2, 0, 1, 0, -3, 0, -1, 0};   // [[2,1],[-3,-1]]
constexpr C8 kTrm1 = {1, 0, 1, 0, -3, 0, -2, 0};  // [[1,1],[-3,-2]]
constexpr C8 kTr0 = {1, 0, -2, 0, 1, 0, -1, 0};   // [[1,-2],[1,-1]]
// Z[i]
constexpr C8 kDiagIMI = {0, 1, 0, 0, 0, 0, 0, -1};  // diag(i,-i)
constexpr C8 kIScalar = {0, 1, 0, 0, 0, 0, 0, 1};
constexpr C8 kAntiI = {0, 0, 0, 1, 0, 1, 0, 0};  // [[0,i],[i,0]]
constexpr C8 kDiagI1 = {0, 1, 0, 0, 0, 0, 1, 0};
// O_{-3}: theta = zeta6, theta - 1 = zeta3
constexpr C8 kZeta3I = {-1, 1, 0, 0, 0, 0, -1, 1};
constexpr C8 kG4 = {0, 1, 0, 0, 0, 0, 1, -1};       // diag(theta, 1-theta)
constexpr C8 kK8g2 = {-1, 1, 0, -1, 0, -1, 1, -1};  // [[theta-1,-theta],[-theta,1-theta]]
constexpr C8 kK8g3 = {0, -1, 1, 0, 0, 0, -1, 1};    // [[-theta,1],[0,theta-1]]
constexpr C8 kHSwap3 = {-1, 1, 0, -1, 0, 0, 1, 0};  // [[theta-1,-theta],[0,1]]
constexpr C8 kDiagZ3M6 = {-1, 1, 0, 0, 0, 0, 1, -1};  // diag(theta-1, 1-theta)
constexpr C8 kAntiZ3 = {0, 0, -1, 1, -1, 1, 0, 0};    // [[0,theta-1],[theta-1,0]]

using EigenOpt = std::array<long, 4>;

Symbol sl(const std::string& name, int order) { return Symbol{name, order, {}}; }

Symbol eig(const std::string& name, std::initializer_list<EigenOpt> opts) {
    Symbol s{name, 0, {}};
    for (const auto& o : opts) s.eigen.push_back({RootOfUnity(o[0], o[1]), RootOfUnity(o[2], o[3])});
    return s;
}

const std::vector<std::string> kQ8 = {"g1^2=-1", "g2^2=-1", "g2 g1=-g1 g2"};
const std::vector<std::string> kQ12 = {"g1^2=-1", "g4^3=-1", "g1 g4 g1^-1=g4^-1"};
const std::vector<std::string> kSL23 = {"g1^2=-1", "g2^2=-1",    "g2 g1=-g1 g2",
                                        "g3^3=1",  "g3 g1 g3^-1=g2", "g3 g2 g3^-1=g1 g2"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Builder {
    std::vector<CatalogEntry> out;
    RingSpec Z = make_ring(0, 1), Zi = make_ring(1, 1), O2 = make_ring(2, 1), O3 = make_ring(3, 1);

    CatalogEntry& add(Family f, int idx, const std::string& stated, std::optional<RingSpec> ring, long order, int s,
                      std::vector<Symbol> syms, std::vector<std::string> rels, std::vector<C8> wit) {
        CatalogEntry e;
        e.label = CatalogLabel{f, idx};
        e.stated_ring = stated;
        e.realizable = ring.has_value();
        e.ring = ring;
        e.order = order;
        e.s = s;
        e.symbols = std::move(syms);
        e.relations = std::move(rels);
        e.witness = std::move(wit);
        out.push_back(std::move(e));
        return out.back();
    }

    CatalogEntry& field_only(Family f, int idx, const std::string& stated, const std::string& field, long order,
                             int s, std::vector<Symbol> syms, std::vector<std::string> rels) {
        CatalogEntry& e = add(f, idx, stated, std::nullopt, order, s, std::move(syms), std::move(rels), {});
        e.field = field;
        return e;
    }
};

std::vector<CatalogEntry> build() {
    Builder b;
    const auto& Z = b.Z;
    const auto& Zi = b.Zi;
    const auto& O2 = b.O2;
    const auto& O3 = b.O3;
    using F = Family;

    b.add(F::K, 1, "any R", Z, 1, 1, {}, {}, {});
    b.add(F::K, 2, "any R", Z, 2, 1, {sl("g", 2)}, {"g^2=1"}, {kNegI});
    b.add(F::K, 3, "any R", Z, 4, 1, {sl("g", 4)}, {"g^2=-1"}, {kTr0});
    b.add(F::K, 4, "Z[i]", Zi, 8, 1, {sl("g1", 4), sl("g2", 4)}, kQ8, {kDiagIMI, kJ});
    b.add(F::K, 5, "any R", Z, 3, 1, {sl("g", 3)}, {"g^3=1"}, {kTrm1});
    b.add(F::K, 6, "any R", Z, 6, 1, {sl("g", 6)}, {"g^3=-1"}, {kTr1});
    b.add(F::K, 7, "O_{-3}", O3, 12, 1, {sl("g1", 4), sl("g4", 6)}, kQ12, {kJ, kG4}).b1_template = true;
    {
        auto& e = b.add(F::K, 8, "Q(sqrt(-d), sqrt(-3))", O3, 24, 1, {sl("g1", 4), sl("g2", 4), sl("g3", 3)}, kSL23,
                        {kJinv, kK8g2, kK8g3});
        e.flags.push_back("stated_field: Q(sqrt(-d), sqrt(-3)); realized over O_{-3} by a searched witness");
    }

    b.add(F::HC1, 1, "any R", Z, 2, 2, {eig("h", {{0, 1, 1, 2}})}, {"h^2=1"}, {kDiag1m});
    b.add(F::HC1, 2, "O_{-3}", O3, 3, 3, {eig("h", {{2, 3, 2, 3}, {1, 3, 0, 1}})}, {"h^3=1"},
          {{-1, 1, 0, 0, 0, 0, 1, 0}});
    b.add(F::HC1, 3, "Z[i]", Zi, 4, 4, {eig("h", {{1, 4, 0, 1}, {3, 4, 1, 2}})}, {"h^4=1"}, {kDiagI1});
    b.add(F::HC1, 4, "O_{-3}", O3, 6, 6, {eig("h", {{1, 6, 0, 1}, {2, 3, 1, 2}, {1, 3, 5, 6}})}, {"h^6=1"},
          {{0, 1, 0, 0, 0, 0, 1, 0}});

    const C8 gi0 = {0, 1, 0, 1, -1, -1, 0, -1};  // [[i,i],[-1-i,-i]]
    b.add(F::HC2, 1, "Z[i]", Zi, 4, 2, {eig("h", {{1, 4, 1, 4}})}, {"h^2=-1"}, {kIScalar});
    b.add(F::HC2, 2, "any R", Z, 4, 2, {sl("z", 2), eig("h", {{0, 1, 1, 2}})}, {"h^2=1", "h z=z h"},
          {kNegI, kDiag1m});
    b.add(F::HC2, 3, "O_{-3}", O3, 6, 3, {eig("h", {{1, 6, 1, 6}, {5, 6, 1, 2}})}, {"h^3=-1"},
          {{0, 1, 0, 0, 0, 0, 0, 1}});
    b.add(F::HC2, 4, "Z[i]", Zi, 8, 4, {eig("h", {{3, 8, 7, 8}})}, {"h^4=-1"}, {gi0});
    b.add(F::HC2, 5, "Z[i]", Zi, 8, 4, {sl("z", 2), eig("h", {{1, 4, 0, 1}})}, {"h^4=1", "h z=z h"},
          {kNegI, kDiagI1});
    {
        auto& e = b.add(F::HC2, 6, "Z[i]", Zi, 8, 4, {eig("h", {{3, 8, 7, 8}})}, {"h^4=-1"}, {gi0});
        e.flags.push_back("duplicate: same data as HC2(4)");
    }
    b.add(F::HC2, 7, "O_{-3}", O3, 12, 6, {sl("z", 2), eig("h", {{1, 3, 5, 6}, {1, 6, 0, 1}, {2, 3, 1, 2}})},
          {"h^6=1", "h z=z h"}, {kNegI, {0, 1, 0, 0, 0, 0, 1, 0}});

    b.add(F::HC3, 1, "R_{-3,f}", O3, 6, 2, {eig("h", {{1, 6, 1, 3}})}, {"h^6=1"}, {{1, 0, 1, 0, -1, 2, -2, 2}});
    b.add(F::HC3, 2, "Q(sqrt(-d))", Z, 6, 2, {sl("g", 3), eig("h", {{0, 1, 1, 2}})},
          {"g^3=1", "h^2=1", "h g h^-1=g^-1"}, {kOrd3, kAnti})
        .flags.push_back("stated over a field; realized over Z by a searched witness");
    b.add(F::HC3, 3, "O_{-3}", O3, 9, 3, {sl("g", 3), eig("h", {{1, 3, 1, 3}})}, {"g^3=1", "h^3=1", "h g=g h"},
          {kTrm1, kZeta3I});
    b.add(F::HC3, 4, "O_{-3}", O3, 18, 6, {sl("g", 3), eig("h", {{1, 6, 2, 3}})}, {"g^3=1", "h^6=1", "h g=g h"},
          {{-1, 1, 0, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, 0, 0, -1}});
    b.add(F::HC3, 5, "Q(sqrt(-3))", O3, 18, 6, {sl("g", 3), eig("h", {{1, 3, 5, 6}})},
          {"g^3=1", "h^6=1", "h g h^-1=g^-1"}, {kOrd3, kAntiZ3})
        .flags.push_back("stated over a field; realized over O_{-3} by a searched witness");

    {
        auto& e = b.add(F::HC4, 1, "O_{-2}", O2, 8, 2, {eig("h", {{1, 8, 3, 8}})}, {"h^8=1"},
                        {{1, 0, 1, 0, 0, 1, -1, 1}});
        e.flags.push_back("typo_corrected: lambda2 = e^{3 pi i/3} read as e^{3 pi i/4}");
    }
    b.add(F::HC4, 2, "R_{-1,f}", Zi, 8, 2, {sl("g", 4), eig("h", {{0, 1, 1, 2}})}, {"g^2=-1", "h^2=1", "h g=g h"},
          {kDiagIMI, kDiagm1});
    b.add(F::HC4, 3, "Q(sqrt(-d))", Z, 8, 2, {sl("g", 4), eig("h", {{0, 1, 1, 2}})},
          {"g^2=-1", "h^2=1", "h g h^-1=g^-1"}, {kJinv, kDiagm1})
        .flags.push_back("stated over a field; realized over Z by a searched witness");
    b.add(F::HC4, 4, "O_{-3}", O3, 12, 3, {eig("h", {{5, 12, 11, 12}})}, {"h^12=1"}, {{0, 0, 1, 0, 1, -1, 0, 0}})
        .flags.push_back("witness [[0,1],[1-theta,0]] replaces a non-integral diagonal witness");
    b.add(F::HC4, 5, "O_{-3}", O3, 12, 3, {sl("g", 4), eig("h", {{1, 3, 1, 3}})}, {"g^2=-1", "h^3=1", "h g=g h"},
          {kJinv, kZeta3I});
    b.add(F::HC4, 6, "Z[i]", Zi, 16, 4, {sl("g", 4), eig("h", {{1, 4, 0, 1}})}, {"g^2=-1", "h^4=1", "h g=g h"},
          {kDiagIMI, kDiagI1});
    b.field_only(F::HC4, 7, "Z[i]", "Q(sqrt(2), i)", 16, 4, {sl("g", 4), eig("h", {{3, 8, 7, 8}})},
                 {"g^2=-1", "h^4=-1", "h g h^-1=g"});
    b.field_only(F::HC4, 8, "Z[i]", "Q(sqrt(2), i)", 16, 4, {sl("g", 4), eig("h", {{3, 8, 7, 8}})},
                 {"g^2=-1", "h^4=-1", "h g h^-1=g^-1"});
    b.add(F::HC4, 9, "Q(sqrt(-3))", O3, 24, 6, {sl("g", 4), eig("h", {{1, 3, 5, 6}})},
          {"g^2=-1", "h^6=1", "h g h^-1=g^-1"}, {kJinv, kDiagZ3M6})
        .flags.push_back("stated over a field; realized over O_{-3} by a searched witness");

    b.add(F::HC6, 1, "Z[i]", Zi, 12, 2, {eig("h", {{1, 12, 5, 12}})}, {"h^12=1"}, {{1, 0, 1, 0, 0, 1, -1, 1}});
    b.add(F::HC6, 2, "O_{-3} or R_{-3,2}", O3, 12, 2, {sl("g", 6), eig("h", {{0, 1, 1, 2}})},
          {"g^3=-1", "h^2=1", "h g=g h"}, {kG4, kDiagm1})
        .flags.push_back("typo_corrected: C6 x C12 read as C6 x C2");
    b.add(F::HC6, 3, "Q(sqrt(-d))", Z, 12, 2, {sl("g", 6), eig("h", {{0, 1, 1, 2}})},
          {"g^3=-1", "h^2=1", "h g h^-1=g^-1"}, {kOrd6, kAnti})
        .flags.push_back("stated over a field; realized over Z by a searched witness");
    b.add(F::HC6, 4, "O_{-3}", O3, 18, 3, {sl("g", 6), eig("h", {{1, 3, 1, 3}})}, {"g^3=-1", "h^3=1", "h g=g h"},
          {kTr1, kZeta3I});
    b.field_only(F::HC6, 5, "Z[i]", "Q(sqrt(2), i)", 24, 4, {sl("g", 6), eig("h", {{3, 8, 7, 8}})},
                 {"g^3=-1", "h^4=-1", "h g h^-1=g^-1"});
    b.add(F::HC6, 6, "Q(sqrt(-3))", O3, 36, 6, {sl("g", 6), eig("h", {{1, 3, 5, 6}})},
          {"g^3=-1", "h^6=1", "h g h^-1=g^-1"}, {kOrd6, kAntiZ3})
        .flags.push_back("stated over a field; realized over O_{-3} by a searched witness");
    b.add(F::HC6, 7, "O_{-3}", O3, 36, 6, {sl("g", 6), eig("h", {{1, 3, 5, 6}})}, {"g^3=-1", "h^6=1", "h g=g h"},
          {kG4, kDiagZ3M6});

    auto q8 = [](Symbol h) { return std::vector<Symbol>{sl("g1", 4), sl("g2", 4), std::move(h)}; };
    b.add(F::HQ8, 1, "Z[i]", Zi, 16, 2, q8(eig("h", {{1, 4, 1, 4}})), cat(kQ8, {"h g1=g1 h", "h g2=g2 h"}),
          {kDiagIMI, kJ, kIScalar});
    b.add(F::HQ8, 2, "Z[i]", Zi, 16, 2, q8(eig("h", {{0, 1, 1, 2}})),
          cat(kQ8, {"h^2=1", "h g1 h^-1=-g1", "h g2 h^-1=-g2"}), {kJ, kAntiI, kDiagm1});
    b.field_only(F::HQ8, 3, "O_{-2}", "Q(sqrt(2), i)", 16, 2, q8(eig("h", {{1, 8, 3, 8}})),
                 cat(kQ8, {"h^4=-1", "h g1 h^-1=g2", "h g2 h^-1=-g1"}));
    b.add(F::HQ8, 4, "R_{-2,f}", O2, 16, 2, q8(eig("h", {{0, 1, 1, 2}})),
          cat(kQ8, {"h^2=1", "h g1 h^-1=g2", "h g2 h^-1=g1"}),
          {kJinv, {0, -1, -1, 0, -1, 0, 0, 1}, {-1, 0, 0, 1, 0, 0, 1, 0}})
        .flags.push_back("stated over Q(sqrt(-2)); realized over O_{-2} by a searched witness");
    b.add(F::HQ8, 5, "O_{-3}", O3, 24, 3, q8(eig("h", {{1, 3, 1, 3}})), cat(kQ8, {"h g1=g1 h", "h g2=g2 h"}),
          {kJinv, kK8g2, kZeta3I});
    b.add(F::HQ8, 6, "O_{-3}", O3, 24, 3, q8(eig("h", {{1, 3, 0, 1}})),
          cat(kQ8, {"h^3=1", "h g1 h^-1=g2", "h g2 h^-1=g1 g2"}), {kJinv, kK8g2, kHSwap3})
        .flags.push_back("stated over Q(sqrt(-3)); realized over O_{-3} by a searched witness");
    b.field_only(F::HQ8, 7, "Z[i]", "Q(sqrt(2), i)", 32, 4, q8(eig("h", {{3, 8, 7, 8}})),
                 cat(kQ8, {"h^4=-1", "h g1 h^-1=-g1", "h g2 h^-1=-g2"}));
    b.field_only(F::HQ8, 8, "Z[i]", "Q(sqrt(2), i)", 32, 4, q8(eig("h", {{3, 8, 7, 8}})),
                 cat(kQ8, {"h^4=-1", "h g1 h^-1=g2", "h g2 h^-1=g1"}));
    {
        auto& e = b.add(F::HQ8, 9, "Z[i]", Zi, 32, 4, q8(eig("h", {{1, 4, 0, 1}})),
                        cat(kQ8, {"h^4=1", "h g1 h^-1=g2", "h g2 h^-1=-g1"}), {kJ, kAntiI, kDiagI1});
        e.b1_template = true;
        e.flags.push_back("typo_corrected: repeated g1 relation read as h g2 h^-1 = -g1");
    }

    auto q12 = [](Symbol h) { return std::vector<Symbol>{sl("g1", 4), sl("g4", 6), std::move(h)}; };
    {
        auto& e = b.field_only(F::HQ12, 1, "Z[i]", "Q(sqrt(3), i)", 24, 2, q12(eig("h", {{1, 4, 1, 4}})),
                               cat(kQ12, {"h g1=g1 h", "h g4=g4 h"}));
        e.flags.push_back("typo_corrected: 'R - Z[i]' read as R = Z[i]");
    }
    b.add(F::HQ12, 2, "O_{-3}", O3, 24, 2, q12(eig("h", {{1, 6, 1, 3}})),
          cat(kQ12, {"h^6=1", "h g1 h^-1=g1 g4", "h g4 h^-1=g4"}), {kJ, kG4, {0, 1, 0, 0, 0, 0, -1, 1}})
        .b1_template = true;
    b.field_only(F::HQ12, 3, "Z[i]", "Q(sqrt(3), i)", 24, 2, q12(eig("h", {{1, 12, 5, 12}})),
                 cat(kQ12, {"h^6=-1", "h g1 h^-1=g1 g4^2", "h g4 h^-1=g4"}))
        .flags.push_back("stated ring O_{-3} conflicts with trace i; catalogued over Z[i]");
    b.add(F::HQ12, 4, "O_{-3}", O3, 24, 2, q12(eig("h", {{0, 1, 1, 2}})),
          cat(kQ12, {"h^2=1", "h g1 h^-1=-g1", "h g4 h^-1=g4"}), {kJ, kG4, kDiagm1})
        .b1_template = true;
    {
        auto& e = b.add(F::HQ12, 5, "O_{-3}", O3, 36, 3, q12(eig("h", {{1, 3, 1, 3}})),
                        cat(kQ12, {"h g1=g1 h", "h g4=g4 h"}), {kJ, kG4, kZeta3I});
        e.b1_template = true;
    }
    {
        auto& e = b.add(F::HQ12, 6, "O_{-3}", O3, 36, 3, q12(eig("h", {{1, 3, 0, 1}})),
                        cat(kQ12, {"h^3=1", "h g1 h^-1=g1 g4^2", "h g4 h^-1=g4"}),
                        {kJ, kG4, {1, 0, 0, 0, 0, 0, -1, 1}});
        e.b1_template = true;
        e.flags.push_back("duplicate: the same subgroups as HQ12(5)");
    }
    b.field_only(F::HQ12, 7, "O_{-3}", "Q(sqrt(3), i)", 36, 3, q12(eig("h", {{5, 12, 11, 12}})),
                 cat(kQ12, {"h^6=-1", "h g1 h^-1=-g1", "h g4 h^-1=g4"}));
    b.field_only(F::HQ12, 8, "Z[i]", "Q(sqrt(2), sqrt(3), i)", 48, 4, q12(eig("h", {{3, 8, 7, 8}})),
                 cat(kQ12, {"h^4=-1", "h g1 h^-1=-g1", "h g4 h^-1=g4"}));
    b.add(F::HQ12, 9, "O_{-3}", O3, 72, 6, q12(eig("h", {{0, 1, 1, 6}})),
          cat(kQ12, {"h^6=1", "h g1 h^-1=g1 g4", "h g4 h^-1=g4"}), {kJ, kG4, {1, 0, 0, 0, 0, 0, 0, 1}})
        .b1_template = true;
    b.add(F::HQ12, 10, "O_{-3}", O3, 72, 6, q12(eig("h", {{1, 3, 5, 6}})),
          cat(kQ12, {"h^6=1", "h g1 h^-1=-g1", "h g4 h^-1=g4"}), {kJ, kG4, kDiagZ3M6})
        .b1_template = true;

    auto k8 = [](Symbol h) { return std::vector<Symbol>{sl("g1", 4), sl("g2", 4), sl("g3", 3), std::move(h)}; };
    b.field_only(F::HSL23, 1, "Z[i]", "Q(sqrt(3), i)", 48, 2, k8(eig("h", {{1, 4, 1, 4}})),
                 cat(kSL23, {"h g1=g1 h", "h g2=g2 h", "h g3=g3 h"}));
    b.field_only(F::HSL23, 2, "Z[i]", "Q(sqrt(3), i)", 48, 2, k8(eig("h", {{0, 1, 1, 2}})),
                 cat(kSL23, {"h^2=1", "h g1 h^-1=-g1", "h g2 h^-1=-g2", "h g3 h^-1=-g2 g3"}));
    b.field_only(F::HSL23, 3, "O_{-2}", "Q(sqrt(2), sqrt(3), i)", 48, 2, k8(eig("h", {{1, 8, 3, 8}})),
                 cat(kSL23, {"h^4=-1", "h g1 h^-1=g2", "h g2 h^-1=-g1", "h g3 h^-1=g2 g3^2"}));
    b.field_only(F::HSL23, 4, "R_{-2,f}", "Q(sqrt(-2), sqrt(-3))", 48, 2, k8(eig("h", {{0, 1, 1, 2}})),
                 cat(kSL23, {"h^2=1", "h g1 h^-1=g2", "h g2 h^-1=g1", "h g3 h^-1=g1 g3^2"}));
    b.add(F::HSL23, 5, "O_{-3}", O3, 72, 3, k8(eig("h", {{1, 3, 1, 3}})),
          cat(kSL23, {"h g1=g1 h", "h g2=g2 h", "h g3=g3 h"}), {kJinv, kK8g2, kK8g3, kZeta3I})
        ;
    {
        auto& e = b.add(F::HSL23, 6, "O_{-3}", O3, 72, 3, k8(eig("h", {{1, 3, 0, 1}})),
                        cat(kSL23, {"h^3=1", "h g1 h^-1=g2", "h g2 h^-1=g1 g2", "h g3 h^-1=g3"}),
                        {kJinv, kK8g2, kK8g3, kHSwap3});
        e.flags.push_back("duplicate: the same subgroups as HSL23(5)");
    }
    b.field_only(F::HSL23, 7, "Z[i]", "Q(sqrt(2), sqrt(3), i)", 96, 4, k8(eig("h", {{3, 8, 7, 8}})),
                 cat(kSL23, {"h^4=-1", "h g1 h^-1=-g1", "h g2 h^-1=-g2", "h g3 h^-1=-g2 g3"}));
    b.field_only(F::HSL23, 8, "Z[i]", "Q(sqrt(2), sqrt(3), i)", 96, 4, k8(eig("h", {{3, 8, 7, 8}})),
                 cat(kSL23, {"h^4=-1", "h g1 h^-1=g2", "h g2 h^-1=g1", "h g3 h^-1=g1 g3^2"}));
    b.field_only(F::HSL23, 9, "Z[i]", "Q(sqrt(3), i)", 96, 4, k8(eig("h", {{1, 4, 0, 1}})),
                 cat(kSL23, {"h^4=1", "h g1 h^-1=g2", "h g2 h^-1=-g1", "h g3 h^-1=g2 g3^2"}));
    const std::pair<CatalogLabel, CatalogLabel> dup[] = {
        {{F::HC2, 4}, {F::HC2, 6}},   {{F::HC4, 4}, {F::HC4, 5}},   {{F::HQ8, 1}, {F::HQ8, 2}},
        {{F::HQ8, 3}, {F::HQ8, 4}},   {{F::HQ8, 8}, {F::HQ8, 9}},   {{F::HQ12, 2}, {F::HQ12, 4}},
        {{F::HQ12, 5}, {F::HQ12, 6}}, {{F::HQ12, 9}, {F::HQ12, 10}}, {{F::HSL23, 5}, {F::HSL23, 6}},
    };
    for (auto& e : b.out)
        for (const auto& [x, y] : dup) {
            if (e.label == x) e.duplicates.push_back(y);
            if (e.label == y) e.duplicates.push_back(x);
        }
    return b.out;
}

}  // namespace

std::vector<std::string> CatalogEntry::symbol_names() const {
    std::vector<std::string> out;
    for (const auto& s : symbols) out.push_back(s.name);
    return out;
}

std::vector<Relation> CatalogEntry::parsed_relations() const {
    std::vector<Relation> out;
    auto names = symbol_names();
    for (const auto& r : relations) out.push_back(parse_relation(r, names));
    return out;
}

CatalogLabel CatalogEntry::sl_label() const {
    switch (label.family) {
        case Family::K: return label;
        case Family::HC1: return {Family::K, 1};
        case Family::HC2: return {Family::K, 2};
        case Family::HC3: return {Family::K, 5};
        case Family::HC4: return {Family::K, 3};
        case Family::HC6: return {Family::K, 6};
        case Family::HQ8: return {Family::K, 4};
        case Family::HQ12: return {Family::K, 7};
        case Family::HSL23: return {Family::K, 8};
    }
    return label;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const CatalogLabel& label) {
    for (const auto& e : catalog_entries())
        if (e.label == label) return e;
    throw Error(ErrorKind::NotInCatalog, label.str());
}

Realization realize(const CatalogLabel& label, const std::map<std::string, QuadElem>& params) {
    const CatalogEntry& e = catalog_entry(label);
    if (!e.realizable)
        throw Error(ErrorKind::NotRealizable, label.str() + " is realized only over " + e.field);
    Realization r{label, *e.ring, e.symbol_names(), {}};
    for (const auto& w : e.witness) r.generators.push_back(Mat2::from_ints(r.ring, w));
    for (const auto& [name, value] : params) {
        if (name != "b1") throw Error(ErrorKind::BadParameter, "unknown parameter '" + name + "'");
        if (!e.b1_template) throw Error(ErrorKind::BadParameter, label.str() + " has no free parameter b1");
        if (!(value.ring() == r.ring)) throw Error(ErrorKind::RingMismatch, "b1 must lie in " + r.ring.name());
        if (!value.is_unit()) throw Error(ErrorKind::BadParameter, "b1 must be a unit of " + r.ring.name());
        QuadElem zero(r.ring), inv = QuadElem(r.ring, 1) / value;
        r.generators[0] = Mat2::from_entries(zero, value, -inv, zero);
        if (label == CatalogLabel{Family::HQ8, 9}) {
            QuadElem i(r.ring, 0, 1);
            r.generators[1] = Mat2::from_entries(zero, i * value, i * inv, zero);
        }
    }
    return r;
}

std::map<std::string, QuadElem> parse_params(const CatalogLabel& label, const std::map<std::string, std::string>& raw) {
    const CatalogEntry& e = catalog_entry(label);
    std::map<std::string, QuadElem> out;
    for (const auto& [name, text] : raw) {
        if (!e.ring) throw Error(ErrorKind::NotRealizable, label.str() + " is realized only over " + e.field);
        std::string s = text;
        if (s.empty() || s.front() != '[') s = "[" + s + "]";
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s);
        } catch (const nlohmann::json::exception&) {
            throw Error(ErrorKind::ParseError, "bad value for " + name + ": " + text);
        }
        if (!j.is_array() || j.empty() || j.size() > 2) throw Error(ErrorKind::ParseError, "bad value for " + name);
        auto rat = [&](const nlohmann::json& x) {
            if (x.is_number_integer()) return Rational(x.get<long>());
            if (x.is_string()) return parse_rational(x.get<std::string>());
            throw Error(ErrorKind::ParseError, "bad value for " + name);
        };
        Rational a = rat(j[0]), bb = j.size() > 1 ? rat(j[1]) : Rational(0);
        out.emplace(name, QuadElem(*e.ring, a, bb));
    }
    return out;
}

namespace {

bool eigen_matches(const Symbol& s, const Mat2& m) {
    if (s.is_sl()) {
        auto o = element_order(m);
        return m.det() == QuadElem(m.ring(), 1) && o && *o == s.sl_order;
    }
    auto ec = eigen_classify(m);
    if (!ec) return false;
    for (const auto& [a, b] : s.eigen)
        if ((ec->lambda1 == a && ec->lambda2 == b) || (ec->lambda1 == b && ec->lambda2 == a)) return true;
    return false;
}

}  // namespace

CatalogReport verify_catalog() {
    CatalogReport rep;
    for (const CatalogEntry& e : catalog_entries()) {
        VerifyLine line;
        line.label = e.label;
        line.expected_order = e.order;
        if (!e.realizable) {
            line.status = "not_realizable";
            line.detail = "realized only over " + e.field;
            rep.not_realizable++;
            rep.lines.push_back(line);
            continue;
        }
        try {
            Realization r = realize(e.label);
            LinearGroup h = close_linear(r.generators, r.ring);
            line.actual_order = static_cast<long>(h.size());
            line.s_ok = h.s == e.s;
            line.relations_ok = true;
            for (const Relation& rel : e.parsed_relations())
                if (!relation_holds(rel, r.generators, r.ring)) {
                    line.relations_ok = false;
                    line.detail += "relation fails: " + rel.text + "; ";
                }
            line.eigen_ok = true;
            for (std::size_t i = 0; i < e.symbols.size(); ++i)
                if (!eigen_matches(e.symbols[i], r.generators[i])) {
                    line.eigen_ok = false;
                    line.detail += "symbol " + e.symbols[i].name + " has the wrong invariants; ";
                }
            GlClassification c = classify_gl(h);
            line.recognized = c.label.str();
            for (const auto& m : c.matches) line.matches.push_back(m.str());
            bool round_trip = c.label == e.label;
            for (const auto& d : e.duplicates) round_trip = round_trip || c.label == d;
            for (const auto& m : c.matches) {
                bool allowed = m == e.label ||
                               std::find(e.duplicates.begin(), e.duplicates.end(), m) != e.duplicates.end();
                if (!allowed) {
                    round_trip = false;
                    line.detail += "unexpected match " + m.str() + "; ";
                }
            }
            bool ok = line.actual_order == e.order && line.s_ok && line.relations_ok && line.eigen_ok && round_trip;
            if (!round_trip && line.detail.empty()) line.detail = "recognized as " + c.label.str();
            line.status = ok ? "ok" : "fail";
        } catch (const Error& err) {
            line.status = "fail";
            line.detail = err.what();
        }
        if (line.status == "fail") rep.failures++;
        else rep.verified++;
        rep.lines.push_back(line);
        if (e.label == CatalogLabel{Family::K, 8}) {
            VerifyLine info;
            info.label = e.label;
            info.status = "info";
            info.detail = "K8^o < SL(2, Q(sqrt(-d), sqrt(-3))) stated over the field; integral witness over O_{-3} used";
            rep.lines.push_back(info);
        }
    }
    return rep;
}

std::string family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::K3: return "k3";
        case FamilyTag::Hyperelliptic: return "hyperelliptic";
        case FamilyTag::RuledElliptic: return "ruled";
        case FamilyTag::Enriques: return "enriques";
    }
    return "?";
}

namespace {

Integer point_order(const EPoint& p) {
    Integer n = 1;
    for (const auto& x : p) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    return n;
}

EPoint reduce(const EPoint& p) { return {frac(p[0]), frac(p[1])}; }

bool epoint_zero(const EPoint& p) { return frac(p[0]) == 0 && frac(p[1]) == 0; }

EPoint escale(const EPoint& p, long k) { return reduce({p[0] * k, p[1] * k}); }

// zeta * Q on E, zeta = a + b theta integral.
EPoint emul(const QuadElem& z, const EPoint& q) {
    TorusPoint t = apply_linear(Mat2::diag(z, QuadElem(z.ring(), 1)), TorusPoint({q[0], q[1], 0, 0}));
    return {t[0], t[1]};
}

// Is x in the subgroup of E generated by gens?
bool in_span(const EPoint& x, const std::vector<EPoint>& gens) {
    std::vector<EPoint> seen = {EPoint{Rational(0), Rational(0)}};
    std::vector<EPoint> todo = seen;
    auto same = [](const EPoint& a, const EPoint& b) { return a[0] == b[0] && a[1] == b[1]; };
    while (!todo.empty()) {
        EPoint p = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            EPoint q = reduce({p[0] + g[0], p[1] + g[1]});
            if (std::none_of(seen.begin(), seen.end(), [&](const EPoint& s) { return same(s, q); })) {
                seen.push_back(q);
                todo.push_back(q);
            }
        }
    }
    EPoint r = reduce(x);
    return std::any_of(seen.begin(), seen.end(), [&](const EPoint& s) { return same(s, r); });
}

APoint apoint(const EPoint& a, const EPoint& b) { return {a[0], a[1], b[0], b[1]}; }

void violated(const std::string& what) { throw Error(ErrorKind::TorsionConstraintViolated, what); }

QuadElem root_unit(const RingSpec& ring, int s) {
    auto u = root_to_unit(ring, RootOfUnity(1, s));
    if (!u) throw Error(ErrorKind::BadParameter, "s = " + std::to_string(s) + " needs a ring with units of order s");
    return *u;
}

RingSpec family_ring(const FamilyParams& p, int s) {
    RingSpec want = s == 4 ? make_ring(1, 1) : (s == 3 || s == 6) ? make_ring(3, 1) : make_ring(0, 1);
    if (!p.ring) return want;
    if (s != 2 && !(*p.ring == want))
        throw Error(ErrorKind::BadParameter, "s = " + std::to_string(s) + " requires R = " + want.name());
    return *p.ring;
}

void check_s(int s) {
    if (s != 2 && s != 3 && s != 4 && s != 6) throw Error(ErrorKind::BadParameter, "s must be 2, 3, 4 or 6");
}

FamilyMember k3_family(const FamilyParams& p) {
    FamilyMember fm;
    int j = p.index;
    if (j < 1 || j > 8) throw Error(ErrorKind::BadParameter, "K3 family index must be 1..8");
    if (p.translations.size() > 3) throw Error(ErrorKind::BadParameter, "at most three translations");
    if (j == 8) {
        fm.flags.push_back("alias: H^K3(8,m) has the same conditions as H^K3(7,m)");
        j = 7;
    }
    std::vector<Mat2> lin;
    RingSpec ring;
    auto pick = [&](const RingSpec& fallback) {
        ring = p.ring.value_or(fallback);
    };
    const CatalogEntry* k = nullptr;
    switch (j) {
        case 1:
            pick(make_ring(0, 1));
            lin = {-Mat2::identity(ring)};
            break;
        case 2: k = &catalog_entry({Family::K, 3}); break;
        case 3:
            if (p.ring && *p.ring == make_ring(3, 1)) {
                ring = *p.ring;
                Realization r = realize({Family::K, 8});
                lin = {r.generators[0], r.generators[1]};
            } else {
                k = &catalog_entry({Family::K, 4});
            }
            break;
        case 4: k = &catalog_entry({Family::K, 5}); break;
        case 5: k = &catalog_entry({Family::K, 6}); break;
        case 6: k = &catalog_entry({Family::K, 7}); break;
        case 7: k = &catalog_entry({Family::K, 8}); break;
    }
    if (k) {
        bool any = k->stated_ring == "any R";
        if (any) pick(*k->ring);
        else {
            ring = *k->ring;
            if (p.ring && !(*p.ring == ring))
                throw Error(ErrorKind::BadParameter, "K3 family " + std::to_string(j) + " is realized over " + ring.name());
        }
        for (const auto& w : k->witness) lin.push_back(Mat2::from_ints(ring, w));
    }
    fm.ring = ring;
    for (const auto& t : p.translations) fm.generators.push_back(AffineAut::translation_by(ring, TorusPoint(t)));
    TorusPoint u = p.u ? TorusPoint(*p.u) : TorusPoint();
    for (std::size_t i = 0; i < lin.size(); ++i)
        fm.generators.push_back(AffineAut(i == 0 ? u : TorusPoint(), lin[i]));
    return fm;
}

FamilyMember hyperelliptic_family(const FamilyParams& p) {
    int s = p.index;
    check_s(s);
    FamilyMember fm;
    fm.ring = family_ring(p, s);
    QuadElem zeta = root_unit(fm.ring, s);
    EPoint u1 = reduce(p.u1.value_or(EPoint{Rational(1, s), Rational(0)}));
    if (point_order(u1) != s) violated("U1 must have exact order " + std::to_string(s));
    fm.generators.push_back(
        AffineAut(TorusPoint(apoint(u1, {0, 0})), Mat2::diag(QuadElem(fm.ring, 1), zeta)));
    if (!p.split) return fm;
    if (s == 6) throw Error(ErrorKind::BadParameter, "no split hyperelliptic family for s = 6");
    long pt = s == 4 ? 2 : s;
    EPoint p1 = reduce(p.p1.value_or(s == 3 ? EPoint{Rational(0), Rational(1, 3)} : EPoint{Rational(0), Rational(1, 2)}));
    EPoint dq = s == 2 ? EPoint{Rational(1, 2), Rational(0)}
                       : s == 3 ? EPoint{Rational(1, 3), Rational(1, 3)} : EPoint{Rational(1, 2), Rational(1, 2)};
    EPoint q1 = reduce(p.q1.value_or(dq));
    if (point_order(p1) != pt) violated("P1 must have exact order " + std::to_string(pt));
    if (in_span(p1, {u1})) violated("P1 must not lie in the subgroup generated by U1");
    if (s != 2 && epoint_zero(q1)) violated("Q1 must be non-zero");
    if (!epoint_zero(escale(q1, pt))) violated("Q1 must be " + std::to_string(pt) + "-torsion");
    EPoint zq = reduce(emul(zeta, q1));
    if (zq[0] != q1[0] || zq[1] != q1[1]) violated("Q1 must be fixed by the rotation so that the group is abelian");
    if (s == 4) fm.flags.push_back("(1_i)-torsion read as (1+i)-torsion");
    fm.generators.insert(fm.generators.begin(), AffineAut::translation_by(fm.ring, TorusPoint(apoint(p1, q1))));
    return fm;
}

FamilyMember ruled_family(const FamilyParams& p) {
    int s = p.index;
    check_s(s);
    FamilyMember fm;
    fm.ring = family_ring(p, s);
    QuadElem zeta = root_unit(fm.ring, s);
    if (s != 2 && p.translations.size() > 1) throw Error(ErrorKind::BadParameter, "at most one translation for s > 2");
    if (p.translations.size() > 2) throw Error(ErrorKind::BadParameter, "at most two translations");
    EPoint u1 = reduce(p.u1.value_or(EPoint{Rational(0), Rational(0)}));
    std::vector<EPoint> firsts;
    for (const auto& t : p.translations) firsts.push_back(reduce({t[0], t[1]}));
    bool ok = false;
    for (long k = 1; k < s && !ok; ++k) ok = in_span(escale(u1, k), firsts);
    if (!ok) violated("some multiple k U1 with 1 <= k < s must lie in the span of the first translation components");
    for (const auto& t : p.translations) fm.generators.push_back(AffineAut::translation_by(fm.ring, TorusPoint(t)));
    fm.generators.push_back(AffineAut(TorusPoint(apoint(u1, {0, 0})), Mat2::diag(QuadElem(fm.ring, 1), zeta)));
    return fm;
}

FamilyMember enriques_family(const FamilyParams& p) {
    int s = p.index;
    check_s(s);
    FamilyMember fm;
    fm.ring = p.ring.value_or(make_ring(0, 1));
    static const std::map<int, std::pair<C8, C8>> lin = {
        {2, {kNegI, {0, 0, 1, 0, 1, 0, 0, 0}}},
        {3, {kOrd3, kAnti}},
        {4, {kJinv, {0, 0, 1, 0, 1, 0, 0, 0}}},
        {6, {kOrd6, kAnti}},
    };
    static const std::map<int, APoint> dflt = {
        {2, {Rational(1, 2), 0, 0, 0}},
        {3, {0, Rational(1, 2), Rational(1, 2), 0}},
        {4, {0, Rational(1, 2), Rational(1, 2), 0}},
        {6, {0, Rational(1, 2), Rational(1, 2), 0}},
    };
    Mat2 h = Mat2::from_ints(fm.ring, lin.at(s).first);
    Mat2 ho = Mat2::from_ints(fm.ring, lin.at(s).second);
    TorusPoint u(p.u.value_or(dflt.at(s)));
    if (apply_linear(ho, u) == -u) violated("L(h_o)(U_o,V_o) must differ from -(U_o,V_o)");
    fm.generators = {AffineAut::pure_linear(h), AffineAut(u, ho)};
    AffineGroup g = close_affine(fm.generators, fm.ring);
    bool free = g.size() == 2 * g.kernel_det.size();
    for (const auto& x : g.elements)
        if (free && x.linear.det() != QuadElem(fm.ring, 1) && has_fixed_point(x)) free = false;
    if (!free) fm.flags.push_back("not_enriques: some element outside the SL part has a fixed point");
    return fm;
}

}  // namespace

FamilyMember family_affine(FamilyTag tag, const FamilyParams& params) {
    switch (tag) {
        case FamilyTag::K3: return k3_family(params);
        case FamilyTag::Hyperelliptic: return hyperelliptic_family(params);
        case FamilyTag::RuledElliptic: return ruled_family(params);
        case FamilyTag::Enriques: return enriques_family(params);
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

}  // namespace eesurf

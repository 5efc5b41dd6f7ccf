#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

bool has_flag(const std::vector<std::string>& flags, const std::string& needle) {
    for (const auto& f : flags)
        if (f.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("catalog covers every label range") {
    std::map<Family, int> counts;
    for (const auto& e : catalog_entries()) counts[e.label.family]++;
    CHECK(counts[Family::K] == 8);
    CHECK(counts[Family::HC1] == 4);
    CHECK(counts[Family::HC2] == 7);
    CHECK(counts[Family::HC3] == 5);
    CHECK(counts[Family::HC4] == 9);
    CHECK(counts[Family::HC6] == 7);
    CHECK(counts[Family::HQ8] == 9);
    CHECK(counts[Family::HQ12] == 10);
    CHECK(counts[Family::HSL23] == 9);
    CHECK_THROWS_AS(catalog_entry(CatalogLabel{Family::HC1, 5}), Error);
}

TEST_CASE("realize examples") {
    RingSpec zi = ZI(), o3 = O3();
    Realization k4 = realize(parse_label("K4"));
    CHECK(k4.ring == zi);
    CHECK(k4.generators == std::vector<Mat2>{m(zi, {0, 1, 0, 0, 0, 0, 0, -1}), m(zi, {0, 0, 1, 0, -1, 0, 0, 0})});
    Realization k7 = realize(parse_label("K7"));
    CHECK(k7.ring == o3);
    CHECK(k7.generators == std::vector<Mat2>{m(o3, {0, 0, 1, 0, -1, 0, 0, 0}), m(o3, {0, 1, 0, 0, 0, 0, 1, -1})});
    Realization hq = realize(parse_label("HQ8(2)"));
    CHECK(hq.generators == std::vector<Mat2>{m(zi, {0, 0, 1, 0, -1, 0, 0, 0}), m(zi, {0, 0, 0, 1, 0, 1, 0, 0}),
                                             m(zi, {-1, 0, 0, 0, 0, 0, 1, 0})});
}

TEST_CASE("realize orders for the stated entries") {
    std::vector<std::pair<std::string, std::size_t>> table = {
        {"K4", 8},       {"K7", 12},       {"HQ8(2)", 16},   {"HQ8(9)", 32},
        {"HQ12(5)", 36}, {"HQ12(10)", 72}, {"HSL23(5)", 72}, {"K8", 24}};
    for (const auto& [label, order] : table) {
        Realization r = realize(parse_label(label));
        CHECK(close_linear(r.generators, r.ring).size() == order);
    }
}

TEST_CASE("realize errors") {
    CHECK(error_of([] { realize(parse_label("HQ8(3)")); }) == ErrorKind::NotRealizable);
    try {
        realize(parse_label("HQ12(8)"));
    } catch (const Error& e) {
        CHECK(e.detail().find("Q(sqrt(2), sqrt(3), i)") != std::string::npos);
    }
    CHECK(error_of([] { realize(parse_label("K7"), {{"b1", q(O3(), 2)}}); }) == ErrorKind::BadParameter);
    CHECK(error_of([] { realize(parse_label("K4"), {{"b1", q(ZI(), 1)}}); }) == ErrorKind::BadParameter);
    CHECK(error_of([] { realize(parse_label("K7"), {{"b1", q(ZI(), 0, 1)}}); }) == ErrorKind::RingMismatch);
    CHECK(error_of([] { realize(parse_label("K7"), {{"c", q(O3(), 1)}}); }) == ErrorKind::BadParameter);
}

TEST_CASE("b1 parameter keeps the group order and relations") {
    for (const std::string label : {"K7", "HQ12(2)", "HQ12(5)", "HQ12(10)", "HQ8(9)"}) {
        const CatalogEntry& e = catalog_entry(parse_label(label));
        REQUIRE(e.b1_template);
        auto rels = e.parsed_relations();
        for (const QuadElem& u : units(*e.ring)) {
            Realization r = realize(e.label, {{"b1", u}});
            CHECK(r.generators[0] == Mat2::from_entries(QuadElem(r.ring), u, -(QuadElem(r.ring, 1) / u), QuadElem(r.ring)));
            LinearGroup g = close_linear(r.generators, r.ring);
            CHECK(g.size() == static_cast<std::size_t>(e.order));
            for (const auto& rel : rels) CHECK(relation_holds(rel, r.generators, r.ring));
            CatalogLabel got = classify_gl(g).label;
            CHECK((got == e.label || std::find(e.duplicates.begin(), e.duplicates.end(), got) != e.duplicates.end()));
        }
    }
}

TEST_CASE("parse_params") {
    auto p = parse_params(parse_label("HQ8(9)"), {{"b1", "0,1"}});
    CHECK(p.at("b1") == q(ZI(), 0, 1));
    CHECK(parse_params(parse_label("HQ8(9)"), {{"b1", "[0,-1]"}}).at("b1") == q(ZI(), 0, -1));
    CHECK(parse_params(parse_label("K7"), {{"b1", "-1"}}).at("b1") == q(O3(), -1));
    CHECK_THROWS_AS(parse_params(parse_label("K7"), {{"b1", "x"}}), Error);
}

TEST_CASE("verify_catalog conformance") {
    CatalogReport rep = verify_catalog();
    CHECK(rep.failures == 0);
    int realizable = 0;
    for (const auto& e : catalog_entries()) realizable += e.realizable;
    CHECK(rep.verified == realizable);
    CHECK(rep.not_realizable == static_cast<int>(catalog_entries().size()) - realizable);
    std::map<std::string, long> orders;
    for (const auto& l : rep.lines)
        if (l.status == "ok") {
            CHECK(l.actual_order == l.expected_order);
            CHECK(l.relations_ok);
            CHECK(l.s_ok);
            CHECK(l.eigen_ok);
            orders[l.label.str()] = l.actual_order;
        }
    CHECK(orders["K4"] == 8);
    CHECK(orders["K7"] == 12);
    CHECK(orders["HQ8(2)"] == 16);
    CHECK(orders["HQ8(9)"] == 32);
    CHECK(orders["HQ12(5)"] == 36);
    CHECK(orders["HQ12(10)"] == 72);
    CHECK(orders["HSL23(5)"] == 72);
    bool k8_info = false;
    for (const auto& l : rep.lines)
        if (l.status == "info" && l.label.str() == "K8") k8_info = l.detail.find("Q(sqrt(-d), sqrt(-3))") != std::string::npos;
    CHECK(k8_info);
}

TEST_CASE("flags for resolved typos and presumptions") {
    CHECK(has_flag(catalog_entry(parse_label("HC4(1)")).flags, "typo"));
    CHECK(has_flag(catalog_entry(parse_label("HQ12(1)")).flags, "typo"));
    CHECK(catalog_entry(parse_label("HQ12(1)")).stated_ring == "Z[i]");
    CHECK_FALSE(catalog_entry(parse_label("HQ12(1)")).realizable);
    CHECK(catalog_entry(parse_label("HC4(1)")).symbols[0].eigen[0].second == RootOfUnity(3, 8));
    auto dup = catalog_entry(parse_label("HC2(4)")).duplicates;
    CHECK(std::find(dup.begin(), dup.end(), parse_label("HC2(6)")) != dup.end());
    for (const auto& e : catalog_entries())
        for (const auto& d : e.duplicates) {
            auto back = catalog_entry(d).duplicates;
            CHECK(std::find(back.begin(), back.end(), e.label) != back.end());
        }
}

TEST_CASE("recognition of integral groups for field-only entries") {
    RingSpec zi = ZI();
    LinearGroup hc65 = close_linear({m(zi, {0, 0, -1, 0, 1, 0, 1, 0}), m(zi, {-1, 0, -1, 1, 0, 1, 1, 0})}, zi);
    CHECK(hc65.size() == 24);
    CHECK(hc65.s == 4);
    CHECK(classify_gl(hc65).label.str() == "HC6(5)");
    LinearGroup hq121 = close_linear({m(zi, {0, 0, -1, 0, 1, 0, 0, 0}), m(zi, {0, 0, 0, -1, 0, -1, 1, 0}),
                                      Mat2::scalar(q(zi, 0, 1))},
                                     zi);
    CHECK(hq121.size() == 24);
    CHECK(classify_gl(hq121).label.str() == "HQ12(1)");
    CHECK(classify_gl(hq121).sl_label.str() == "K7");
}

TEST_CASE("recognition rejects groups outside the catalog") {
    RingSpec z = ZZ();
    // translations only: trivial linear image
    LinearGroup triv = close_linear({Mat2::identity(z)}, z);
    CHECK(classify_gl(triv).label.str() == "K1");
}

TEST_CASE("family_affine examples") {
    FamilyParams k3;
    k3.index = 1;
    FamilyMember a = family_affine(FamilyTag::K3, k3);
    REQUIRE(a.generators.size() == 1);
    CHECK(a.generators[0] == lin(-Mat2::identity(a.ring)));
    CHECK(surface_type(close_affine(a.generators, a.ring)).surface_type == SurfaceType::K3);

    FamilyParams he;
    he.index = 2;
    he.u1 = EPoint{Rational(1, 2), 0};
    FamilyMember b = family_affine(FamilyTag::Hyperelliptic, he);
    REQUIRE(b.generators.size() == 1);
    CHECK(b.generators[0] == aff({Rational(1, 2), 0, 0, 0}, m(b.ring, {1, 0, 0, 0, 0, 0, -1, 0})));
    CHECK(surface_type(close_affine(b.generators, b.ring)).surface_type == SurfaceType::Hyperelliptic);

    FamilyParams en;
    en.index = 2;
    FamilyMember c = family_affine(FamilyTag::Enriques, en);
    AffineGroup cg = close_affine(c.generators, c.ring);
    ClassificationReport rc = surface_type(cg);
    CHECK(rc.surface_type == SurfaceType::Enriques);
    CHECK(rc.enriques_index == 2);
    CHECK(cg.contains(lin(-Mat2::identity(c.ring))));
    CHECK(cg.contains(aff({Rational(1, 2), 0, 0, 0}, m(c.ring, {0, 0, 1, 0, 1, 0, 0, 0}))));
}

TEST_CASE("family_affine members classify to their family") {
    for (int s : {2, 3, 4, 6}) {
        CAPTURE(s);
        FamilyParams p;
        p.index = s;
        FamilyMember he = family_affine(FamilyTag::Hyperelliptic, p);
        AffineGroup g = close_affine(he.generators, he.ring);
        CHECK(surface_type(g).surface_type == SurfaceType::Hyperelliptic);
        CHECK(is_smooth_quotient(g));
        FamilyMember en = family_affine(FamilyTag::Enriques, p);
        AffineGroup ge = close_affine(en.generators, en.ring);
        ClassificationReport re = surface_type(ge);
        bool flagged = std::find_if(en.flags.begin(), en.flags.end(), [](const std::string& f) {
                           return f.rfind("not_enriques", 0) == 0;
                       }) != en.flags.end();
        bool free = ge.size() == 2 * ge.kernel_det.size();
        for (const auto& x : ge.elements)
            if (!(x.linear.det() == QuadElem(ge.ring, 1)) && grid_has_fixed_point(x)) free = false;
        CHECK(flagged == !free);
        CHECK(flagged == (s == 3 || s == 6));
        CHECK((re.surface_type == SurfaceType::Enriques) == !flagged);
        if (!flagged) {
            CHECK(re.enriques_index == 2);
            CHECK(enriques_structure_check(ge).holds);
        }
        if (s != 6) {
            p.split = true;
            FamilyMember hs = family_affine(FamilyTag::Hyperelliptic, p);
            CHECK(surface_type(close_affine(hs.generators, hs.ring)).surface_type == SurfaceType::Hyperelliptic);
        }
    }
    for (int j = 1; j <= 8; ++j) {
        CAPTURE(j);
        FamilyParams p;
        p.index = j;
        FamilyMember k = family_affine(FamilyTag::K3, p);
        CHECK(surface_type(close_affine(k.generators, k.ring)).surface_type == SurfaceType::K3);
    }
}

TEST_CASE("ruled family") {
    FamilyParams p;
    p.index = 2;
    p.u1 = EPoint{Rational(1, 2), 0};
    p.translations = {APoint{Rational(1, 2), 0, 0, 0}};
    FamilyMember r = family_affine(FamilyTag::RuledElliptic, p);
    AffineGroup g = close_affine(r.generators, r.ring);
    CHECK(surface_type(g).surface_type == SurfaceType::RuledElliptic);
    CHECK(is_smooth_quotient(g));
    FamilyParams bad;
    bad.index = 2;
    bad.u1 = EPoint{Rational(1, 2), 0};
    CHECK(error_of([&] { family_affine(FamilyTag::RuledElliptic, bad); }) == ErrorKind::TorsionConstraintViolated);
}

TEST_CASE("family torsion constraints") {
    FamilyParams a;
    a.index = 2;
    a.u1 = EPoint{Rational(1, 3), 0};
    CHECK(error_of([&] { family_affine(FamilyTag::Hyperelliptic, a); }) == ErrorKind::TorsionConstraintViolated);
    FamilyParams b;
    b.index = 2;
    b.split = true;
    b.u1 = EPoint{Rational(1, 2), 0};
    b.p1 = EPoint{Rational(1, 2), 0};
    CHECK(error_of([&] { family_affine(FamilyTag::Hyperelliptic, b); }) == ErrorKind::TorsionConstraintViolated);
    FamilyParams c;
    c.index = 6;
    c.split = true;
    CHECK_THROWS_AS(family_affine(FamilyTag::Hyperelliptic, c), Error);
    FamilyParams d;
    d.index = 2;
    d.u = APoint{0, 0, 0, 0};
    CHECK(error_of([&] { family_affine(FamilyTag::Enriques, d); }) == ErrorKind::TorsionConstraintViolated);
    FamilyParams e;
    e.index = 5;
    CHECK_THROWS_AS(family_affine(FamilyTag::Enriques, e), Error);
}

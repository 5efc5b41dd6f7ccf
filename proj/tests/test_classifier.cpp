#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

AffineGroup fixture(const std::string& name) {
    for (auto& [n, g] : surface_fixtures())
        if (n == name) return g;
    throw std::runtime_error("unknown fixture " + name);
}

std::vector<AffineAut> conjugated(const std::vector<AffineAut>& gens, const AffineAut& c) {
    std::vector<AffineAut> out;
    for (const auto& g : gens) out.push_back(affine_compose(affine_compose(c, g), affine_inv(c)));
    return out;
}

}  // namespace

TEST_CASE("surface_type of the worked groups") {
    CHECK(surface_type(fixture("k3")).surface_type == SurfaceType::K3);
    CHECK(surface_type(fixture("hyperelliptic")).surface_type == SurfaceType::Hyperelliptic);
    CHECK(surface_type(fixture("ruled")).surface_type == SurfaceType::RuledElliptic);
    CHECK(surface_type(fixture("rational")).surface_type == SurfaceType::Rational);
    ClassificationReport e = surface_type(fixture("enriques"));
    CHECK(e.surface_type == SurfaceType::Enriques);
    CHECK(e.enriques_index == 2);
    CHECK(e.group_order == 8);
    CHECK(e.kernel_det_order == 4);
    CHECK(e.translation_order == 2);
}

TEST_CASE("abelian and translation groups") {
    RingSpec z = ZZ();
    AffineGroup t = close_affine({AffineAut::translation_by(z, pt({Rational(1, 2), 0, 0, 0}))}, z);
    ClassificationReport r = surface_type(t);
    CHECK(r.surface_type == SurfaceType::Abelian);
    CHECK(r.smooth);
    CHECK(is_smooth_quotient(t));
    CHECK(surface_type(close_affine({lin(Mat2::identity(z))}, z)).surface_type == SurfaceType::Abelian);
}

TEST_CASE("report fields") {
    ClassificationReport k3 = surface_type(fixture("k3"));
    CHECK(k3.group_order == 2);
    CHECK(k3.s == 1);
    CHECK(k3.catalog_label->str() == "K2");
    CHECK_FALSE(k3.smooth);
    CHECK_FALSE(k3.enriques_index.has_value());
    ClassificationReport he = surface_type(fixture("hyperelliptic"));
    CHECK(he.catalog_label->str() == "HC1(1)");
    CHECK(he.common_fixed.empty());
    CHECK(he.elements_with_fixed_points == 0);
    CHECK(he.fixed_point_summary.size() == 1);
    CHECK(he.fixed_point_summary[0].eig_class == EigClass::E1);
    ClassificationReport ra = surface_type(fixture("rational"));
    CHECK(ra.catalog_label->str() == "HC2(1)");
    CHECK(ra.s == 2);
}

TEST_CASE("is_smooth_quotient examples") {
    CHECK_FALSE(is_smooth_quotient(fixture("k3")));
    CHECK(is_smooth_quotient(fixture("hyperelliptic")));
    CHECK(is_smooth_quotient(fixture("ruled")));
    CHECK_FALSE(is_smooth_quotient(fixture("rational")));
}

TEST_CASE("ramification rather than a common fixed point decides the ruled branch") {
    RingSpec z = ZZ();
    Mat2 refl = m(z, {1, 0, 0, 0, 0, 0, -1, 0});
    AffineGroup g = close_affine({AffineAut::translation_by(z, pt({Rational(1, 2), 0, 0, 0})), lin(refl)}, z);
    ClassificationReport r = surface_type(g);
    CHECK(r.common_fixed.empty());
    CHECK(r.surface_type == SurfaceType::RuledElliptic);
}

TEST_CASE("enriques_structure_check") {
    AffineGroup e = fixture("enriques");
    EnriquesCheck c = enriques_structure_check(e);
    CHECK(c.holds);
    CHECK_FALSE(c.isomorphism_type_holds);
    CHECK(c.discrepancy);
    REQUIRE(c.h);
    REQUIRE(c.h_o);
    CHECK(e.contains(*c.h));
    CHECK(e.contains(*c.h_o));
    CHECK(close_affine({*c.h, *c.h_o}, e.ring).elements == e.elements);
    EnriquesCheck lifted = enriques_structure_check(e, true);
    CHECK(lifted.lifted_assumption);
    try {
        enriques_structure_check(fixture("rational"));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::PreconditionViolated);
    }
}

TEST_CASE("enriques_structure_check after an origin shift") {
    Sampler s(51);
    AffineGroup e = fixture("enriques");
    for (int i = 0; i < 10; ++i) {
        AffineAut c = AffineAut::translation_by(e.ring, s.torsion_point());
        AffineGroup shifted = close_affine(conjugated(e.generators, c), e.ring);
        CHECK(surface_type(shifted).surface_type == SurfaceType::Enriques);
        CHECK(enriques_structure_check(shifted).holds);
    }
}

TEST_CASE("enriques family members have a nontrivial translation part") {
    for (int s : {2, 4}) {
        CAPTURE(s);
        FamilyParams p;
        p.index = s;
        FamilyMember f = family_affine(FamilyTag::Enriques, p);
        AffineGroup g = close_affine(f.generators, f.ring);
        REQUIRE(surface_type(g).surface_type == SurfaceType::Enriques);
        EnriquesCheck c = enriques_structure_check(g);
        CHECK(c.holds);
        CHECK(g.translation_subgroup.size() > 1);
        CHECK_FALSE(c.isomorphism_type_holds);
        CHECK(c.discrepancy);
    }
}

TEST_CASE("property: report invariants across fixtures and families") {
    std::vector<std::pair<std::string, AffineGroup>> groups = surface_fixtures();
    for (int s : {2, 3, 4, 6})
        for (FamilyTag tag : {FamilyTag::Hyperelliptic, FamilyTag::Enriques}) {
            FamilyParams p;
            p.index = s;
            FamilyMember f = family_affine(tag, p);
            groups.emplace_back(family_tag_name(tag) + std::to_string(s), close_affine(f.generators, f.ring));
        }
    for (int j = 1; j <= 7; ++j) {
        FamilyParams p;
        p.index = j;
        FamilyMember f = family_affine(FamilyTag::K3, p);
        groups.emplace_back("k3_" + std::to_string(j), close_affine(f.generators, f.ring));
    }
    for (const auto& [name, g] : groups) {
        CAPTURE(name);
        ClassificationReport r = surface_type(g);
        CHECK(r.smooth == is_smooth_quotient(g));
        if (r.surface_type == SurfaceType::Hyperelliptic || r.surface_type == SurfaceType::RuledElliptic)
            CHECK(is_smooth_quotient(g));
        if (r.surface_type == SurfaceType::K3) {
            CHECK(r.s == 1);
            CHECK(g.linear_image.size() > 1);
        }
        if (r.surface_type == SurfaceType::Enriques) {
            CHECK(r.enriques_index == 2);
            CHECK(g.size() == 2 * g.kernel_det.size());
            for (const auto& x : g.elements)
                if (!(x.linear.det() == QuadElem(g.ring, 1))) CHECK(fixed_set(x).empty());
        }
        if (g.linear_image.sl_part.size() == 1 && g.linear_image.s > 1) {
            // all det-generating elements agree on eigenvalue one
            std::set<bool> flags;
            for (const auto& x : g.linear_image.elements)
                if (unit_to_root(x.det()).n == g.linear_image.s) flags.insert(has_eigenvalue_one(x));
            CHECK(flags.size() == 1);
        }
    }
}

TEST_CASE("property: classification is invariant under translation and linear conjugation") {
    Sampler s(52);
    for (const auto& [name, g] : surface_fixtures()) {
        CAPTURE(name);
        ClassificationReport base = surface_type(g);
        for (int i = 0; i < 5; ++i) {
            AffineAut t = AffineAut::translation_by(g.ring, s.torsion_point());
            AffineAut l = lin(s.conjugator(g.ring));
            for (const AffineAut& c : {t, l, affine_compose(t, l)}) {
                AffineGroup h = close_affine(conjugated(g.generators, c), g.ring);
                ClassificationReport r = surface_type(h);
                CHECK(r.surface_type == base.surface_type);
                CHECK(r.catalog_label == base.catalog_label);
                CHECK(r.group_order == base.group_order);
                CHECK(r.smooth == base.smooth);
            }
        }
    }
}

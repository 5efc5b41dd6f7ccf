#include "eesurf/classifier.hpp"

#include <algorithm>

namespace eesurf {

std::string surface_type_name(SurfaceType t) {
    switch (t) {
        case SurfaceType::Abelian: return "Abelian";
        case SurfaceType::K3: return "K3";
        case SurfaceType::Hyperelliptic: return "Hyperelliptic";
        case SurfaceType::RuledElliptic: return "RuledElliptic";
        case SurfaceType::Enriques: return "Enriques";
        case SurfaceType::Rational: return "Rational";
    }
    return "?";
}

namespace {

bool fixed_point_free_outside_kernel(const AffineGroup& h) {
    QuadElem one(h.ring, 1);
    for (const AffineAut& x : h.elements)
        if (!(x.linear.det() == one) && has_fixed_point(x)) return false;
    return true;
}

bool branch4(const AffineGroup& h) {
    return h.linear_image.s > 1 && h.linear_image.sl_part.size() > 1;
}

// Some lattice lift w of u satisfies L w = -w.
bool some_lift_in_minus_one_space(const Mat2& l, const TorusPoint& u) {
    IntMatrix a = linear_to_int4(l);
    for (int i = 0; i < 4; ++i) a[i][i] += 1;
    std::vector<Rational> c(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i] -= a[i][j] * u[j];
    for (const auto& x : c)
        if (x.get_den() != 1) return false;
    SmithDecomposition snf = smith_normal_form(a);
    auto divs = snf.divisors();
    for (std::size_t i = 0; i < 4; ++i) {
        Rational r = 0;
        for (std::size_t j = 0; j < 4; ++j) r += snf.U[i][j] * c[j];
        if (i < divs.size()) {
            if (Rational(r / divs[i]).get_den() != 1) return false;
        } else if (r != 0) {
            return false;
        }
    }
    return true;
}

bool assumption_holds(const AffineAut& ho, bool lifted) {
    if (lifted) return !some_lift_in_minus_one_space(ho.linear, ho.translation);
    return apply_linear(ho.linear, ho.translation) != -ho.translation;
}

}  // namespace

bool is_smooth_quotient(const AffineGroup& h) {
    for (const AffineAut& x : h.elements)
        if (!has_eigenvalue_one(x.linear)) return false;
    return true;
}

EnriquesCheck enriques_structure_check(const AffineGroup& h, bool lifted) {
    if (!branch4(h) || !fixed_point_free_outside_kernel(h))
        throw Error(ErrorKind::PreconditionViolated, "group does not give an Enriques quotient");
    EnriquesCheck out;
    out.lifted_assumption = lifted;
    QuadElem one(h.ring, 1);
    // Proper subgroups already generated by a rejected pair.
    std::vector<std::vector<AffineAut>> proper;
    auto inside = [&](const AffineAut& a, const AffineAut& b) {
        for (const auto& sub : proper)
            if (std::binary_search(sub.begin(), sub.end(), a) && std::binary_search(sub.begin(), sub.end(), b))
                return true;
        return false;
    };
    for (const AffineAut& g : h.kernel_det) {
        auto o = element_order(g.linear);
        if (!o || (*o != 2 && *o != 3 && *o != 4 && *o != 6)) continue;
        Mat2 ginv = mat_inv(g.linear);
        for (const AffineAut& ho : h.elements) {
            if (!(ho.linear.det() == -one) || !has_eigenvalue_one(ho.linear)) continue;
            if (!(ho.linear * g.linear * mat_inv(ho.linear) == ginv)) continue;
            if (!assumption_holds(ho, lifted)) continue;
            if (inside(g, ho)) continue;
            AffineGroup sub = close_affine({g, ho}, h.ring, static_cast<int>(h.size()));
            if (sub.size() != h.size()) {
                proper.push_back(std::move(sub.elements));
                continue;
            }
            out.holds = true;
            out.h = g;
            out.h_o = ho;
            auto og = affine_order(g), oho = affine_order(ho);
            if (h.translation_subgroup.size() == 1 && og && oho && *oho == 2 &&
                static_cast<long>(h.size()) == 2 * og->get_si())
                out.isomorphism_type_holds = true;
            if (out.isomorphism_type_holds || h.translation_subgroup.size() > 1) break;
        }
        if (out.holds && (out.isomorphism_type_holds || h.translation_subgroup.size() > 1)) break;
    }
    out.discrepancy = !(out.holds && out.isomorphism_type_holds);
    return out;
}

ClassificationReport surface_type(const AffineGroup& h) {
    ClassificationReport r;
    const LinearGroup& lin = h.linear_image;
    r.group_order = static_cast<long>(h.size());
    r.translation_order = static_cast<long>(h.translation_subgroup.size());
    r.kernel_det_order = static_cast<long>(h.kernel_det.size());
    r.s = lin.s;
    r.smooth = is_smooth_quotient(h);
    try {
        GlClassification c = classify_gl(lin);
        r.catalog_label = c.label;
        r.sl_label = c.sl_label;
        r.catalog_matches = c.matches;
    } catch (const Error& e) {
        r.notes.push_back(std::string("linear image not recognized: ") + e.what());
    }
    for (std::size_t i = 0; i < h.generators.size(); ++i)
        r.fixed_point_summary.push_back({i, element_eig_class(h.generators[i]), fixed_set(h.generators[i])});
    r.common_fixed = common_fixed_set(h.generators);
    for (const AffineAut& x : h.elements)
        if (!x.is_identity() && has_fixed_point(x)) r.elements_with_fixed_points++;

    if (lin.size() == 1) {
        r.surface_type = SurfaceType::Abelian;
    } else if (lin.s == 1) {
        r.surface_type = SurfaceType::K3;
    } else if (lin.sl_part.size() == 1) {
        std::optional<bool> e1;
        for (const Mat2& m : lin.elements) {
            if (unit_to_root(m.det()).n != lin.s) continue;
            bool has1 = has_eigenvalue_one(m);
            if (e1 && *e1 != has1) r.notes.push_back("det-generating elements disagree on eigenvalue 1");
            if (!e1) e1 = has1;
        }
        if (!e1 || !*e1) r.surface_type = SurfaceType::Rational;
        else if (r.elements_with_fixed_points > 0) r.surface_type = SurfaceType::RuledElliptic;
        else r.surface_type = SurfaceType::Hyperelliptic;
    } else if (fixed_point_free_outside_kernel(h)) {
        r.surface_type = SurfaceType::Enriques;
        r.enriques_index = r.group_order / r.kernel_det_order;
        if (*r.enriques_index != 2) r.notes.push_back("index [H:K] differs from 2");
        r.enriques_check = enriques_structure_check(h);
    } else {
        r.surface_type = SurfaceType::Rational;
    }
    return r;
}

}  // namespace eesurf

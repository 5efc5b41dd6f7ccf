#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eesurf/fixed_points.hpp"

namespace eesurf {

enum class SurfaceType { Abelian, K3, Hyperelliptic, RuledElliptic, Enriques, Rational };

std::string surface_type_name(SurfaceType t);

struct GeneratorFixedSummary {
    std::size_t generator = 0;
    EigClass eig_class = EigClass::Translation;
    FixedPointSet fixed;
};

struct EnriquesCheck {
    bool holds = false;                   // generators (h, h_o) of the stated shape exist
    bool isomorphism_type_holds = false;  // H is C2 x C2 or dihedral with trivial translation part
    bool discrepancy = false;             // the index criterion says Enriques but the shape check fails
    std::optional<AffineAut> h;
    std::optional<AffineAut> h_o;
    bool lifted_assumption = false;       // assumption checked over all lattice lifts
};

struct ClassificationReport {
    SurfaceType surface_type = SurfaceType::Abelian;
    bool smooth = true;
    long group_order = 1;
    long translation_order = 1;
    long kernel_det_order = 1;
    int s = 1;
    std::optional<CatalogLabel> catalog_label;
    std::optional<CatalogLabel> sl_label;
    std::vector<CatalogLabel> catalog_matches;
    std::optional<long> enriques_index;
    std::vector<GeneratorFixedSummary> fixed_point_summary;
    FixedPointSet common_fixed;
    long elements_with_fixed_points = 0;  // non-identity elements
    std::optional<EnriquesCheck> enriques_check;
    std::vector<std::string> notes;
};

ClassificationReport surface_type(const AffineGroup& h);
bool is_smooth_quotient(const AffineGroup& h);
// Precondition: surface_type(h) is Enriques.
EnriquesCheck enriques_structure_check(const AffineGroup& h, bool lifted_assumption = false);

}  // namespace eesurf

#pragma once

#include <string>
#include <vector>

#include "eesurf/torus.hpp"

namespace eesurf {

// U * M * V = D with U, V unimodular and d1 | d2 | ... on the diagonal of D.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;

    std::vector<Integer> divisors() const;  // nonzero diagonal entries
    std::size_t rank() const { return divisors().size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

constexpr std::size_t kMaxRepresentatives = 64;

struct FixedPointSet {
    enum class Kind { Empty, Finite, PositiveDimensional };

    Kind kind = Kind::Empty;
    Integer count = 0;            // Finite
    int dimension = 0;            // PositiveDimensional, complex dimension
    Integer component_count = 0;  // PositiveDimensional
    std::vector<TorusPoint> points;

    bool empty() const { return kind == Kind::Empty; }
    std::string kind_name() const;
};

// All x in (Q/Z)^4 with a x = t modulo Z^rows. a has 4 columns.
FixedPointSet solve_torus_congruence(const IntMatrix& a, const std::vector<Rational>& t);
FixedPointSet fixed_set(const AffineAut& h);
FixedPointSet common_fixed_set(const std::vector<AffineAut>& hs);
// True iff some lattice lift of -t lies in the image of int4(L) - I, same as fixed_set non-empty.
bool has_fixed_point(const AffineAut& h);

enum class EigClass { Translation, E1, E0 };

EigClass element_eig_class(const AffineAut& h);
std::string eig_class_name(EigClass c);
bool is_reflection(const AffineAut& h);

}  // namespace eesurf

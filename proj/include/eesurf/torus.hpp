#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eesurf/matrix_group.hpp"

namespace eesurf {

using IntMatrix = std::vector<std::vector<Integer>>;

// (x1 + y1 theta, x2 + y2 theta) modulo the lattice R x R; coordinates live in [0,1).
class TorusPoint {
public:
    TorusPoint();
    explicit TorusPoint(const std::array<Rational, 4>& c);
    static TorusPoint from_strings(const std::array<std::string, 4>& c);

    const Rational& operator[](int i) const { return c_[i]; }
    const std::array<Rational, 4>& coords() const { return c_; }
    bool is_zero() const;
    // Order in A (least n with n x = 0).
    Integer order() const;

    TorusPoint operator+(const TorusPoint& o) const;
    TorusPoint operator-(const TorusPoint& o) const;
    TorusPoint operator-() const;
    TorusPoint scaled(long k) const;
    bool operator==(const TorusPoint& o) const { return c_ == o.c_; }
    bool operator!=(const TorusPoint& o) const { return !(c_ == o.c_); }
    bool operator<(const TorusPoint& o) const { return c_ < o.c_; }
    std::string str() const;

private:
    std::array<Rational, 4> c_;
};

Rational frac(const Rational& x);

IntMatrix mult_matrix(const QuadElem& x);
IntMatrix linear_to_int4(const Mat2& m);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
Integer int_det(const IntMatrix& m);

// L x for a lift x of the point, reduced modulo the lattice.
TorusPoint apply_linear(const Mat2& m, const TorusPoint& x);

// x -> linear x + translation
struct AffineAut {
    TorusPoint translation;
    Mat2 linear;

    AffineAut() = default;
    AffineAut(TorusPoint t, Mat2 l) : translation(std::move(t)), linear(std::move(l)) {}
    static AffineAut pure_linear(const Mat2& l) { return AffineAut(TorusPoint(), l); }
    static AffineAut translation_by(const RingSpec& ring, const TorusPoint& t) {
        return AffineAut(t, Mat2::identity(ring));
    }

    bool is_identity() const { return translation.is_zero() && linear.is_identity(); }
    bool operator==(const AffineAut& o) const { return linear == o.linear && translation == o.translation; }
    bool operator<(const AffineAut& o) const {
        if (linear != o.linear) return linear < o.linear;
        return translation < o.translation;
    }
    std::string str() const;
};

constexpr int kDefaultAffineCap = 10000;

TorusPoint affine_apply(const AffineAut& h, const TorusPoint& x);
AffineAut affine_compose(const AffineAut& g, const AffineAut& h);
AffineAut affine_inv(const AffineAut& h);
AffineAut affine_pow(const AffineAut& h, long e);
std::optional<Integer> affine_order(const AffineAut& h, long cap = kDefaultAffineCap);

struct AffineGroup {
    RingSpec ring;
    std::vector<AffineAut> elements;  // sorted
    std::vector<AffineAut> generators;
    std::vector<AffineAut> translation_subgroup;
    std::vector<AffineAut> kernel_det;
    LinearGroup linear_image;

    std::size_t size() const { return elements.size(); }
    bool contains(const AffineAut& h) const;
};

AffineGroup close_affine(const std::vector<AffineAut>& generators, const RingSpec& ring,
                         int cap = kDefaultAffineCap);

// g h g^-1 for every generator.
std::vector<AffineAut> conjugate_all(const std::vector<AffineAut>& gens, const AffineAut& g);

}  // namespace eesurf

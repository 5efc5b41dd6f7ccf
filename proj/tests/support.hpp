#pragma once

#include <array>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "eesurf/catalog.hpp"
#include "eesurf/classifier.hpp"
#include "eesurf/io.hpp"

namespace testsupport {

using namespace eesurf;

inline RingSpec ZZ() { return make_ring(0, 1); }
inline RingSpec ZI() { return make_ring(1, 1); }
inline RingSpec O2() { return make_ring(2, 1); }
inline RingSpec O3() { return make_ring(3, 1); }
inline std::vector<RingSpec> catalog_rings() { return {ZZ(), ZI(), O2(), O3()}; }

inline QuadElem q(const RingSpec& r, long a, long b = 0) { return QuadElem(r, a, b); }
inline Mat2 m(const RingSpec& r, std::array<long, 8> c) { return Mat2::from_ints(r, c); }
inline TorusPoint pt(std::array<Rational, 4> c) { return TorusPoint(c); }
inline AffineAut lin(const Mat2& l) { return AffineAut::pure_linear(l); }
inline AffineAut aff(std::array<Rational, 4> t, const Mat2& l) { return AffineAut(TorusPoint(t), l); }

// Q(zeta_24) with basis zeta^0..zeta^7 modulo x^8 - x^4 + 1.
struct Cyclo24 {
    std::array<Rational, 8> c{};

    static Cyclo24 zeta(long k);
    static Cyclo24 rational(const Rational& r);
    Cyclo24 operator+(const Cyclo24& o) const;
    Cyclo24 operator*(const Cyclo24& o) const;
    bool operator==(const Cyclo24& o) const { return c == o.c; }
};

// Complex embedding of theta for the ring.
Cyclo24 embed(const QuadElem& x);
Cyclo24 embed(const RootOfUnity& z);

// Independent integer-only helpers.
Integer det_laplace(const IntMatrix& m);
// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k);
// Number of x in ((1/n) Z / Z)^4 with a x = t mod Z^4, t with denominators dividing n.
long grid_count(const IntMatrix& a, const std::array<Rational, 4>& t, long n);
// Grid search for a fixed point of h on the lattice fine enough to contain one if any exists.
bool grid_has_fixed_point(const AffineAut& h);

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(unsigned long seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    QuadElem elem(const RingSpec& r, long h);
    // det 1, every coordinate in [-h, h].
    Mat2 sl2(const RingSpec& r, long h);
    Mat2 gl2(const RingSpec& r, long h);
    // Small-height element of GL(2,R).
    Mat2 conjugator(const RingSpec& r);
    TorusPoint torsion_point(std::initializer_list<long> dens = {1, 2, 3, 4, 6});
};

// Every finite subgroup appearing in the suites: catalog realizations plus affine fixtures.
std::vector<std::pair<std::string, AffineGroup>> surface_fixtures();

}  // namespace testsupport

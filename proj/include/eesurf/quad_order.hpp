#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "eesurf/error.hpp"

namespace eesurf {

using Rational = mpq_class;
using Integer = mpz_class;

// The order R_{-d,f} = Z + theta Z with theta = f * omega_{-d}, theta^2 = p theta + q.
// d = 0 encodes Z.
struct RingSpec {
    long d = 0;
    long f = 1;
    long p = 0;
    long q = 0;

    bool is_integers() const { return d == 0; }
    bool operator==(const RingSpec& o) const { return d == o.d && f == o.f; }
    std::string name() const;
};

RingSpec make_ring(long d, long f);

// k/n of a full turn, reduced with 0 <= k < n.
struct RootOfUnity {
    long k = 0;
    long n = 1;

    RootOfUnity() = default;
    RootOfUnity(long k, long n);

    long order() const { return n; }
    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const { return RootOfUnity(n - k, n); }
    RootOfUnity pow(long e) const;
    bool operator==(const RootOfUnity& o) const { return k == o.k && n == o.n; }
    // Orders by angle.
    bool operator<(const RootOfUnity& o) const { return k * o.n < o.k * n; }
    std::string str() const;
};

class QuadElem {
public:
    QuadElem() = default;
    explicit QuadElem(const RingSpec& ring, Rational a = 0, Rational b = 0);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const RingSpec& ring() const { return ring_; }

    bool is_integral() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_unit() const;

    QuadElem operator+(const QuadElem& y) const;
    QuadElem operator-(const QuadElem& y) const;
    QuadElem operator*(const QuadElem& y) const;
    QuadElem operator-() const;
    // Division in the fraction field.
    QuadElem operator/(const QuadElem& y) const;

    bool operator==(const QuadElem& y) const { return ring_ == y.ring_ && a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const QuadElem& y) const { return !(*this == y); }

    std::string str() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
    RingSpec ring_;
};

enum class ArithOp { Add, Sub, Mul };

QuadElem arith(const QuadElem& x, const QuadElem& y, ArithOp op);
QuadElem conjugate(const QuadElem& x);
Rational norm(const QuadElem& x);
std::vector<QuadElem> units(const RingSpec& ring);
RootOfUnity unit_to_root(const QuadElem& u);
std::optional<QuadElem> root_to_unit(const RingSpec& ring, const RootOfUnity& r);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace eesurf

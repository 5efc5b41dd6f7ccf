#include "eesurf/quad_order.hpp"

#include <numeric>
#include <sstream>

namespace eesurf {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::BadConductor: return "BadConductor";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::NotInvertibleInR: return "NotInvertibleInR";
        case ErrorKind::DetNotUnit: return "DetNotUnit";
        case ErrorKind::GroupExceedsCap: return "GroupExceedsCap";
        case ErrorKind::InfiniteOrderGenerator: return "InfiniteOrderGenerator";
        case ErrorKind::NotInCatalog: return "NotInCatalog";
        case ErrorKind::AmbiguousLabel: return "AmbiguousLabel";
        case ErrorKind::NotRealizable: return "NotRealizable";
        case ErrorKind::TorsionConstraintViolated: return "TorsionConstraintViolated";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

static bool squarefree(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

RingSpec make_ring(long d, long f) {
    if (d < 0 || !squarefree(d)) throw Error(ErrorKind::NotSquarefree, "d = " + std::to_string(d));
    if (f < 1) throw Error(ErrorKind::BadConductor, "f = " + std::to_string(f));
    if (d == 0 && f != 1) throw Error(ErrorKind::BadConductor, "R = Z requires f = 1");
    RingSpec r;
    r.d = d;
    r.f = f;
    if (d == 0) {
        r.p = 0;
        r.q = 0;
    } else if (d % 4 == 3) {
        r.p = f;
        r.q = -f * f * ((1 + d) / 4);
    } else {
        r.p = 0;
        r.q = -d * f * f;
    }
    return r;
}

std::string RingSpec::name() const {
    if (d == 0) return "Z";
    if (d == 1 && f == 1) return "Z[i]";
    if (f == 1) return "O_{-" + std::to_string(d) + "}";
    return "R_{-" + std::to_string(d) + "," + std::to_string(f) + "}";
}

RootOfUnity::RootOfUnity(long k_, long n_) {
    if (n_ <= 0) throw Error(ErrorKind::BadParameter, "root of unity needs n >= 1");
    k_ %= n_;
    if (k_ < 0) k_ += n_;
    long g = std::gcd(k_, n_);
    if (k_ == 0) {
        k = 0;
        n = 1;
    } else {
        k = k_ / g;
        n = n_ / g;
    }
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long m = std::lcm(n, o.n);
    return RootOfUnity(k * (m / n) + o.k * (m / o.n), m);
}

RootOfUnity RootOfUnity::pow(long e) const {
    long kk = (k * (e % n)) % n;
    return RootOfUnity(kk, n);
}

std::string RootOfUnity::str() const {
    if (k == 0) return "0";
    return std::to_string(k) + "/" + std::to_string(n);
}

QuadElem::QuadElem(const RingSpec& ring, Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)), ring_(ring) {
    a_.canonicalize();
    b_.canonicalize();
    if (ring_.d == 0 && b_ != 0) throw Error(ErrorKind::NotIntegral, "theta component must vanish over Z");
}

bool QuadElem::is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

bool QuadElem::is_unit() const {
    if (!is_integral()) return false;
    if (ring_.d == 0) return a_ == 1 || a_ == -1;
    return norm(*this) == 1;
}

static void same_ring(const QuadElem& x, const QuadElem& y) {
    if (!(x.ring() == y.ring()))
        throw Error(ErrorKind::RingMismatch, x.ring().name() + " vs " + y.ring().name());
}

QuadElem QuadElem::operator+(const QuadElem& y) const {
    same_ring(*this, y);
    return QuadElem(ring_, a_ + y.a_, b_ + y.b_);
}

QuadElem QuadElem::operator-(const QuadElem& y) const {
    same_ring(*this, y);
    return QuadElem(ring_, a_ - y.a_, b_ - y.b_);
}

QuadElem QuadElem::operator*(const QuadElem& y) const {
    same_ring(*this, y);
    Rational bb = b_ * y.b_;
    return QuadElem(ring_, a_ * y.a_ + ring_.q * bb, a_ * y.b_ + b_ * y.a_ + ring_.p * bb);
}

QuadElem QuadElem::operator-() const { return QuadElem(ring_, -a_, -b_); }

QuadElem QuadElem::operator/(const QuadElem& y) const {
    same_ring(*this, y);
    Rational n = norm(y);
    if (n == 0) throw Error(ErrorKind::BadParameter, "division by zero");
    QuadElem c = *this * conjugate(y);
    return QuadElem(ring_, c.a_ / n, c.b_ / n);
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::string QuadElem::str() const {
    if (b_ == 0) return rational_str(a_);
    std::ostringstream os;
    if (a_ != 0) os << rational_str(a_) << (b_ > 0 ? "+" : "-");
    else if (b_ < 0) os << "-";
    Rational ab = abs(b_);
    if (ab != 1) os << rational_str(ab) << "*";
    os << "t";
    return os.str();
}

QuadElem arith(const QuadElem& x, const QuadElem& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
    }
    return x;
}

QuadElem conjugate(const QuadElem& x) {
    const RingSpec& r = x.ring();
    return QuadElem(r, x.a() + x.b() * r.p, -x.b());
}

Rational norm(const QuadElem& x) {
    QuadElem n = x * conjugate(x);
    return n.a();
}

std::vector<QuadElem> units(const RingSpec& r) {
    auto e = [&](long a, long b) { return QuadElem(r, a, b); };
    if (r.d == 1 && r.f == 1) return {e(1, 0), e(0, 1), e(-1, 0), e(0, -1)};
    if (r.d == 3 && r.f == 1) return {e(1, 0), e(0, 1), e(-1, 1), e(-1, 0), e(0, -1), e(1, -1)};
    return {e(1, 0), e(-1, 0)};
}

RootOfUnity unit_to_root(const QuadElem& u) {
    if (!u.is_unit()) throw Error(ErrorKind::NotAUnit, u.str() + " in " + u.ring().name());
    auto us = units(u.ring());
    long n = static_cast<long>(us.size());
    for (long k = 0; k < n; ++k)
        if (us[k] == u) return RootOfUnity(k, n);
    throw Error(ErrorKind::NotAUnit, u.str());
}

std::optional<QuadElem> root_to_unit(const RingSpec& ring, const RootOfUnity& r) {
    auto us = units(ring);
    long n = static_cast<long>(us.size());
    if (n % r.n != 0) return std::nullopt;
    return us[r.k * (n / r.n)];
}

}  // namespace eesurf

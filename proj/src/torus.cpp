#include "eesurf/torus.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace eesurf {

Rational frac(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(q);
    r.canonicalize();
    return r;
}

TorusPoint::TorusPoint() {
    for (auto& x : c_) x = 0;
}

TorusPoint::TorusPoint(const std::array<Rational, 4>& c) {
    for (int i = 0; i < 4; ++i) c_[i] = frac(c[i]);
}

TorusPoint TorusPoint::from_strings(const std::array<std::string, 4>& c) {
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = parse_rational(c[i]);
    return TorusPoint(v);
}

bool TorusPoint::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

Integer TorusPoint::order() const {
    Integer n = 1;
    for (const auto& x : c_) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    return n;
}

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = c_[i] + o.c_[i];
    return TorusPoint(v);
}

TorusPoint TorusPoint::operator-(const TorusPoint& o) const {
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = c_[i] - o.c_[i];
    return TorusPoint(v);
}

TorusPoint TorusPoint::operator-() const { return TorusPoint() - *this; }

TorusPoint TorusPoint::scaled(long k) const {
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = c_[i] * k;
    return TorusPoint(v);
}

std::string TorusPoint::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + rational_str(c_[i]);
    return s + ")";
}

IntMatrix mult_matrix(const QuadElem& x) {
    if (!x.is_integral()) throw Error(ErrorKind::NotIntegral, x.str());
    const RingSpec& r = x.ring();
    Integer a = x.a().get_num(), b = x.b().get_num();
    return {{a, b * r.q}, {b, a + b * r.p}};
}

IntMatrix linear_to_int4(const Mat2& m) {
    IntMatrix out(4, std::vector<Integer>(4, 0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            IntMatrix blk = mult_matrix(m.entry(i, j));
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) out[2 * i + u][2 * j + v] = blk[u][v];
        }
    return out;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

Integer int_det(const IntMatrix& m0) {
    // Bareiss fraction-free elimination.
    IntMatrix m = m0;
    std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

TorusPoint apply_linear(const Mat2& m, const TorusPoint& x) {
    const RingSpec& r = m.ring();
    std::array<Rational, 4> v;
    for (int i = 0; i < 2; ++i) {
        Rational s0 = 0, s1 = 0;
        for (int j = 0; j < 2; ++j) {
            const Integer& a = m.a(i, j);
            const Integer& b = m.b(i, j);
            const Rational& x0 = x[2 * j];
            const Rational& x1 = x[2 * j + 1];
            s0 += a * x0 + Integer(b * r.q) * x1;
            s1 += b * x0 + Integer(a + b * r.p) * x1;
        }
        v[2 * i] = s0;
        v[2 * i + 1] = s1;
    }
    return TorusPoint(v);
}

std::string AffineAut::str() const { return "tau" + translation.str() + "*" + linear.str(); }

TorusPoint affine_apply(const AffineAut& h, const TorusPoint& x) {
    return apply_linear(h.linear, x) + h.translation;
}

AffineAut affine_compose(const AffineAut& g, const AffineAut& h) {
    return AffineAut(g.translation + apply_linear(g.linear, h.translation), g.linear * h.linear);
}

AffineAut affine_inv(const AffineAut& h) {
    Mat2 li = mat_inv(h.linear);
    return AffineAut(-apply_linear(li, h.translation), li);
}

AffineAut affine_pow(const AffineAut& h, long e) {
    AffineAut base = e < 0 ? affine_inv(h) : h;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    AffineAut r = AffineAut::pure_linear(Mat2::identity(h.linear.ring()));
    while (n) {
        if (n & 1) r = affine_compose(r, base);
        n >>= 1;
        if (n) base = affine_compose(base, base);
    }
    return r;
}

std::optional<Integer> affine_order(const AffineAut& h, long cap) {
    auto r = element_order(h.linear);
    if (!r) return std::nullopt;
    // h^r is the translation by the telescoped sum of L^k t.
    TorusPoint tele = affine_pow(h, *r).translation;
    Integer n = Integer(*r) * tele.order();
    if (n > cap) throw Error(ErrorKind::GroupExceedsCap, "element order exceeds cap " + std::to_string(cap));
    return n;
}

bool AffineGroup::contains(const AffineAut& h) const {
    return std::binary_search(elements.begin(), elements.end(), h);
}

AffineGroup close_affine(const std::vector<AffineAut>& generators, const RingSpec& ring, int cap) {
    std::vector<Mat2> lin;
    for (const AffineAut& g : generators) {
        if (!(g.linear.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generator over " + g.linear.ring().name());
        if (!g.linear.det().is_unit())
            throw Error(ErrorKind::DetNotUnit, "det " + g.linear.det().str() + " is not a unit");
        if (!element_order(g.linear)) throw Error(ErrorKind::InfiniteOrderGenerator, g.str());
        lin.push_back(g.linear);
    }
    std::set<AffineAut> seen;
    std::deque<AffineAut> todo;
    AffineAut id = AffineAut::pure_linear(Mat2::identity(ring));
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        AffineAut x = todo.front();
        todo.pop_front();
        for (const AffineAut& g : generators) {
            AffineAut y = affine_compose(x, g);
            if (seen.insert(y).second) {
                if (static_cast<int>(seen.size()) > cap)
                    throw Error(ErrorKind::GroupExceedsCap, "closure exceeds cap " + std::to_string(cap));
                todo.push_back(std::move(y));
            }
        }
    }
    AffineGroup h;
    h.ring = ring;
    h.generators = generators;
    h.elements.assign(seen.begin(), seen.end());
    QuadElem one(ring, 1);
    for (const AffineAut& x : h.elements) {
        if (x.linear.is_identity()) h.translation_subgroup.push_back(x);
        if (x.linear.det() == one) h.kernel_det.push_back(x);
    }
    h.linear_image = close_linear(lin, ring, std::max(cap, kDefaultLinearCap));
    if (h.size() != h.translation_subgroup.size() * h.linear_image.size())
        throw Error(ErrorKind::PreconditionViolated, "affine closure inconsistent with its linear image");
    return h;
}

std::vector<AffineAut> conjugate_all(const std::vector<AffineAut>& gens, const AffineAut& g) {
    AffineAut gi = affine_inv(g);
    std::vector<AffineAut> out;
    for (const AffineAut& h : gens) out.push_back(affine_compose(affine_compose(g, h), gi));
    return out;
}

}  // namespace eesurf

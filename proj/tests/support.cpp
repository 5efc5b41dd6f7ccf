#include "support.hpp"

#include <numeric>

namespace testsupport {

Cyclo24 Cyclo24::zeta(long k) {
    k = ((k % 24) + 24) % 24;
    Cyclo24 x;
    std::array<Rational, 24> poly{};
    poly[k] = 1;
    // reduce with x^8 = x^4 - 1
    for (int i = 23; i >= 8; --i) {
        if (poly[i] == 0) continue;
        Rational v = poly[i];
        poly[i] = 0;
        poly[i - 4] += v;
        poly[i - 8] -= v;
    }
    for (int i = 0; i < 8; ++i) x.c[i] = poly[i];
    return x;
}

Cyclo24 Cyclo24::rational(const Rational& r) {
    Cyclo24 x;
    x.c[0] = r;
    return x;
}

Cyclo24 Cyclo24::operator+(const Cyclo24& o) const {
    Cyclo24 x;
    for (int i = 0; i < 8; ++i) x.c[i] = c[i] + o.c[i];
    return x;
}

Cyclo24 Cyclo24::operator*(const Cyclo24& o) const {
    Cyclo24 x;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (c[i] == 0 || o.c[j] == 0) continue;
            Cyclo24 z = zeta(i + j);
            for (int k = 0; k < 8; ++k) x.c[k] += c[i] * o.c[j] * z.c[k];
        }
    return x;
}

namespace {

Cyclo24 sqrt_minus(long d) {
    switch (d) {
        case 1: return Cyclo24::zeta(6);
        case 2: return Cyclo24::zeta(3) + Cyclo24::zeta(9);
        case 3: return Cyclo24::zeta(4) + Cyclo24::zeta(4) + Cyclo24::rational(-1);
    }
    throw Error(ErrorKind::PreconditionViolated, "no embedding into Q(zeta_24)");
}

}  // namespace

Cyclo24 embed(const QuadElem& x) {
    const RingSpec& r = x.ring();
    Cyclo24 out = Cyclo24::rational(x.a());
    if (x.b() == 0) return out;
    Cyclo24 omega = r.d % 4 == 3 ? (Cyclo24::rational(1) + sqrt_minus(r.d)) * Cyclo24::rational(Rational(1, 2))
                                 : sqrt_minus(r.d);
    return out + omega * Cyclo24::rational(x.b() * r.f);
}

Cyclo24 embed(const RootOfUnity& z) { return Cyclo24::zeta(z.k * (24 / z.n)); }

Integer det_laplace(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMatrix sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        Integer term = m[0][j] * det_laplace(sub);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.size(), k, 0, cur, rs);
    subsets(m.empty() ? 0 : m[0].size(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            IntMatrix sub;
            for (auto i : r) {
                std::vector<Integer> row;
                for (auto j : c) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            Integer d = det_laplace(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return g;
}

long grid_count(const IntMatrix& a, const std::array<Rational, 4>& t, long n) {
    std::array<long, 4> nt;
    std::array<std::array<long, 4>, 4> al;
    for (int i = 0; i < 4; ++i) {
        Rational v = t[i] * n;
        if (v.get_den() != 1) throw Error(ErrorKind::PreconditionViolated, "grid too coarse");
        nt[i] = v.get_num().get_si();
        for (int j = 0; j < 4; ++j) al[i][j] = a[i][j].get_si();
    }
    long count = 0;
    std::array<long, 4> k{};
    for (k[0] = 0; k[0] < n; ++k[0])
        for (k[1] = 0; k[1] < n; ++k[1])
            for (k[2] = 0; k[2] < n; ++k[2])
                for (k[3] = 0; k[3] < n; ++k[3]) {
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) {
                        long s = nt[i];
                        for (int j = 0; j < 4; ++j) s += al[i][j] * k[j];
                        ok = s % n == 0;
                    }
                    count += ok;
                }
    return count;
}

bool grid_has_fixed_point(const AffineAut& h) {
    IntMatrix a = linear_to_int4(h.linear);
    for (int i = 0; i < 4; ++i) a[i][i] -= 1;
    long n = 1;
    for (std::size_t k = 4; k >= 1; --k) {
        Integer dk = determinantal_divisor(a, k);
        if (dk != 0) {
            Integer prev = k == 1 ? Integer(1) : determinantal_divisor(a, k - 1);
            n = Integer(abs(dk / prev)).get_si();
            break;
        }
    }
    std::array<Rational, 4> t;
    for (int k = 0; k < 4; ++k) {
        t[k] = -h.translation[k];
        n = std::lcm(n, t[k].get_den().get_si());
    }
    return grid_count(a, t, n) > 0;
}

QuadElem Sampler::elem(const RingSpec& r, long h) {
    return QuadElem(r, uniform(-h, h), r.is_integers() ? 0 : uniform(-h, h));
}

namespace {

// a + b theta with machine integers, for fast sampling.
struct Small {
    long a = 0, b = 0;
};

struct SmallRing {
    long p, q;
    Small mul(Small x, Small y) const {
        return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a + x.b * y.b * p};
    }
    Small sub(Small x, Small y) const { return {x.a - y.a, x.b - y.b}; }
    Small conj(Small x) const { return {x.a + x.b * p, -x.b}; }
    long norm(Small x) const { return mul(x, conj(x)).a; }
    static long round_div(long n, long d) {
        // nearest integer to n/d, d > 0
        long f = n >= 0 ? (2 * n + d) / (2 * d) : -((-2 * n + d) / (2 * d));
        return f;
    }
    Small quo(Small x, Small y) const {
        Small c = mul(x, conj(y));
        long n = norm(y);
        return {round_div(c.a, n), round_div(c.b, n)};
    }
};

bool small_within(const std::array<Small, 4>& e, long h) {
    for (const auto& x : e)
        if (std::abs(x.a) > h || std::abs(x.b) > h) return false;
    return true;
}

}  // namespace

Mat2 Sampler::sl2(const RingSpec& r, long h) {
    bool euclidean = r.f == 1 && (r.d == 0 || r.d == 1 || r.d == 2 || r.d == 3);
    if (!euclidean) {
        // products of elementary matrices
        for (;;) {
            Mat2 x = Mat2::identity(r);
            for (int i = 0; i < 3; ++i) {
                QuadElem e = elem(r, 2), z(r), one(r, 1);
                x = x * (i % 2 == 0 ? Mat2::from_entries(one, e, z, one) : Mat2::from_entries(one, z, e, one));
            }
            bool ok = true;
            for (const auto& c : x.coords()) ok = ok && abs(c) <= h;
            if (ok) return x;
        }
    }
    SmallRing R{r.p, r.q};
    auto pick = [&] { return Small{uniform(-h, h), r.is_integers() ? 0 : uniform(-h, h)}; };
    for (;;) {
        Small a = pick(), c = pick();
        if (R.norm(a) == 0 && R.norm(c) == 0) continue;
        // extended Euclid on (a, c)
        Small x = a, y = c, sx{1, 0}, tx{0, 0}, sy{0, 0}, ty{1, 0};
        while (R.norm(y) != 0) {
            Small k = R.quo(x, y);
            Small rem = R.sub(x, R.mul(k, y));
            x = y;
            y = rem;
            Small ns = R.sub(sx, R.mul(k, sy)), nt = R.sub(tx, R.mul(k, ty));
            sx = sy;
            tx = ty;
            sy = ns;
            ty = nt;
        }
        if (R.norm(x) != 1) continue;
        // x is a unit; divide through by it
        Small xi = R.conj(x);
        Small d = R.mul(sx, xi), b = R.sub(Small{0, 0}, R.mul(tx, xi));
        for (int tries = 0; tries < 8; ++tries) {
            Small k = pick();
            k.a %= 3;
            k.b %= 3;
            std::array<Small, 4> e = {a, R.sub(b, R.mul(k, a)), c, R.sub(d, R.mul(k, c))};
            // b - k a, d - k c keeps det 1
            if (small_within(e, h))
                return Mat2::from_ints(r, {e[0].a, e[0].b, e[1].a, e[1].b, e[2].a, e[2].b, e[3].a, e[3].b});
        }
    }
}

namespace {

bool within(const Mat2& x, long h) {
    for (const auto& c : x.coords())
        if (abs(c) > h) return false;
    return true;
}

}  // namespace

Mat2 Sampler::gl2(const RingSpec& r, long h) {
    std::vector<QuadElem> us = units(r);
    QuadElem u = us[uniform(0, static_cast<long>(us.size()) - 1)];
    for (;;) {
        Mat2 x = sl2(r, h) * Mat2::diag(u, QuadElem(r, 1));
        if (within(x, h)) return x;
    }
}

Mat2 Sampler::conjugator(const RingSpec& r) { return gl2(r, 3); }

TorusPoint Sampler::torsion_point(std::initializer_list<long> dens) {
    std::vector<long> ds(dens);
    long n = ds[uniform(0, static_cast<long>(ds.size()) - 1)];
    std::array<Rational, 4> c;
    for (auto& x : c) x = Rational(uniform(0, n - 1), n);
    for (auto& x : c) x.canonicalize();
    return TorusPoint(c);
}

std::vector<std::pair<std::string, AffineGroup>> surface_fixtures() {
    std::vector<std::pair<std::string, AffineGroup>> out;
    RingSpec z = ZZ(), zi = ZI();
    Rational h(1, 2);
    Mat2 negI = -Mat2::identity(z), refl = m(z, {1, 0, 0, 0, 0, 0, -1, 0}), swap = m(z, {0, 0, 1, 0, 1, 0, 0, 0});
    out.emplace_back("k3", close_affine({lin(negI)}, z));
    out.emplace_back("hyperelliptic", close_affine({aff({h, 0, 0, 0}, refl)}, z));
    out.emplace_back("ruled", close_affine({lin(refl)}, z));
    out.emplace_back("rational", close_affine({lin(Mat2::scalar(QuadElem(zi, 0, 1)))}, zi));
    out.emplace_back("enriques", close_affine({lin(negI), aff({h, 0, 0, 0}, swap)}, z));
    return out;
}

}  // namespace testsupport

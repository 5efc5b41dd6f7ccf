#include "eesurf/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace eesurf {

namespace {

void mul_coords(const RingSpec& r, const Integer& a1, const Integer& b1, const Integer& a2, const Integer& b2,
                Integer& ra, Integer& rb) {
    Integer bb = b1 * b2;
    ra = a1 * a2 + r.q * bb;
    rb = a1 * b2 + a2 * b1 + r.p * bb;
}

Integer to_int(const Rational& x) {
    if (x.get_den() != 1) throw Error(ErrorKind::NotIntegral, rational_str(x));
    return x.get_num();
}

}  // namespace

Mat2::Mat2(const RingSpec& ring) : ring_(ring) {
    for (auto& x : c_) x = 0;
}

Mat2::Mat2(const RingSpec& ring, const Coords& c) : ring_(ring), c_(c) {
    if (ring.d == 0)
        for (int k = 1; k < 8; k += 2)
            if (c_[k] != 0) throw Error(ErrorKind::NotIntegral, "theta component over Z");
}

Mat2 Mat2::from_entries(const QuadElem& e11, const QuadElem& e12, const QuadElem& e21, const QuadElem& e22) {
    const RingSpec& r = e11.ring();
    for (const QuadElem* e : {&e12, &e21, &e22})
        if (!(e->ring() == r)) throw Error(ErrorKind::RingMismatch, "matrix entries over different rings");
    Coords c;
    const QuadElem* es[4] = {&e11, &e12, &e21, &e22};
    for (int k = 0; k < 4; ++k) {
        if (!es[k]->is_integral()) throw Error(ErrorKind::NotIntegral, "entry " + es[k]->str() + " not in R");
        c[2 * k] = to_int(es[k]->a());
        c[2 * k + 1] = to_int(es[k]->b());
    }
    return Mat2(r, c);
}

Mat2 Mat2::from_ints(const RingSpec& ring, const std::array<long, 8>& v) {
    Coords c;
    for (int k = 0; k < 8; ++k) c[k] = v[k];
    return Mat2(ring, c);
}

Mat2 Mat2::identity(const RingSpec& ring) { return from_ints(ring, {1, 0, 0, 0, 0, 0, 1, 0}); }

Mat2 Mat2::scalar(const QuadElem& x) {
    QuadElem z(x.ring());
    return from_entries(x, z, z, x);
}

Mat2 Mat2::diag(const QuadElem& x, const QuadElem& y) {
    QuadElem z(x.ring());
    return from_entries(x, z, z, y);
}

QuadElem Mat2::entry(int i, int j) const { return QuadElem(ring_, Rational(a(i, j)), Rational(b(i, j))); }

QuadElem Mat2::det() const {
    Integer pa, pb, qa, qb;
    mul_coords(ring_, a(0, 0), b(0, 0), a(1, 1), b(1, 1), pa, pb);
    mul_coords(ring_, a(0, 1), b(0, 1), a(1, 0), b(1, 0), qa, qb);
    return QuadElem(ring_, Rational(pa - qa), Rational(pb - qb));
}

QuadElem Mat2::tr() const {
    return QuadElem(ring_, Rational(a(0, 0) + a(1, 1)), Rational(b(0, 0) + b(1, 1)));
}

bool Mat2::is_identity() const {
    return c_[0] == 1 && c_[6] == 1 && c_[1] == 0 && c_[7] == 0 && c_[2] == 0 && c_[3] == 0 && c_[4] == 0 &&
           c_[5] == 0;
}

bool Mat2::is_scalar() const {
    return c_[2] == 0 && c_[3] == 0 && c_[4] == 0 && c_[5] == 0 && c_[0] == c_[6] && c_[1] == c_[7];
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (!(ring_ == o.ring_)) throw Error(ErrorKind::RingMismatch, ring_.name() + " vs " + o.ring_.name());
    Coords r;
    Integer xa, xb, ya, yb;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mul_coords(ring_, a(i, 0), b(i, 0), o.a(0, j), o.b(0, j), xa, xb);
            mul_coords(ring_, a(i, 1), b(i, 1), o.a(1, j), o.b(1, j), ya, yb);
            r[4 * i + 2 * j] = xa + ya;
            r[4 * i + 2 * j + 1] = xb + yb;
        }
    Mat2 m;
    m.ring_ = ring_;
    m.c_ = std::move(r);
    return m;
}

Mat2 Mat2::operator-() const {
    Mat2 m = *this;
    for (auto& x : m.c_) x = -x;
    return m;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << entry(0, 0).str() << "," << entry(0, 1).str() << "],[" << entry(1, 0).str() << ","
       << entry(1, 1).str() << "]]";
    return os.str();
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) { return a * b; }

Mat2 mat_inv(const Mat2& m) {
    QuadElem d = m.det();
    if (!d.is_unit()) throw Error(ErrorKind::NotInvertibleInR, "det " + d.str() + " is not a unit");
    QuadElem di = QuadElem(d.ring(), 1) / d;
    return Mat2::from_entries(di * m.entry(1, 1), -(di * m.entry(0, 1)), -(di * m.entry(1, 0)), di * m.entry(0, 0));
}

Mat2 mat_pow(const Mat2& m, long e) {
    Mat2 base = e < 0 ? mat_inv(m) : m;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Mat2 r = Mat2::identity(m.ring());
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

std::pair<Rational, Rational> trace_sqrt_coords(const QuadElem& t) {
    const RingSpec& r = t.ring();
    if (r.d == 0) return {t.a(), Rational(0)};
    if (r.d % 4 == 3) {
        Rational half = Rational(t.b() * r.f) / 2;
        return {t.a() + half, half};
    }
    return {t.a(), t.b() * r.f};
}

std::optional<int> element_order(const Mat2& m) {
    if (!m.det().is_unit()) throw Error(ErrorKind::DetNotUnit, "det " + m.det().str() + " is not a unit");
    // eigenvalues of finite order lie on the unit circle, so |tr|^2 <= 4
    if (norm(m.tr()) > 4) return std::nullopt;
    Mat2 p = m;
    for (int n = 1; n <= 12; ++n) {
        if (p.is_identity()) return n;
        p = p * m;
    }
    return std::nullopt;
}

namespace {

struct EigenRow {
    RootOfUnity det;
    long d;  // 0 when valid over every ring
    Rational x, y;
    RootOfUnity l1, l2;
    int order;
    bool scalar;
};

std::vector<EigenRow> build_table() {
    struct Raw {
        long dk, dn, d;
        const char *x, *y;
        long k1, n1, k2, n2;
        int order;
        bool scalar;
    };
    static const Raw raw[] = {
        {0, 1, 0, "2", "0", 0, 1, 0, 1, 1, true},
        {0, 1, 0, "-2", "0", 1, 2, 1, 2, 2, true},
        {0, 1, 0, "1", "0", 1, 6, 5, 6, 6, false},
        {0, 1, 0, "-1", "0", 1, 3, 2, 3, 3, false},
        {0, 1, 0, "0", "0", 1, 4, 3, 4, 4, false},
        {1, 2, 0, "0", "0", 1, 2, 0, 1, 2, false},
        {1, 2, 2, "0", "1", 1, 8, 3, 8, 8, false},
        {1, 2, 2, "0", "-1", 5, 8, 7, 8, 8, false},
        {1, 2, 1, "0", "2", 1, 4, 1, 4, 4, true},
        {1, 2, 1, "0", "-2", 3, 4, 3, 4, 4, true},
        {1, 2, 1, "0", "1", 1, 12, 5, 12, 12, false},
        {1, 2, 1, "0", "-1", 7, 12, 11, 12, 12, false},
        {1, 2, 3, "0", "1", 1, 6, 1, 3, 6, false},
        {1, 2, 3, "0", "-1", 2, 3, 5, 6, 6, false},
        {1, 4, 1, "0", "0", 3, 8, 7, 8, 8, false},
        {1, 4, 1, "1", "1", 1, 4, 0, 1, 4, false},
        {1, 4, 1, "-1", "-1", 3, 4, 1, 2, 4, false},
        {3, 4, 1, "0", "0", 1, 8, 5, 8, 8, false},
        {3, 4, 1, "1", "-1", 3, 4, 0, 1, 4, false},
        {3, 4, 1, "-1", "1", 1, 4, 1, 2, 4, false},
        {1, 6, 3, "0", "0", 1, 3, 5, 6, 6, false},
        {1, 6, 3, "3/2", "1/2", 1, 6, 0, 1, 6, false},
        {1, 6, 3, "-3/2", "-1/2", 2, 3, 1, 2, 6, false},
        {5, 6, 3, "0", "0", 1, 6, 2, 3, 6, false},
        {5, 6, 3, "3/2", "-1/2", 5, 6, 0, 1, 6, false},
        {5, 6, 3, "-3/2", "1/2", 1, 3, 1, 2, 6, false},
        {1, 3, 3, "0", "0", 5, 12, 11, 12, 12, false},
        {1, 3, 3, "1/2", "1/2", 1, 3, 0, 1, 3, false},
        {1, 3, 3, "-1", "-1", 2, 3, 2, 3, 3, true},
        {1, 3, 3, "-1/2", "-1/2", 5, 6, 1, 2, 6, false},
        {1, 3, 3, "1", "1", 1, 6, 1, 6, 6, true},
        {2, 3, 3, "0", "0", 1, 12, 7, 12, 12, false},
        {2, 3, 3, "1/2", "-1/2", 2, 3, 0, 1, 3, false},
        {2, 3, 3, "-1", "1", 1, 3, 1, 3, 3, true},
        {2, 3, 3, "-1/2", "1/2", 1, 6, 1, 2, 6, false},
        {2, 3, 3, "1", "-1", 5, 6, 5, 6, 6, true},
    };
    std::vector<EigenRow> rows;
    for (const Raw& r : raw)
        rows.push_back({RootOfUnity(r.dk, r.dn), r.d, parse_rational(r.x), parse_rational(r.y),
                        RootOfUnity(r.k1, r.n1), RootOfUnity(r.k2, r.n2), r.order, r.scalar});
    return rows;
}

const std::vector<EigenRow>& eigen_table() {
    static const std::vector<EigenRow> t = build_table();
    return t;
}

}  // namespace

std::optional<EigenClass> eigen_classify(const Mat2& m) {
    QuadElem d = m.det();
    if (!d.is_unit()) throw Error(ErrorKind::DetNotUnit, "det " + d.str() + " in " + m.ring().name());
    RootOfUnity dr = unit_to_root(d);
    auto [x, y] = trace_sqrt_coords(m.tr());
    for (const EigenRow& row : eigen_table()) {
        if (!(row.det == dr) || row.x != x || row.y != y) continue;
        if (row.d != 0 && row.d != m.ring().d) continue;
        if (row.scalar && !m.is_scalar()) return std::nullopt;
        return EigenClass{row.l1, row.l2, row.order};
    }
    return std::nullopt;
}

bool has_eigenvalue_one(const Mat2& m) { return m.tr() == m.det() + QuadElem(m.ring(), 1); }

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

bool LinearGroup::contains(const Mat2& m) const { return std::binary_search(elements.begin(), elements.end(), m); }

LinearGroup close_linear(const std::vector<Mat2>& generators, const RingSpec& ring, int cap) {
    for (const Mat2& g : generators) {
        if (!(g.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generator over " + g.ring().name());
        if (!g.det().is_unit()) throw Error(ErrorKind::DetNotUnit, "det " + g.det().str() + " is not a unit");
        if (!element_order(g)) throw Error(ErrorKind::InfiniteOrderGenerator, g.str());
    }
    std::set<Mat2> seen;
    std::deque<Mat2> todo;
    Mat2 id = Mat2::identity(ring);
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        Mat2 x = todo.front();
        todo.pop_front();
        for (const Mat2& g : generators) {
            Mat2 y = x * g;
            if (seen.insert(y).second) {
                if (static_cast<int>(seen.size()) > cap)
                    throw Error(ErrorKind::GroupExceedsCap, "closure exceeds cap " + std::to_string(cap));
                todo.push_back(std::move(y));
            }
        }
    }
    LinearGroup h;
    h.ring = ring;
    h.generators = generators;
    h.elements.assign(seen.begin(), seen.end());
    std::set<std::pair<long, long>> dets;
    for (const Mat2& m : h.elements) {
        QuadElem d = m.det();
        if (d == QuadElem(ring, 1)) h.sl_part.push_back(m);
        RootOfUnity r = unit_to_root(d);
        dets.insert({r.k, r.n});
        if (r.n > h.det_generator.n) h.det_generator = r;
    }
    h.s = static_cast<int>(dets.size());
    if (h.det_generator.n != h.s || h.size() != static_cast<std::size_t>(h.s) * h.sl_part.size())
        throw Error(ErrorKind::PreconditionViolated, "determinant image is not cyclic of the expected order");
    return h;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::K: return "K";
        case Family::HC1: return "HC1";
        case Family::HC2: return "HC2";
        case Family::HC3: return "HC3";
        case Family::HC4: return "HC4";
        case Family::HC6: return "HC6";
        case Family::HQ8: return "HQ8";
        case Family::HQ12: return "HQ12";
        case Family::HSL23: return "HSL23";
    }
    return "?";
}

int family_size(Family f) {
    switch (f) {
        case Family::K: return 8;
        case Family::HC1: return 4;
        case Family::HC2: return 7;
        case Family::HC3: return 5;
        case Family::HC4: return 9;
        case Family::HC6: return 7;
        case Family::HQ8: return 9;
        case Family::HQ12: return 10;
        case Family::HSL23: return 9;
    }
    return 0;
}

std::string CatalogLabel::str() const {
    if (family == Family::K) return "K" + std::to_string(index);
    return family_name(family) + "(" + std::to_string(index) + ")";
}

CatalogLabel parse_label(const std::string& s) {
    static const Family all[] = {Family::HSL23, Family::HQ12, Family::HQ8, Family::HC1, Family::HC2,
                                 Family::HC3,   Family::HC4,  Family::HC6, Family::K};
    for (Family f : all) {
        std::string name = family_name(f);
        if (s.rfind(name, 0) != 0) continue;
        std::string rest = s.substr(name.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) break;
        int idx = std::stoi(rest);
        if (idx < 1 || idx > family_size(f)) break;
        return CatalogLabel{f, idx};
    }
    throw Error(ErrorKind::ParseError, "unknown catalog label '" + s + "'");
}

CatalogLabel classify_sl(const LinearGroup& k) {
    std::map<int, int> counts;
    for (const Mat2& m : k.elements) {
        if (!(m.det() == QuadElem(k.ring, 1))) throw Error(ErrorKind::PreconditionViolated, "element outside SL(2,R)");
        auto o = element_order(m);
        if (!o) throw Error(ErrorKind::NotInCatalog, "infinite order element");
        counts[*o]++;
    }
    static const std::map<std::size_t, std::pair<int, std::map<int, int>>> expected = {
        {1, {1, {{1, 1}}}},
        {2, {2, {{1, 1}, {2, 1}}}},
        {4, {3, {{1, 1}, {2, 1}, {4, 2}}}},
        {8, {4, {{1, 1}, {2, 1}, {4, 6}}}},
        {3, {5, {{1, 1}, {3, 2}}}},
        {6, {6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}}},
        {12, {7, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}}},
        {24, {8, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}}},
    };
    auto it = expected.find(k.size());
    if (it == expected.end() || it->second.second != counts)
        throw Error(ErrorKind::NotInCatalog, "SL subgroup of order " + std::to_string(k.size()));
    return CatalogLabel{Family::K, it->second.first};
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Word parse_word(std::string s, const std::vector<std::string>& symbols) {
    Word w;
    s = trim(s);
    if (!s.empty() && s[0] == '-') {
        w.sign = -1;
        s = trim(s.substr(1));
    }
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        long e = 1;
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (caret != std::string::npos) e = std::stol(tok.substr(caret + 1));
        auto it = std::find(symbols.begin(), symbols.end(), name);
        if (it == symbols.end()) throw Error(ErrorKind::ParseError, "unknown symbol '" + name + "'");
        w.factors.push_back({static_cast<int>(it - symbols.begin()), e});
    }
    return w;
}

}  // namespace

Relation parse_relation(const std::string& text, const std::vector<std::string>& symbols) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "relation without '=': " + text);
    return Relation{text, parse_word(text.substr(0, eq), symbols), parse_word(text.substr(eq + 1), symbols)};
}

Mat2 eval_word(const Word& w, const std::vector<Mat2>& values, const RingSpec& ring) {
    Mat2 r = Mat2::identity(ring);
    for (auto [i, e] : w.factors) r = r * mat_pow(values.at(i), e);
    return w.sign < 0 ? -r : r;
}

bool relation_holds(const Relation& r, const std::vector<Mat2>& values, const RingSpec& ring) {
    return eval_word(r.lhs, values, ring) == eval_word(r.rhs, values, ring);
}

}  // namespace eesurf

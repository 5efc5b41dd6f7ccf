#include "eesurf/fixed_points.hpp"

#include <algorithm>

namespace eesurf {

namespace {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= q row_j
void row_sub(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

// col_i -= q col_j
void col_sub(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
    for (auto& row : m) row[i] -= q * row[j];
}

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::divisors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < D.size() && (D.empty() || i < D[0].size()); ++i)
        if (D[i][i] != 0) out.push_back(D[i][i]);
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    IntMatrix D = m, U = identity_matrix(rows), V = identity_matrix(cols);
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (!found || abs(D[i][j]) < abs(D[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(V, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D[i][t] == 0) continue;
                Integer q = fdiv(D[i][t], D[t][t]);
                row_sub(D, i, t, q);
                row_sub(U, i, t, q);
                if (D[i][t] != 0) {
                    swap_rows(D, t, i);
                    swap_rows(U, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D[t][j] == 0) continue;
                Integer q = fdiv(D[t][j], D[t][t]);
                col_sub(D, j, t, q);
                col_sub(V, j, t, q);
                if (D[t][j] != 0) {
                    swap_cols(D, t, j);
                    swap_cols(V, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: fold an offending row into the pivot row
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        for (std::size_t c = 0; c < cols; ++c) D[t][c] += D[i][c];
                        for (std::size_t c = 0; c < rows; ++c) U[t][c] += U[i][c];
                        clean = false;
                        break;
                    }
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
        ++t;
    }
    return SmithDecomposition{U, V, D};
}

std::string FixedPointSet::kind_name() const {
    switch (kind) {
        case Kind::Empty: return "Empty";
        case Kind::Finite: return "Finite";
        case Kind::PositiveDimensional: return "PositiveDimensional";
    }
    return "?";
}

FixedPointSet solve_torus_congruence(const IntMatrix& a, const std::vector<Rational>& t) {
    std::size_t rows = a.size();
    if (t.size() != rows) throw Error(ErrorKind::PreconditionViolated, "right-hand side has the wrong length");
    for (const auto& row : a)
        if (row.size() != 4) throw Error(ErrorKind::PreconditionViolated, "congruence matrix needs 4 columns");
    SmithDecomposition s = smith_normal_form(a);
    std::vector<Rational> ut(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ut[i] += s.U[i][j] * t[j];
    std::vector<Integer> divs = s.divisors();
    std::size_t r = divs.size();
    FixedPointSet out;
    for (std::size_t i = r; i < rows; ++i)
        if (ut[i].get_den() != 1) return out;

    Integer total = 1;
    for (const auto& d : divs) total *= d;
    std::size_t free_dims = 4 - r;
    if (free_dims == 0) {
        out.kind = FixedPointSet::Kind::Finite;
        out.count = total;
    } else {
        out.kind = FixedPointSet::Kind::PositiveDimensional;
        out.dimension = static_cast<int>((free_dims + 1) / 2);
        out.component_count = total;
    }

    // Representatives: y_i = (ut_i + k_i) / d_i, free coordinates 0, x = V y.
    const Integer kEnumerationLimit = 1 << 20;
    Integer limit = total <= kEnumerationLimit ? total : Integer(kMaxRepresentatives);
    std::vector<TorusPoint> pts;
    std::vector<Integer> digit(r, 0);
    for (Integer n = 0; n < limit; ++n) {
        std::array<Rational, 4> y;
        for (std::size_t i = 0; i < 4; ++i) y[i] = 0;
        for (std::size_t i = 0; i < r; ++i) y[i] = (ut[i] + digit[i]) / Rational(divs[i]);
        std::array<Rational, 4> x;
        for (std::size_t i = 0; i < 4; ++i) {
            x[i] = 0;
            for (std::size_t j = 0; j < 4; ++j) x[i] += s.V[i][j] * y[j];
        }
        pts.emplace_back(x);
        for (std::size_t i = 0; i < r; ++i) {
            if (++digit[i] < divs[i]) break;
            digit[i] = 0;
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() > kMaxRepresentatives) pts.resize(kMaxRepresentatives);
    out.points = std::move(pts);
    return out;
}

namespace {

IntMatrix shifted(const AffineAut& h) {
    IntMatrix a = linear_to_int4(h.linear);
    for (int i = 0; i < 4; ++i) a[i][i] -= 1;
    return a;
}

std::vector<Rational> neg_translation(const AffineAut& h) {
    std::vector<Rational> t(4);
    for (int i = 0; i < 4; ++i) t[i] = -h.translation[i];
    return t;
}

}  // namespace

FixedPointSet fixed_set(const AffineAut& h) { return solve_torus_congruence(shifted(h), neg_translation(h)); }

FixedPointSet common_fixed_set(const std::vector<AffineAut>& hs) {
    IntMatrix a;
    std::vector<Rational> t;
    for (const AffineAut& h : hs) {
        IntMatrix b = shifted(h);
        auto u = neg_translation(h);
        a.insert(a.end(), b.begin(), b.end());
        t.insert(t.end(), u.begin(), u.end());
    }
    if (a.empty()) {
        a.assign(4, std::vector<Integer>(4, 0));
        t.assign(4, 0);
    }
    return solve_torus_congruence(a, t);
}

bool has_fixed_point(const AffineAut& h) { return !fixed_set(h).empty(); }

EigClass element_eig_class(const AffineAut& h) {
    if (h.linear.is_identity()) return EigClass::Translation;
    return has_eigenvalue_one(h.linear) ? EigClass::E1 : EigClass::E0;
}

std::string eig_class_name(EigClass c) {
    switch (c) {
        case EigClass::Translation: return "Translation";
        case EigClass::E1: return "E1";
        case EigClass::E0: return "E0";
    }
    return "?";
}

bool is_reflection(const AffineAut& h) { return element_eig_class(h) == EigClass::E1 && has_fixed_point(h); }

}  // namespace eesurf

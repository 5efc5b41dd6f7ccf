#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eesurf/quad_order.hpp"

namespace eesurf {

// 2x2 matrix over R. Entry (i,j) is stored as integer coordinates (a, b) of a + b theta.
class Mat2 {
public:
    using Coords = std::array<Integer, 8>;

    Mat2() = default;
    explicit Mat2(const RingSpec& ring);
    Mat2(const RingSpec& ring, const Coords& c);

    static Mat2 from_entries(const QuadElem& e11, const QuadElem& e12, const QuadElem& e21, const QuadElem& e22);
    static Mat2 from_ints(const RingSpec& ring, const std::array<long, 8>& c);
    static Mat2 identity(const RingSpec& ring);
    static Mat2 scalar(const QuadElem& x);
    static Mat2 diag(const QuadElem& x, const QuadElem& y);

    const RingSpec& ring() const { return ring_; }
    const Integer& a(int i, int j) const { return c_[4 * i + 2 * j]; }
    const Integer& b(int i, int j) const { return c_[4 * i + 2 * j + 1]; }
    const Coords& coords() const { return c_; }
    QuadElem entry(int i, int j) const;

    QuadElem det() const;
    QuadElem tr() const;
    bool is_identity() const;
    bool is_scalar() const;

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const;
    bool operator==(const Mat2& o) const { return ring_ == o.ring_ && c_ == o.c_; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    bool operator<(const Mat2& o) const { return c_ < o.c_; }

    std::string str() const;

private:
    RingSpec ring_;
    Coords c_;
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_inv(const Mat2& a);
Mat2 mat_pow(const Mat2& a, long e);

struct EigenClass {
    RootOfUnity lambda1;
    RootOfUnity lambda2;
    int order = 1;
};

// Trace written as x + y sqrt(-d).
std::pair<Rational, Rational> trace_sqrt_coords(const QuadElem& t);

std::optional<int> element_order(const Mat2& m);
std::optional<EigenClass> eigen_classify(const Mat2& m);
bool has_eigenvalue_one(const Mat2& m);
long euler_phi(long n);

struct LinearGroup {
    RingSpec ring;
    std::vector<Mat2> elements;  // sorted
    std::vector<Mat2> generators;
    std::vector<Mat2> sl_part;   // sorted
    int s = 1;
    RootOfUnity det_generator;

    std::size_t size() const { return elements.size(); }
    bool contains(const Mat2& m) const;
};

constexpr int kDefaultLinearCap = 256;

LinearGroup close_linear(const std::vector<Mat2>& generators, const RingSpec& ring, int cap = kDefaultLinearCap);

enum class Family { K, HC1, HC2, HC3, HC4, HC6, HQ8, HQ12, HSL23 };

struct CatalogLabel {
    Family family = Family::K;
    int index = 1;

    bool operator==(const CatalogLabel& o) const { return family == o.family && index == o.index; }
    bool operator<(const CatalogLabel& o) const {
        return family != o.family ? family < o.family : index < o.index;
    }
    std::string str() const;
};

std::string family_name(Family f);
int family_size(Family f);
CatalogLabel parse_label(const std::string& s);

CatalogLabel classify_sl(const LinearGroup& k);

struct GlClassification {
    CatalogLabel label;
    CatalogLabel sl_label;
    std::vector<CatalogLabel> matches;
    // Witness elements for the winning label, in catalog symbol order.
    std::vector<std::string> symbols;
    std::vector<Mat2> assignment;

    bool ambiguous() const { return matches.size() > 1; }
};

// Lowest index wins. With strict set, more than one match raises AmbiguousLabel.
GlClassification classify_gl(const LinearGroup& h, bool strict = false);

// Relation words such as "h g1 h^-1=-g1 g4^2"; "1" is the identity, a leading '-' negates.
struct Word {
    int sign = 1;
    std::vector<std::pair<int, long>> factors;
};

struct Relation {
    std::string text;
    Word lhs;
    Word rhs;
};

Relation parse_relation(const std::string& text, const std::vector<std::string>& symbols);
Mat2 eval_word(const Word& w, const std::vector<Mat2>& values, const RingSpec& ring);
bool relation_holds(const Relation& r, const std::vector<Mat2>& values, const RingSpec& ring);

}  // namespace eesurf

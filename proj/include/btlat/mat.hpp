#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "btlat/ring.hpp"

namespace btlat {

struct Vec2 {
    RElem x, y;
};

// 2x2 matrix over K, stored as an integral numerator over R_N together with a
// global pi-power denominator: the value is pi^(-denom) * [[a,b],[c,d]].
struct Mat2 {
    RElem a, b, c, d;
    unsigned denom = 0;

    static Mat2 identity(const Ring& R);
    static Mat2 zero(const Ring& R);
    static Mat2 from_ints(const Ring& R, int64_t a, int64_t b, int64_t c, int64_t d);
    static Mat2 diag(const RElem& a, const RElem& d);

    const Ring& ring() const { return a.ring(); }
    RElem trace_num() const { return a + d; }
    RElem det_num() const { return a * d - b * c; }
    Mat2 adj() const;  // adjugate of the numerator, same denom

    bool is_integral() const;  // after stripping common pi factors
    // trace/det of the actual K-value; requires them to be integral
    RElem trace() const;
    RElem det() const;

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 scaled(const RElem& s) const;
    Vec2 apply(const Vec2& v) const;
    bool equal_value(const Mat2& o) const;  // equality as K-matrices (up to representation)

    // strip common pi factors between the numerator and the denominator
    Mat2 normalized() const;
    std::string str() const;
};

// Monic characteristic polynomial t^2 - tr(g) t + det(g); g must be integral.
MonicQuad charpoly(const Mat2& g);

// Conjugate g by the basis matrix B (columns): B^{-1} g B.  B.denom is
// irrelevant; requires v(det B numerator) < N.
Mat2 conjugate_by_basis(const Mat2& B, const Mat2& g);

// A vertex of the Bruhat-Tits tree: the homothety class of a rank-2 lattice,
// held in canonical form
//
//     rep = [[pi^a, b], [0, pi^c]],   b a canonical residue mod pi^a,
//                                     min(a, c, v(b)) = 0.
//
// Two classes are equal iff their canonical forms are entry-equal.
class LatticeClass {
public:
    static LatticeClass standard(const Ring& R);  // class of O_K^2

    unsigned a() const { return a_; }
    unsigned c() const { return c_; }
    const RElem& b() const { return b_; }
    const Ring& ring() const { return b_.ring(); }

    Mat2 rep() const;
    std::vector<uint32_t> key() const;  // canonical sort/hash key
    bool operator==(const LatticeClass& o) const;
    bool operator!=(const LatticeClass& o) const { return !(*this == o); }
    bool operator<(const LatticeClass& o) const { return key() < o.key(); }
    std::string str() const;

    friend LatticeClass canonicalize(const Mat2& basis);

private:
    LatticeClass(unsigned a, unsigned c, RElem b) : a_(a), c_(c), b_(std::move(b)) {}
    unsigned a_ = 0, c_ = 0;
    RElem b_;
};

// Unique canonical representative of the homothety class spanned by the
// columns of `basis`.  SingularLattice if the determinant cannot be certified
// nonzero at precision N.
LatticeClass canonicalize(const Mat2& basis);

// Graph distance in the tree: |v(e1) - v(e2)| for the elementary divisors of
// rep(x)^{-1} rep(y).  PrecisionExhausted when that is not certifiable at N.
unsigned distance(const LatticeClass& x, const LatticeClass& y);

// The q+1 neighbours of x.
std::vector<LatticeClass> neighbors(const LatticeClass& x);

struct AdaptedBasis {
    Vec2 v1, v2;  // basis of Lambda_x in ambient coordinates
    unsigned d;   // (v1, pi^d v2) is a basis of Lambda_y
};

// Basis of Lambda_x adapted to y, via Smith normal form with transforms.
AdaptedBasis adapted_basis(const LatticeClass& x, const LatticeClass& y);

// Class stability: g Lambda_x is homothetic to Lambda_x.  Short-circuits to
// false when v(det g) is odd.
bool is_stable(const LatticeClass& x, const Mat2& g);

// Containment stability for arbitrary matrices: A Lambda_x <= Lambda_x.
bool stabilizes_lattice(const LatticeClass& x, const Mat2& A);

// g . x for g in GL2(K)
LatticeClass act(const Mat2& g, const LatticeClass& x);

// Vertices on the geodesic from x to y, inclusive.
std::vector<LatticeClass> geodesic(const LatticeClass& x, const LatticeClass& y);

} // namespace btlat

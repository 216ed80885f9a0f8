#include "btlat/mat.hpp"

#include <algorithm>
#include <sstream>

namespace btlat {

Mat2 Mat2::identity(const Ring& R) {
    return {RElem::one(R), RElem::zero(R), RElem::zero(R), RElem::one(R), 0};
}

Mat2 Mat2::zero(const Ring& R) {
    RElem z = RElem::zero(R);
    return {z, z, z, z, 0};
}

Mat2 Mat2::from_ints(const Ring& R, int64_t a, int64_t b, int64_t c, int64_t d) {
    return {RElem::from_int(R, a), RElem::from_int(R, b), RElem::from_int(R, c),
            RElem::from_int(R, d), 0};
}

Mat2 Mat2::diag(const RElem& a, const RElem& d) {
    RElem z = RElem::zero(a.ring());
    return {a, z, z, d, 0};
}

Mat2 Mat2::adj() const { return {d, -b, -c, a, denom}; }

static unsigned mat_min_valuation(const Mat2& m) {
    return std::min(std::min(m.a.valuation(), m.b.valuation()),
                    std::min(m.c.valuation(), m.d.valuation()));
}

Mat2 Mat2::normalized() const {
    unsigned k = std::min(static_cast<unsigned>(denom), mat_min_valuation(*this));
    if (k == 0) return *this;
    return {a.div_pi_pow_exact(k), b.div_pi_pow_exact(k), c.div_pi_pow_exact(k),
            d.div_pi_pow_exact(k), denom - k};
}

bool Mat2::is_integral() const { return normalized().denom == 0; }

RElem Mat2::trace() const {
    RElem t = trace_num();
    if (t.valuation() < denom) fail(errc::config, "non-integral trace");
    return t.div_pi_pow_exact(denom);
}

RElem Mat2::det() const {
    unsigned k = 2 * denom;
    if (k > ring()->precision())
        fail(errc::precision_exhausted, "determinant denominator exceeds precision");
    RElem t = det_num();
    if (t.valuation() < k) fail(errc::config, "non-integral determinant");
    return t.div_pi_pow_exact(k);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d,
           denom + o.denom};
    return r.normalized();
}

Mat2 Mat2::operator+(const Mat2& o) const {
    const Mat2 *lo = this, *hi = &o;
    if (lo->denom > hi->denom) std::swap(lo, hi);
    unsigned shift = hi->denom - lo->denom;
    Mat2 l{lo->a.mul_pi_pow(shift), lo->b.mul_pi_pow(shift), lo->c.mul_pi_pow(shift),
           lo->d.mul_pi_pow(shift), hi->denom};
    Mat2 r{l.a + hi->a, l.b + hi->b, l.c + hi->c, l.d + hi->d, hi->denom};
    return r.normalized();
}

Mat2 Mat2::operator-(const Mat2& o) const {
    RElem m1 = RElem::from_int(ring(), -1);
    return *this + o.scaled(m1);
}

Mat2 Mat2::scaled(const RElem& s) const { return {a * s, b * s, c * s, d * s, denom}; }

Vec2 Mat2::apply(const Vec2& v) const {
    if (denom != 0) fail(errc::config, "apply requires an integral matrix");
    return {a * v.x + b * v.y, c * v.x + d * v.y};
}

bool Mat2::equal_value(const Mat2& o) const {
    Mat2 l = normalized(), r = o.normalized();
    return l.denom == r.denom && l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << a.str() << "," << b.str() << "],[" << c.str() << "," << d.str() << "]]";
    if (denom) os << "/pi^" << denom;
    return os.str();
}

MonicQuad charpoly(const Mat2& g) {
    Mat2 n = g.normalized();
    if (n.denom != 0) fail(errc::config, "charpoly requires an integral matrix");
    return {-n.trace_num(), n.det_num()};
}

Mat2 conjugate_by_basis(const Mat2& B, const Mat2& g) {
    const Ring& R = B.ring();
    RElem db = B.det_num();
    unsigned w = db.valuation();
    if (w >= R->precision()) fail(errc::precision_exhausted, "basis determinant at precision");
    RElem unit = db.div_pi_pow_exact(w);
    Mat2 m = Mat2{B.d, -B.b, -B.c, B.a, 0} * g * Mat2{B.a, B.b, B.c, B.d, 0};
    m = m.scaled(unit.invert());
    m.denom += w;
    return m.normalized();
}

LatticeClass LatticeClass::standard(const Ring& R) { return {0, 0, RElem::zero(R)}; }

Mat2 LatticeClass::rep() const {
    const Ring& R = ring();
    return {RElem::one(R).mul_pi_pow(a_), b_, RElem::zero(R), RElem::one(R).mul_pi_pow(c_), 0};
}

std::vector<uint32_t> LatticeClass::key() const {
    std::vector<uint32_t> k{a_, c_};
    auto d = b_.digits();
    k.insert(k.end(), d.begin(), d.end());
    return k;
}

bool LatticeClass::operator==(const LatticeClass& o) const {
    return a_ == o.a_ && c_ == o.c_ && b_ == o.b_;
}

std::string LatticeClass::str() const {
    std::ostringstream os;
    os << "[pi^" << a_ << " " << b_.str() << " | 0 pi^" << c_ << "]";
    return os.str();
}

LatticeClass canonicalize(const Mat2& basis) {
    const Ring& R = basis.ring();
    unsigned N = R->precision();
    // homothety makes the denominator irrelevant
    RElem ca = basis.a, cb = basis.b, cc = basis.c, cd = basis.d;
    unsigned vdet = (ca * cd - cb * cc).valuation();
    if (vdet >= N)
        fail(errc::singular_lattice,
             "basis determinant vanishes to precision N; not certifiably a lattice");
    // columns (ca,cc), (cb,cd): clear the bottom of column 1
    if (cc.valuation() < cd.valuation()) {
        std::swap(ca, cb);
        std::swap(cc, cd);
    }
    if (cd.valuation() < N) {
        unsigned w = cd.valuation();
        RElem lam = cc.div_pi_pow_exact(w) * cd.div_pi_pow_exact(w).invert();
        ca = ca - lam * cb;
        cc = RElem::zero(R);
    }
    // now [[ca, cb],[0, cd]]
    unsigned va = ca.valuation(), vc = cd.valuation();
    if (va + vc != vdet) fail(errc::precision_exhausted, "triangularization lost the determinant");
    RElem b = cb * cd.div_pi_pow_exact(vc).invert();  // normalize column 2 to (b, pi^vc)
    b = b.reduce_mod(va);
    unsigned k = std::min(std::min(va, vc), b.valuation());
    return LatticeClass(va - k, vc - k, b.div_pi_pow_exact(k));
}

unsigned distance(const LatticeClass& x, const LatticeClass& y) {
    if (x == y) return 0;
    Mat2 B = x.rep().adj() * y.rep();
    unsigned vdet = B.det_num().valuation();
    if (vdet >= B.ring()->precision())
        fail(errc::precision_exhausted, "distance exceeds the certifiable range at precision N");
    return vdet - 2 * mat_min_valuation(B);
}

std::vector<LatticeClass> neighbors(const LatticeClass& x) {
    const Ring& R = x.ring();
    if (R->q() > 256) fail(errc::residue_field_too_large, "q exceeds the enumeration cap");
    Mat2 X = x.rep();
    RElem pi = RElem::pi(R), one = RElem::one(R), zero = RElem::zero(R);
    std::vector<LatticeClass> out;
    out.reserve(R->q() + 1);
    for (const RElem& i : residue_reps(R)) out.push_back(canonicalize(X * Mat2{one, zero, i, pi}));
    out.push_back(canonicalize(X * Mat2{zero, pi, one, zero}));
    return out;
}

AdaptedBasis adapted_basis(const LatticeClass& x, const LatticeClass& y) {
    const Ring& R = x.ring();
    unsigned N = R->precision();
    Mat2 B = x.rep().adj() * y.rep();
    unsigned vdet = B.det_num().valuation();
    if (vdet >= N) fail(errc::precision_exhausted, "adapted basis exceeds precision N");
    // Smith normal form with transforms: B = L * diag(pi^s1, pi^s2) * Rt
    Mat2 L = Mat2::identity(R);
    std::array<RElem*, 4> e{&B.a, &B.b, &B.c, &B.d};
    unsigned best = 0;
    for (unsigned i = 1; i < 4; ++i)
        if (e[i]->valuation() < e[best]->valuation()) best = i;
    if (best >= 2) {  // row swap
        std::swap(B.a, B.c);
        std::swap(B.b, B.d);
        std::swap(L.a, L.b);
        std::swap(L.c, L.d);  // L <- L * swap
        best -= 2;
    }
    if (best == 1) {  // column swap; right transform is dropped
        std::swap(B.a, B.b);
        std::swap(B.c, B.d);
    }
    unsigned s1 = B.a.valuation();
    RElem pivot_unit_inv = B.a.div_pi_pow_exact(s1).invert();
    {
        RElem mu = B.c.div_pi_pow_exact(s1) * pivot_unit_inv;  // clear (1,0): row1 -= mu*row0
        B.c = B.c - mu * B.a;
        B.d = B.d - mu * B.b;
        // L <- L * [[1,0],[mu,1]]
        L.a = L.a + L.b * mu;
        L.c = L.c + L.d * mu;
    }
    B.b = RElem::zero(R);  // clear (0,1) by a right transform, dropped
    unsigned s2 = B.d.valuation();
    if (s1 + s2 != vdet || s2 < s1)
        fail(errc::precision_exhausted, "smith form lost the determinant");
    Mat2 C = (x.rep() * L).normalized();
    AdaptedBasis out{{C.a, C.c}, {C.b, C.d}, s2 - s1};
    // self-check: (v1, pi^d v2) spans Lambda_y
    Mat2 Y{out.v1.x, out.v2.x.mul_pi_pow(out.d), out.v1.y, out.v2.y.mul_pi_pow(out.d), 0};
    if (!(canonicalize(Y) == y)) fail(errc::theorem_violation, "adapted basis failed validation");
    return out;
}

bool is_stable(const LatticeClass& x, const Mat2& g) {
    Mat2 B = x.rep().adj() * Mat2{g.a, g.b, g.c, g.d, 0};
    B = B * x.rep();
    unsigned vdet = B.det_num().valuation();
    if (vdet >= B.ring()->precision())
        fail(errc::precision_exhausted, "stability test exceeds precision N");
    if (vdet % 2 != 0) return false;  // homothety needs even det valuation
    return 2 * mat_min_valuation(B) == vdet;
}

bool stabilizes_lattice(const LatticeClass& x, const Mat2& A) {
    Mat2 An = A.normalized();
    unsigned need = x.a() + x.c() + An.denom;
    if (need > A.ring()->precision())
        fail(errc::precision_exhausted, "containment test exceeds precision N");
    Mat2 B = x.rep().adj() * Mat2{An.a, An.b, An.c, An.d, 0} * x.rep();
    return mat_min_valuation(B) >= need;
}

LatticeClass act(const Mat2& g, const LatticeClass& x) { return canonicalize(g * x.rep()); }

std::vector<LatticeClass> geodesic(const LatticeClass& x, const LatticeClass& y) {
    std::vector<LatticeClass> path{x};
    LatticeClass cur = x;
    unsigned d = distance(x, y);
    while (d > 0) {
        bool advanced = false;
        for (const LatticeClass& nb : neighbors(cur)) {
            if (distance(nb, y) == d - 1) {
                path.push_back(nb);
                cur = nb;
                --d;
                advanced = true;
                break;
            }
        }
        if (!advanced) fail(errc::precision_exhausted, "geodesic step failed");
    }
    return path;
}

} // namespace btlat

#include <doctest.h>

#include <map>
#include <set>

#include "btlat/mat.hpp"

using namespace btlat;

namespace {

RElem e(const Ring& R, int64_t v) { return RElem::from_int(R, v); }
Mat2 M(const Ring& R, int64_t a, int64_t b, int64_t c, int64_t d) {
    return Mat2::from_ints(R, a, b, c, d);
}

Mat2 random_gl2(const Ring& R, std::mt19937_64& rng) {
    for (;;) {
        Mat2 g{random_element(R, rng), random_element(R, rng), random_element(R, rng),
               random_element(R, rng), 0};
        if (g.det_num().valuation() == 0) return g;
    }
}

// ball of radius r around x via iterated neighbors, vertex -> BFS depth
std::map<LatticeClass, unsigned> bfs_ball(const LatticeClass& x, unsigned r) {
    std::map<LatticeClass, unsigned> depth{{x, 0}};
    std::vector<LatticeClass> frontier{x};
    for (unsigned k = 1; k <= r; ++k) {
        std::vector<LatticeClass> next;
        for (const auto& v : frontier)
            for (const auto& nb : neighbors(v))
                if (depth.emplace(nb, k).second) next.push_back(nb);
        frontier = std::move(next);
    }
    return depth;
}

} // namespace

TEST_CASE("canonical forms of homothety classes") {
    Ring R = RingSpec::unramified(3, 1, 8);
    LatticeClass l0 = LatticeClass::standard(R);
    CHECK(canonicalize(Mat2::identity(R)) == l0);
    CHECK(canonicalize(M(R, 2, 0, 0, 2)) == l0);  // unit column scalings

    LatticeClass d = canonicalize(M(R, 3, 0, 0, 27));
    CHECK(d.a() == 0);
    CHECK(d.c() == 2);
    CHECK(d.b().is_zero());

    LatticeClass h = canonicalize(M(R, 3, 1, 0, 1));
    CHECK(h.a() == 1);
    CHECK(h.c() == 0);
    CHECK(h.b() == e(R, 1));

    // column operations do not change the class
    CHECK(canonicalize(M(R, 3, 1 + 3 * 5, 0, 1)) == h);
    CHECK(canonicalize(M(R, 1, 3, 1, 0)) == h);  // swapped, mixed columns

    // the class of [[3,1],[0,3]] keeps a = c = 1 with unit b
    LatticeClass m = canonicalize(M(R, 3, 1, 0, 3));
    CHECK(m.a() == 1);
    CHECK(m.c() == 1);
    CHECK(m.b() == e(R, 1));

    CHECK_THROWS_AS((void)canonicalize(M(R, 1, 1, 1, 1)), error);
}

TEST_CASE("tree distance") {
    Ring R = RingSpec::unramified(3, 1, 8);
    LatticeClass l0 = LatticeClass::standard(R);
    CHECK(distance(l0, canonicalize(M(R, 1, 0, 0, 27))) == 3);
    CHECK(distance(l0, l0) == 0);
    CHECK(distance(canonicalize(M(R, 1, 0, 0, 3)), canonicalize(M(R, 3, 1, 0, 1))) == 2);
    CHECK(distance(l0, canonicalize(M(R, 3, 1, 0, 3))) == 2);
}

TEST_CASE("neighbors enumerate the q+1 index-p sublattice classes") {
    Ring R = RingSpec::unramified(3, 1, 8);
    LatticeClass l0 = LatticeClass::standard(R);
    auto nb = neighbors(l0);
    REQUIRE(nb.size() == 4);
    std::set<LatticeClass> got(nb.begin(), nb.end());
    std::set<LatticeClass> want{
        canonicalize(M(R, 1, 0, 0, 3)), canonicalize(M(R, 3, 0, 0, 1)),
        canonicalize(M(R, 3, 1, 0, 1)), canonicalize(M(R, 3, 2, 0, 1))};
    CHECK(got == want);
    for (const auto& y : nb) CHECK(distance(l0, y) == 1);

    Ring R5 = RingSpec::unramified(5, 1, 8);
    CHECK(neighbors(LatticeClass::standard(R5)).size() == 6);

    Ring R9 = RingSpec::unramified(3, 2, 6);
    auto nb9 = neighbors(LatticeClass::standard(R9));
    CHECK(nb9.size() == 10);
    std::set<LatticeClass> dedup(nb9.begin(), nb9.end());
    CHECK(dedup.size() == 10);
}

TEST_CASE("adapted bases") {
    Ring R = RingSpec::unramified(3, 1, 8);
    LatticeClass l0 = LatticeClass::standard(R);

    auto ab0 = adapted_basis(l0, l0);
    CHECK(ab0.d == 0);

    auto ab1 = adapted_basis(l0, canonicalize(M(R, 1, 0, 0, 9)));
    CHECK(ab1.d == 2);

    LatticeClass y = canonicalize(M(R, 9, 3, 0, 1));
    auto ab2 = adapted_basis(l0, y);
    CHECK(ab2.d == 2);
    // validated internally by re-canonicalization; re-check here
    Mat2 Y{ab2.v1.x, ab2.v2.x.mul_pi_pow(2), ab2.v1.y, ab2.v2.y.mul_pi_pow(2), 0};
    CHECK(canonicalize(Y) == y);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        LatticeClass a = canonicalize(random_gl2(R, rng) * M(R, 1, 0, 0, 3 * (1 + (i % 3))));
        LatticeClass b = canonicalize(random_gl2(R, rng));
        auto ab = adapted_basis(a, b);
        CHECK(ab.d == distance(a, b));
    }
}

TEST_CASE("characteristic polynomials") {
    Ring R = RingSpec::unramified(5, 1, 6);
    auto cp = charpoly(Mat2::identity(R));
    CHECK(cp.c1 == e(R, -2));
    CHECK(cp.c0 == e(R, 1));
    auto cu = charpoly(M(R, 1, 1, 0, 1));
    CHECK(cu.c1 == e(R, -2));
    CHECK(cu.c0 == e(R, 1));
    auto cd = charpoly(M(R, 6, 0, 0, 1));
    CHECK(cd.c1 == e(R, -7));
    CHECK(cd.c0 == e(R, 6));
}

TEST_CASE("distance is a metric and the tree is as BFS sees it") {
    Ring R = RingSpec::unramified(3, 1, 10);
    LatticeClass l0 = LatticeClass::standard(R);
    auto ball = bfs_ball(l0, 3);
    std::vector<LatticeClass> verts;
    for (auto& [v, dep] : ball) {
        CHECK(distance(l0, v) == dep);  // Smith-form distance agrees with BFS depth
        verts.push_back(v);
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto& x = verts[rng() % verts.size()];
        const auto& y = verts[rng() % verts.size()];
        const auto& z = verts[rng() % verts.size()];
        unsigned dxy = distance(x, y);
        CHECK(dxy == distance(y, x));
        CHECK((dxy == 0) == (x == y));
        CHECK(dxy <= distance(x, z) + distance(z, y));
    }
}

TEST_CASE("unit-determinant action is an isometry") {
    Ring R = RingSpec::unramified(3, 1, 10);
    std::mt19937_64 rng(17);
    auto ball = bfs_ball(LatticeClass::standard(R), 2);
    std::vector<LatticeClass> verts;
    for (auto& [v, dep] : ball) verts.push_back(v);
    for (int i = 0; i < 50; ++i) {
        Mat2 g = random_gl2(R, rng);
        const auto& x = verts[rng() % verts.size()];
        const auto& y = verts[rng() % verts.size()];
        CHECK(distance(act(g, x), act(g, y)) == distance(x, y));
    }
}

TEST_CASE("polarisation identity holds exactly") {
    std::mt19937_64 rng(31);
    for (const Ring& R : {RingSpec::unramified(3, 1, 8), RingSpec::unramified(3, 2, 5),
                          RingSpec::laurent(5, 6)}) {
        for (int i = 0; i < 100; ++i) {
            Mat2 A{random_element(R, rng), random_element(R, rng), random_element(R, rng),
                   random_element(R, rng), 0};
            Mat2 B{random_element(R, rng), random_element(R, rng), random_element(R, rng),
                   random_element(R, rng), 0};
            RElem lhs = (A + B).det_num() - A.det_num() - B.det_num();
            RElem rhs = A.trace_num() * B.trace_num() - (A * B).trace_num();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("geodesics run through the tree") {
    Ring R = RingSpec::unramified(3, 1, 10);
    LatticeClass l0 = LatticeClass::standard(R);
    LatticeClass y = canonicalize(M(R, 1, 0, 0, 27));
    auto path = geodesic(l0, y);
    REQUIRE(path.size() == 4);
    CHECK(path.front() == l0);
    CHECK(path.back() == y);
    for (size_t i = 0; i < path.size(); ++i) CHECK(distance(l0, path[i]) == i);
}

#include <doctest.h>

#include "btlat/characters.hpp"

using namespace btlat;

namespace {

Mat2 M(const Ring& R, int64_t a, int64_t b, int64_t c, int64_t d) {
    return Mat2::from_ints(R, a, b, c, d);
}
RElem e(const Ring& R, int64_t v) { return RElem::from_int(R, v); }

struct Family {
    GroupInput G;
    CharacterMod chi1, chi2;
};

Family family42(unsigned n_mod) {
    Ring R = RingSpec::unramified(5, 1, 14);
    GroupInput G = GroupInput::make(
        R, {M(R, 1, 1, 0, 1), M(R, 1, 0, 625, 1), M(R, 6, 0, 0, 1), M(R, 1, 0, 0, 6)}, "c42");
    CharacterMod chi1 = CharacterMod::make(n_mod, {e(R, 1), e(R, 1), e(R, 6), e(R, 1)}, true);
    CharacterMod chi2 = CharacterMod::make(n_mod, {e(R, 1), e(R, 1), e(R, 1), e(R, 6)}, true);
    return {std::move(G), std::move(chi1), std::move(chi2)};
}

} // namespace

TEST_CASE("diagonal characters of the congruence family are a conjugate pair") {
    Family F = family42(4);
    auto cert = is_conjugate_pair(F.G, F.chi1, F.chi2);
    CHECK(cert.pass);
    CharacterPair pair = make_conjugate_pair(F.G, F.chi1, F.chi2);
    CHECK(pair.m == 1);
    CHECK(pair.s == 3);
}

TEST_CASE("trivial pair on the trivial group") {
    Ring R = RingSpec::unramified(3, 1, 8);
    GroupInput G = GroupInput::make(R, {Mat2::identity(R)}, "trivial");
    CharacterMod one = CharacterMod::make(2, {e(R, 1)});
    CHECK(is_conjugate_pair(G, one, one).pass);
}

TEST_CASE("a perturbed character fails with a length-1 witness") {
    Family F = family42(4);
    Ring R = F.G.ring;
    CharacterMod bad = CharacterMod::make(4, {e(R, 2), e(R, 1), e(R, 6), e(R, 1)});
    auto cert = is_conjugate_pair(F.G, bad, F.chi2);
    CHECK(!cert.pass);
    REQUIRE(cert.violation.has_value());
    CHECK(cert.violation->size() == 1);
}

TEST_CASE("the s formula") {
    CHECK(s_from_m(1, 4) == 3);
    CHECK(s_from_m(2, 4) == 2);  // m >= n/2 branch
    CHECK(s_from_m(5, 5) == 3);  // equal characters, ceil(5/2)
    CHECK(s_from_m(0, 3) == 3);
    CHECK(s_from_m(2, 5) == 3);
}

TEST_CASE("m is symmetric under swapping the pair") {
    Family F = family42(4);
    CharacterPair a = make_conjugate_pair(F.G, F.chi1, F.chi2);
    CharacterPair b = make_conjugate_pair(F.G, F.chi2, F.chi1);
    CHECK(a.m == b.m);
    CHECK(a.s == b.s);
}

TEST_CASE("reordering matches swapped pairs and equal pairs both ways") {
    Family F = family42(4);
    CharacterPair a = make_conjugate_pair(F.G, F.chi1, F.chi2);
    CharacterPair swapped = make_conjugate_pair(F.G, F.chi2, F.chi1);
    CHECK(reorder_match(a, swapped) == Ordering::swapped);
    CHECK(reorder_match(a, a) == Ordering::identity);

    // equal characters: both orderings match mod pi^ceil(n/2)
    Ring R = F.G.ring;
    CharacterMod t1 = CharacterMod::make(4, {e(R, 1), e(R, 1), e(R, 6), e(R, 1)});
    Family F2 = family42(4);
    CharacterPair eq = make_conjugate_pair(F2.G, t1, t1, 6, 50);
    CHECK(eq.m == 4);
    CHECK(eq.s == 2);
    CHECK(reorder_match(eq, eq) == Ordering::both);
}

TEST_CASE("linear extendability residuals on a unipotent relation") {
    Ring R = RingSpec::unramified(3, 1, 9);
    GroupInput G = GroupInput::make(R, {M(R, 1, 1, 0, 1)}, "u");
    Relation rel;
    rel.words = {Word{0, 0}, Word{0}, Word{}};
    rel.coeffs = {e(R, 1), e(R, -2), e(R, 1)};  // rho(u^2) - 2 rho(u) + 1 = 0

    CharacterMod triv = CharacterMod::make(4, {e(R, 1)});
    CHECK(linear_extendability_residual(G, triv, rel) == 9);  // exactly zero in R_N

    CharacterMod chi = CharacterMod::make(4, {e(R, 4)});  // chi(u) = 1 + 3
    // (chi(u) - 1)^2 = 9: extendable mod pi^2 but not mod pi^3
    CHECK(linear_extendability_residual(G, chi, rel) == 2);

    Relation broken;
    broken.words = {Word{0}, Word{}};
    broken.coeffs = {e(R, 1), e(R, 1)};
    CHECK_THROWS_AS((void)linear_extendability_residual(G, triv, broken), error);
}

TEST_CASE("linear relation search") {
    Ring R = RingSpec::unramified(3, 1, 9);
    GroupInput G = GroupInput::make(R, {M(R, 1, 1, 0, 1)}, "u");
    auto rels = find_linear_relations(G, 2);  // words 1, u, u^2
    REQUIRE(rels.size() == 1);
    const Relation& rel = rels[0];
    REQUIRE(rel.coeffs.size() == 3);
    // the unipotent relation, normalized with coefficient 1 at u^2
    CharacterMod triv = CharacterMod::make(4, {e(R, 1)});
    CHECK(linear_extendability_residual(G, triv, rel) == 9);

    // more than four words always admit relations
    GroupInput G2 = GroupInput::make(
        R, {M(R, 1, 1, 0, 1), M(R, 1, 0, 1, 1), M(R, 2, 0, 0, 1)}, "generic");
    auto rels2 = find_linear_relations(G2, 2);
    CHECK(!rels2.empty());
    CharacterMod any = CharacterMod::make(2, {e(R, 1), e(R, 1), e(R, 2)});
    for (const auto& r : rels2) {
        Mat2 sum = Mat2::zero(R);
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            sum = sum + eval_word(G2, r.words[i]).scaled(r.coeffs[i]);
        CHECK(sum.a.is_zero());
        CHECK(sum.b.is_zero());
        CHECK(sum.c.is_zero());
        CHECK(sum.d.is_zero());
    }
}

TEST_CASE("word evaluation agrees between characters and matrices") {
    Family F = family42(4);
    for (const Word& w : word_sample(F.G.gens.size(), 4, 30, 123)) {
        Mat2 m = eval_word(F.G, w);
        RElem c1 = F.chi1.eval(w), c2 = F.chi2.eval(w);
        CHECK((m.trace() - c1 - c2).valuation() >= 4);
        CHECK((m.det() - c1 * c2).valuation() >= 4);
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "btlat/tree.hpp"

namespace btlat {

inline constexpr uint64_t kDefaultSeed = 0xB71A7;
inline constexpr unsigned kPrecisionGuard = 2;

// A word in the generators, as a list of generator indices; empty = identity.
using Word = std::vector<uint32_t>;

std::string word_str(const Word& w);
Mat2 eval_word(const GroupInput& G, const Word& w);

// Deterministic word sample: every generator, every ordered length-2 product,
// then W seeded random words of length <= L.
std::vector<Word> word_sample(size_t num_gens, unsigned L, unsigned W, uint64_t seed);

// A character mod pi^n given by one unit value per generator.  Characters
// harvested from stable lattices are well-defined by construction; free
// assignments only carry the probabilistic certificate.
struct CharacterMod {
    unsigned n = 0;
    std::vector<RElem> values;  // canonical residues mod pi^n
    bool lattice_harvested = false;

    static CharacterMod make(unsigned n, std::vector<RElem> values, bool harvested = false);
    CharacterMod reduce(unsigned t) const;
    RElem eval(const Word& w) const;  // product of values, reduced mod pi^n
};

struct PairCertificate {
    unsigned L = 0, W = 0;
    uint64_t seed = 0;
    bool pass = false;
    std::optional<Word> violation;
};

// trace(rho(w)) == chi1(w) + chi2(w) and det(rho(w)) == chi1(w) chi2(w)
// mod pi^n, over generators, length-2 products and W sampled words.
PairCertificate is_conjugate_pair(const GroupInput& G, const CharacterMod& chi1,
                                  const CharacterMod& chi2, unsigned L = 6, unsigned W = 200,
                                  uint64_t seed = kDefaultSeed);

struct CharacterPair {
    CharacterMod chi1, chi2;
    unsigned n = 0;
    unsigned m = 0;  // min over the sample of v(chi1 - chi2), capped at n
    unsigned s = 0;  // n - m if 2m < n, else ceil(n/2)
    PairCertificate cert;
};

unsigned s_from_m(unsigned m, unsigned n);

// Builds the pair and computes m over the same word sample as the certificate.
CharacterPair make_conjugate_pair(const GroupInput& G, CharacterMod chi1, CharacterMod chi2,
                                  unsigned L = 6, unsigned W = 200, uint64_t seed = kDefaultSeed);

enum class Ordering { identity, swapped, both };

// The ordering under which the components of pairB agree with pairA mod pi^s
// on every generator (s from pairA).  TheoremViolationWitness if none does.
Ordering reorder_match(const CharacterPair& A, const CharacterPair& B);

struct Relation {
    std::vector<RElem> coeffs;
    std::vector<Word> words;
};

// v_pi of sum a_i * chi(w_i) for a relation with sum a_i rho(w_i) = 0 in
// M_2(R_N); chi mod pi^t extends linearly along this relation iff the
// residual is >= t (for t <= n).
unsigned linear_extendability_residual(const GroupInput& G, const CharacterMod& chi,
                                       const Relation& rel);

// Kernel of the 4 x k matrix of vectorized rho(w) over all words of length
// <= L, by valuation-pivoted elimination; every returned relation is verified
// to vanish exactly in M_2(R_N) and has coefficient 1 at its free word.
std::vector<Relation> find_linear_relations(const GroupInput& G, unsigned L,
                                            size_t word_budget = 4096);

} // namespace btlat

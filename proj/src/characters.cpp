#include "btlat/characters.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace btlat {

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << "g" << w[i];
    return os.str();
}

Mat2 eval_word(const GroupInput& G, const Word& w) {
    Mat2 m = Mat2::identity(G.ring);
    for (uint32_t i : w) {
        if (i >= G.gens.size()) fail(errc::config, "word refers to a missing generator");
        m = m * G.gens[i];
    }
    return m;
}

std::vector<Word> word_sample(size_t num_gens, unsigned L, unsigned W, uint64_t seed) {
    std::vector<Word> words;
    for (uint32_t i = 0; i < num_gens; ++i) words.push_back({i});
    for (uint32_t i = 0; i < num_gens; ++i)
        for (uint32_t j = 0; j < num_gens; ++j) words.push_back({i, j});
    std::mt19937_64 rng(seed);
    for (unsigned k = 0; k < W; ++k) {
        Word w(1 + rng() % std::max(1u, L));
        for (auto& letter : w) letter = static_cast<uint32_t>(rng() % num_gens);
        words.push_back(std::move(w));
    }
    return words;
}

CharacterMod CharacterMod::make(unsigned n, std::vector<RElem> values, bool harvested) {
    if (values.empty()) fail(errc::config, "character needs at least one generator value");
    const Ring& R = values.front().ring();
    if (n < 1 || n + kPrecisionGuard > R->precision())
        fail(errc::config, "character modulus must satisfy 1 <= n <= N - guard");
    CharacterMod chi;
    chi.n = n;
    chi.lattice_harvested = harvested;
    for (auto& v : values) {
        if (v.reduce_mod(n).valuation() != 0)
            fail(errc::config, "character values must be units mod pi^n");
        chi.values.push_back(v.reduce_mod(n));
    }
    return chi;
}

CharacterMod CharacterMod::reduce(unsigned t) const {
    if (t > n) fail(errc::config, "cannot increase a character modulus");
    CharacterMod out = *this;
    out.n = t;
    for (auto& v : out.values) v = v.reduce_mod(t);
    return out;
}

RElem CharacterMod::eval(const Word& w) const {
    RElem r = RElem::one(values.front().ring());
    for (uint32_t i : w) {
        if (i >= values.size()) fail(errc::config, "word refers to a missing generator");
        r = r * values[i];
    }
    return r.reduce_mod(n);
}

PairCertificate is_conjugate_pair(const GroupInput& G, const CharacterMod& chi1,
                                  const CharacterMod& chi2, unsigned L, unsigned W,
                                  uint64_t seed) {
    if (chi1.n != chi2.n) fail(errc::config, "character moduli differ");
    if (chi1.values.size() != G.gens.size() || chi2.values.size() != G.gens.size())
        fail(errc::config, "character value count does not match the generator count");
    unsigned n = chi1.n;
    PairCertificate cert{L, W, seed, true, std::nullopt};
    for (const Word& w : word_sample(G.gens.size(), L, W, seed)) {
        Mat2 m = eval_word(G, w);
        RElem c1 = chi1.eval(w), c2 = chi2.eval(w);
        bool ok = (m.trace() - c1 - c2).valuation() >= n && (m.det() - c1 * c2).valuation() >= n;
        if (!ok) {
            cert.pass = false;
            cert.violation = w;
            break;
        }
    }
    return cert;
}

unsigned s_from_m(unsigned m, unsigned n) { return 2 * m < n ? n - m : (n + 1) / 2; }

CharacterPair make_conjugate_pair(const GroupInput& G, CharacterMod chi1, CharacterMod chi2,
                                  unsigned L, unsigned W, uint64_t seed) {
    CharacterPair pair;
    pair.cert = is_conjugate_pair(G, chi1, chi2, L, W, seed);
    pair.n = chi1.n;
    unsigned m = pair.n;
    for (const Word& w : word_sample(G.gens.size(), L, W, seed))
        m = std::min(m, (chi1.eval(w) - chi2.eval(w)).valuation());
    pair.m = std::min(m, pair.n);
    pair.s = s_from_m(pair.m, pair.n);
    pair.chi1 = std::move(chi1);
    pair.chi2 = std::move(chi2);
    return pair;
}

Ordering reorder_match(const CharacterPair& A, const CharacterPair& B) {
    if (A.n != B.n) fail(errc::config, "pairs live at different moduli");
    if (A.chi1.values.size() != B.chi1.values.size())
        fail(errc::config, "pairs belong to different generator lists");
    unsigned s = A.s;
    auto matches = [&](const CharacterMod& x, const CharacterMod& y) {
        for (size_t i = 0; i < x.values.size(); ++i)
            if ((x.values[i] - y.values[i]).valuation() < s) return false;
        return true;
    };
    bool id = matches(A.chi1, B.chi1) && matches(A.chi2, B.chi2);
    bool sw = matches(A.chi1, B.chi2) && matches(A.chi2, B.chi1);
    if (id && sw) return Ordering::both;
    if (id) return Ordering::identity;
    if (sw) return Ordering::swapped;
    fail(errc::theorem_violation,
         "no reordering matches mod pi^" + std::to_string(s) + "; this would falsify the "
         "reordering lemma");
}

unsigned linear_extendability_residual(const GroupInput& G, const CharacterMod& chi,
                                       const Relation& rel) {
    if (rel.coeffs.size() != rel.words.size() || rel.coeffs.empty())
        fail(errc::config, "malformed relation");
    Mat2 sum = Mat2::zero(G.ring);
    for (size_t i = 0; i < rel.coeffs.size(); ++i)
        sum = sum + eval_word(G, rel.words[i]).scaled(rel.coeffs[i]);
    if (!(sum.a.is_zero() && sum.b.is_zero() && sum.c.is_zero() && sum.d.is_zero()))
        fail(errc::invalid_relation, "relation does not annihilate rho");
    RElem acc = RElem::zero(G.ring);
    for (size_t i = 0; i < rel.coeffs.size(); ++i) acc = acc + rel.coeffs[i] * chi.eval(rel.words[i]);
    return acc.valuation();
}

std::vector<Relation> find_linear_relations(const GroupInput& G, unsigned L, size_t word_budget) {
    const Ring& R = G.ring;
    unsigned N = R->precision();
    std::vector<Word> words{{}};
    std::vector<Word> layer{{}};
    for (unsigned len = 1; len <= L; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (uint32_t g = 0; g < G.gens.size(); ++g) {
                Word e = w;
                e.push_back(g);
                next.push_back(std::move(e));
            }
        words.insert(words.end(), next.begin(), next.end());
        layer = std::move(next);
        if (words.size() > word_budget) fail(errc::resource_limit, "word budget exceeded");
    }
    size_t m = words.size();
    std::vector<std::array<RElem, 4>> col(m);
    for (size_t j = 0; j < m; ++j) {
        Mat2 g = eval_word(G, words[j]).normalized();
        if (g.denom != 0)
            fail(errc::config, "relation search requires integral generator products");
        col[j] = {g.a, g.b, g.c, g.d};
    }
    // valuation-pivoted elimination; rows are the 4 matrix coordinates
    std::vector<bool> row_used(4, false), col_pivot(m, false);
    struct Pivot {
        unsigned row;
        size_t colj;
        unsigned val;
    };
    std::vector<Pivot> pivots;
    for (;;) {
        unsigned bestv = N;
        unsigned bi = 0;
        size_t bj = 0;
        bool has = false;
        for (unsigned i = 0; i < 4; ++i) {
            if (row_used[i]) continue;
            for (size_t j = 0; j < m; ++j) {
                if (col_pivot[j]) continue;
                unsigned v = col[j][i].valuation();
                if (v < bestv) {
                    bestv = v;
                    bi = i;
                    bj = j;
                    has = true;
                }
            }
        }
        if (!has || bestv == N) break;
        RElem inv_unit = col[bj][bi].div_pi_pow_exact(bestv).invert();
        for (unsigned i = 0; i < 4; ++i) {
            if (row_used[i] || i == bi) continue;
            if (col[bj][i].valuation() < bestv)
                fail(errc::precision_exhausted, "pivoting invariant violated");
            RElem lam = col[bj][i].div_pi_pow_exact(bestv) * inv_unit;
            for (size_t j = 0; j < m; ++j)
                if (!col_pivot[j]) col[j][i] = col[j][i] - lam * col[j][bi];
        }
        row_used[bi] = true;
        col_pivot[bj] = true;
        pivots.push_back({bi, bj, bestv});
    }
    std::vector<Relation> out;
    for (size_t c = 0; c < m; ++c) {
        if (col_pivot[c]) continue;
        std::vector<RElem> x(m, RElem::zero(R));
        x[c] = RElem::one(R);
        bool ok = true;
        for (size_t t = pivots.size(); t-- > 0;) {
            const Pivot& p = pivots[t];
            RElem acc = col[c][p.row];
            for (size_t s = t + 1; s < pivots.size(); ++s)
                acc = acc + col[pivots[s].colj][p.row] * x[pivots[s].colj];
            if (acc.valuation() < p.val) {
                ok = false;
                break;
            }
            x[p.colj] = -(acc.div_pi_pow_exact(p.val) *
                          col[p.colj][p.row].div_pi_pow_exact(p.val).invert());
        }
        if (!ok) continue;
        Relation rel;
        for (size_t j = 0; j < m; ++j) {
            if (x[j].is_zero()) continue;
            rel.coeffs.push_back(x[j]);
            rel.words.push_back(words[j]);
        }
        // verify exactly against the original matrices
        Mat2 sum = Mat2::zero(R);
        for (size_t i = 0; i < rel.coeffs.size(); ++i)
            sum = sum + eval_word(G, rel.words[i]).scaled(rel.coeffs[i]);
        if (sum.a.is_zero() && sum.b.is_zero() && sum.c.is_zero() && sum.d.is_zero())
            out.push_back(std::move(rel));
    }
    return out;
}

} // namespace btlat

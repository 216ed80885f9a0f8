#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "btlat/errors.hpp"

namespace btlat {

enum class ring_kind { unramified, laurent };

// A truncated complete DVR R_N = O_K / pi^N.
//
// unramified: O_K is the unramified extension of Z_p of residue degree f,
//             realized as (Z/p^N)[u]/(h(u)) with h a monic degree-f lift of an
//             irreducible polynomial over F_p.  pi = p.
// laurent:    O_K = F_p[[t]], R_N = F_p[t]/(t^N).  pi = t, f = 1.
//
// p is an odd prime throughout.
class RingSpec {
public:
    static std::shared_ptr<const RingSpec> unramified(uint64_t p, unsigned f, unsigned N);
    static std::shared_ptr<const RingSpec> unramified(uint64_t p, unsigned f, unsigned N,
                                                      std::vector<uint64_t> poly);
    static std::shared_ptr<const RingSpec> laurent(uint64_t p, unsigned N);

    ring_kind kind() const { return kind_; }
    uint64_t p() const { return p_; }
    unsigned f() const { return f_; }
    unsigned precision() const { return N_; }
    uint64_t q() const { return q_; }                       // residue field size p^f
    uint64_t p_pow(unsigned k) const { return ppow_[k]; }   // p^k, k <= N
    const std::vector<uint64_t>& poly() const { return poly_; }

    bool same_as(const RingSpec& other) const;
    std::string describe() const;

private:
    RingSpec() = default;
    ring_kind kind_ = ring_kind::unramified;
    uint64_t p_ = 3;
    unsigned f_ = 1;
    unsigned N_ = 1;
    uint64_t q_ = 3;
    std::vector<uint64_t> poly_;       // monic, length f+1, coefficients in [0, p); empty if f = 1
    std::vector<uint64_t> ppow_;       // p^0..p^N
};

using Ring = std::shared_ptr<const RingSpec>;

// An element of R_N in canonical form.  Equality is coefficient equality.
//
// unramified: f coefficients in [0, p^N), the u-adic expansion.
// laurent:    N coefficients in [0, p), the t-adic expansion.
class RElem {
public:
    RElem() = default;
    static RElem zero(const Ring& R);
    static RElem one(const Ring& R);
    static RElem from_int(const Ring& R, int64_t value);
    static RElem u_gen(const Ring& R);  // the generator u (unramified, f >= 2)
    static RElem pi(const Ring& R);

    // little-endian base-p digits, length N*f; digit index i*f + j is the
    // u^j-coordinate of the i-th pi-digit
    static RElem from_digits(const Ring& R, const std::vector<uint32_t>& digits);
    std::vector<uint32_t> digits() const;

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_unit() const { return valuation() == 0; }

    // truncated valuation in {0..N}; N iff zero in R_N
    unsigned valuation() const;

    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator*(const RElem& o) const;
    RElem operator-() const;
    bool operator==(const RElem& o) const;
    bool operator!=(const RElem& o) const { return !(*this == o); }

    RElem invert() const;                    // NotAUnit if v > 0
    RElem mul_pi_pow(unsigned k) const;      // x * pi^k (truncating)
    RElem div_pi_pow_exact(unsigned k) const;// requires v(x) >= k; canonical lift of x/pi^k
    RElem reduce_mod(unsigned n) const;      // canonical residue mod pi^n
    RElem halve() const;                     // x / 2 (2 is a unit, p odd)

    // Hensel square root of a unit; nullopt if the residue is a non-square
    std::optional<RElem> sqrt_unit() const;

    std::string str() const;

private:
    Ring ring_;
    std::vector<uint64_t> c_;
};

// All q residue-field representatives (coordinatewise lifts of F_q), in a
// fixed deterministic order starting with 0.
std::vector<RElem> residue_reps(const Ring& R);

RElem random_element(const Ring& R, std::mt19937_64& rng);
RElem random_unit(const Ring& R, std::mt19937_64& rng);

// Monic quadratic t^2 + c1*t + c0 over R_N.
struct MonicQuad {
    RElem c1, c0;
    RElem trace() const { return -c1; }
    RElem det() const { return c0; }
    RElem eval(const RElem& t) const { return t * t + c1 * t + c0; }
    RElem disc() const;  // c1^2 - 4 c0
};

struct QuadFactorization {
    RElem alpha, beta;
    unsigned gap = 0;    // v(alpha - beta)
    bool exact = false;  // product reconstructs P to full precision N
};

// Quadratic Hensel lifting: given P == (t-alpha0)(t-beta0) mod pi^n with
// v(alpha0-beta0) < n/2, refine the roots by Newton iteration until
// (t-alpha')(t-beta') == P holds in R_N.  The gap v(alpha-beta) is preserved.
QuadFactorization hensel_quadratic(const MonicQuad& P, const RElem& alpha0, const RElem& beta0,
                                   unsigned n);

// One exact factorization of P mod pi^n, if any: P == (t-alpha)(t-beta) with
// the product equality holding in R_N whenever v(disc) < n, and mod pi^n in
// the near-double-root case v(disc) >= n.  nullopt iff P is irreducible mod pi^n.
std::optional<QuadFactorization> factor_quadratic_mod(const MonicQuad& P, unsigned n);

// All roots alpha in R_n of P mod pi^n (canonical residues).  Count can reach
// q^(n/2); budget-guarded by the caller.
std::vector<RElem> quadratic_roots_mod(const MonicQuad& P, unsigned n);

} // namespace btlat

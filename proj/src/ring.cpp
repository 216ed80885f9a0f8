#include "btlat/ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace btlat {

const char* errc_name(errc c) {
    switch (c) {
        case errc::none: return "Ok";
        case errc::config: return "ConfigError";
        case errc::not_a_unit: return "NotAUnit";
        case errc::hensel_hypothesis_violated: return "HenselHypothesisViolated";
        case errc::singular_lattice: return "SingularLattice";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::residue_field_too_large: return "ResidueFieldTooLarge";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_a_boundary_point: return "NotABoundaryPoint";
        case errc::bad_factorization: return "BadFactorization";
        case errc::not_reducible: return "NotReducible";
        case errc::search_budget_exceeded: return "SearchBudgetExceeded";
        case errc::theorem_violation: return "TheoremViolationWitness";
        case errc::modulus_exceeds_diameter: return "ModulusExceedsDiameter";
        case errc::invalid_relation: return "InvalidRelation";
        case errc::construction_failed: return "ConstructionFailed";
        case errc::oracle_budget: return "OracleBudget";
        case errc::resource_limit: return "ResourceLimit";
    }
    return "UnknownError";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Fixed lifts of irreducible polynomials over F_p, so that runs are
// reproducible across sessions.  f = 2 uses u^2 - n for the smallest
// quadratic non-residue n; f = 3 entries were checked to have no root mod p.
std::vector<uint64_t> published_poly(uint64_t p, unsigned f) {
    if (f == 2) {
        uint64_t n = 2;
        while (powmod(n, (p - 1) / 2, p) == 1) ++n;
        return {p - n, 0, 1};
    }
    if (f == 3) {
        if (p == 3) return {2, 2, 0, 1};  // u^3 - u - 1
        if (p == 5) return {1, 1, 0, 1};  // u^3 + u + 1
        if (p == 7) return {5, 0, 0, 1};  // u^3 - 2
        fail(errc::config, "no published degree-3 polynomial for p=" + std::to_string(p));
    }
    fail(errc::config, "unsupported residue degree f=" + std::to_string(f));
}

bool has_root_mod_p(const std::vector<uint64_t>& poly, uint64_t p) {
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = poly.size(); i-- > 0;) v = (mulmod(v, x, p) + poly[i] % p) % p;
        if (v == 0) return true;
    }
    return false;
}

// Polynomials over F_p, dense little-endian coefficients; used only for the
// degree <= 3 residue-field inversions.
using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    fp_trim(r);
    return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    fp_trim(a);
    return a;
}

// a = q*b + r with deg r < deg b
void fp_divmod(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& q, FpPoly& r) {
    q.clear();
    r = a;
    fp_trim(r);
    if (b.empty()) fail(errc::config, "division by zero polynomial");
    uint64_t inv_lead = powmod(b.back(), p - 2, p);
    while (r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        uint64_t c = mulmod(r.back(), inv_lead, p);
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = (q[shift] + c) % p;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = submod(r[shift + i], mulmod(c, b[i], p), p);
        fp_trim(r);
        if (r.empty()) break;
    }
}

// Inverse of a modulo m in F_p[u], via extended Euclid.  gcd(a, m) must be 1.
FpPoly fp_inv_mod(const FpPoly& a, const FpPoly& m, uint64_t p) {
    FpPoly r0 = m, r1 = a, s0 = {}, s1 = {1};
    fp_trim(r1);
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divmod(r0, r1, p, q, r);
        FpPoly s = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) fail(errc::config, "residue inversion: gcd not a unit");
    uint64_t c = powmod(r0[0], p - 2, p);
    for (auto& x : s0) x = mulmod(x, c, p);
    FpPoly q, rem;
    fp_divmod(s0, m, p, q, rem);
    return rem;
}

unsigned vp(uint64_t x, uint64_t p, unsigned N) {
    if (x == 0) return N;
    unsigned v = 0;
    while (v < N && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

} // namespace

std::shared_ptr<const RingSpec> RingSpec::unramified(uint64_t p, unsigned f, unsigned N) {
    if (f >= 2) return unramified(p, f, N, published_poly(p, f));
    return unramified(p, f, N, {});
}

std::shared_ptr<const RingSpec> RingSpec::unramified(uint64_t p, unsigned f, unsigned N,
                                                     std::vector<uint64_t> poly) {
    if (p == 2) fail(errc::config, "residue characteristic 2 is not supported");
    if (p > 10000 || !is_prime(p)) fail(errc::config, "p must be an odd prime <= 10000");
    if (N < 1) fail(errc::config, "precision must be >= 1");
    if (f < 1 || f > 3) fail(errc::config, "residue degree f must be 1, 2 or 3");
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->kind_ = ring_kind::unramified;
    spec->p_ = p;
    spec->f_ = f;
    spec->N_ = N;
    spec->ppow_.resize(N + 1);
    spec->ppow_[0] = 1;
    for (unsigned i = 1; i <= N; ++i) {
        if (spec->ppow_[i - 1] > (uint64_t(1) << 62) / p)
            fail(errc::config, "p^N does not fit the fixed-width representation");
        spec->ppow_[i] = spec->ppow_[i - 1] * p;
    }
    spec->q_ = 1;
    for (unsigned i = 0; i < f; ++i) {
        if (spec->q_ > (uint64_t(1) << 32)) fail(errc::residue_field_too_large, "q overflow");
        spec->q_ *= p;
    }
    if (f >= 2) {
        if (poly.size() != f + 1 || poly.back() % p != 1)
            fail(errc::config, "defining polynomial must be monic of degree f");
        for (auto& c : poly) c %= spec->ppow_[N];
        std::vector<uint64_t> rp = poly;
        if (has_root_mod_p(rp, p))
            fail(errc::config, "defining polynomial is reducible mod p");
        spec->poly_ = std::move(poly);
    } else if (!poly.empty()) {
        fail(errc::config, "f = 1 takes no defining polynomial");
    }
    return spec;
}

std::shared_ptr<const RingSpec> RingSpec::laurent(uint64_t p, unsigned N) {
    if (p == 2) fail(errc::config, "residue characteristic 2 is not supported");
    if (p > 10000 || !is_prime(p)) fail(errc::config, "p must be an odd prime <= 10000");
    if (N < 1) fail(errc::config, "precision must be >= 1");
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->kind_ = ring_kind::laurent;
    spec->p_ = p;
    spec->f_ = 1;
    spec->N_ = N;
    spec->q_ = p;
    spec->ppow_.assign(N + 1, 0);  // p-power table is meaningless in equal characteristic
    spec->ppow_[0] = 1;
    return spec;
}

bool RingSpec::same_as(const RingSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && f_ == o.f_ && N_ == o.N_ && poly_ == o.poly_;
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    if (kind_ == ring_kind::laurent)
        os << "F_" << p_ << "[t]/(t^" << N_ << ")";
    else if (f_ == 1)
        os << "Z/" << p_ << "^" << N_;
    else
        os << "(Z/" << p_ << "^" << N_ << ")[u], f=" << f_;
    return os.str();
}

static void check_same_ring(const RElem& a, const RElem& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
        fail(errc::config, "ring elements belong to different rings");
}

RElem RElem::zero(const Ring& R) {
    RElem x;
    x.ring_ = R;
    x.c_.assign(R->kind() == ring_kind::laurent ? R->precision() : R->f(), 0);
    return x;
}

RElem RElem::one(const Ring& R) { return from_int(R, 1); }

RElem RElem::from_int(const Ring& R, int64_t value) {
    RElem x = zero(R);
    if (R->kind() == ring_kind::laurent) {
        int64_t v = value % static_cast<int64_t>(R->p());
        if (v < 0) v += R->p();
        x.c_[0] = static_cast<uint64_t>(v);
    } else {
        uint64_t m = R->p_pow(R->precision());
        int64_t v = value % static_cast<int64_t>(m);
        if (v < 0) v += m;
        x.c_[0] = static_cast<uint64_t>(v);
    }
    return x;
}

RElem RElem::u_gen(const Ring& R) {
    if (R->kind() != ring_kind::unramified || R->f() < 2)
        fail(errc::config, "u requires an unramified ring with f >= 2");
    RElem x = zero(R);
    x.c_[1] = 1;
    return x;
}

RElem RElem::pi(const Ring& R) {
    RElem x = zero(R);
    if (R->kind() == ring_kind::laurent) {
        if (R->precision() >= 2) x.c_[1] = 1;
    } else {
        x.c_[0] = R->p() % R->p_pow(R->precision());
    }
    return x;
}

RElem RElem::from_digits(const Ring& R, const std::vector<uint32_t>& digits) {
    unsigned N = R->precision(), f = R->f();
    if (digits.size() != static_cast<size_t>(N) * f)
        fail(errc::config, "digit array must have length N*f");
    RElem x = zero(R);
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < f; ++j) {
            uint32_t d = digits[static_cast<size_t>(i) * f + j];
            if (d >= R->p()) fail(errc::config, "digit out of range");
            if (R->kind() == ring_kind::laurent)
                x.c_[i] = d;
            else
                x.c_[j] += d * R->p_pow(i);
        }
    return x;
}

std::vector<uint32_t> RElem::digits() const {
    const auto& R = *ring_;
    unsigned N = R.precision(), f = R.f();
    std::vector<uint32_t> out(static_cast<size_t>(N) * f, 0);
    if (R.kind() == ring_kind::laurent) {
        for (unsigned i = 0; i < N; ++i) out[i] = static_cast<uint32_t>(c_[i]);
    } else {
        for (unsigned j = 0; j < f; ++j) {
            uint64_t v = c_[j];
            for (unsigned i = 0; i < N; ++i) {
                out[static_cast<size_t>(i) * f + j] = static_cast<uint32_t>(v % R.p());
                v /= R.p();
            }
        }
    }
    return out;
}

bool RElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t v) { return v == 0; });
}

unsigned RElem::valuation() const {
    const auto& R = *ring_;
    unsigned N = R.precision();
    if (R.kind() == ring_kind::laurent) {
        for (unsigned i = 0; i < N; ++i)
            if (c_[i] != 0) return i;
        return N;
    }
    unsigned v = N;
    for (unsigned j = 0; j < R.f(); ++j) v = std::min(v, vp(c_[j], R.p(), N));
    return v;
}

RElem RElem::operator+(const RElem& o) const {
    check_same_ring(*this, o);
    RElem r = *this;
    const auto& R = *ring_;
    if (R.kind() == ring_kind::laurent) {
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = addmod(c_[i], o.c_[i], R.p());
    } else {
        uint64_t m = R.p_pow(R.precision());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = addmod(c_[i], o.c_[i], m);
    }
    return r;
}

RElem RElem::operator-(const RElem& o) const {
    check_same_ring(*this, o);
    RElem r = *this;
    const auto& R = *ring_;
    uint64_t m = R.kind() == ring_kind::laurent ? R.p() : R.p_pow(R.precision());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = submod(c_[i], o.c_[i], m);
    return r;
}

RElem RElem::operator-() const { return zero(ring_) - *this; }

RElem RElem::operator*(const RElem& o) const {
    check_same_ring(*this, o);
    const auto& R = *ring_;
    RElem r = zero(ring_);
    if (R.kind() == ring_kind::laurent) {
        unsigned N = R.precision();
        for (unsigned i = 0; i < N; ++i) {
            if (c_[i] == 0) continue;
            for (unsigned j = 0; i + j < N; ++j)
                r.c_[i + j] = (r.c_[i + j] + mulmod(c_[i], o.c_[j], R.p())) % R.p();
        }
        return r;
    }
    uint64_t m = R.p_pow(R.precision());
    unsigned f = R.f();
    std::vector<uint64_t> prod(2 * f - 1, 0);
    for (unsigned i = 0; i < f; ++i)
        for (unsigned j = 0; j < f; ++j)
            prod[i + j] = addmod(prod[i + j], mulmod(c_[i], o.c_[j], m), m);
    // fold u^k for k >= f using the monic defining polynomial
    for (unsigned k = 2 * f - 2; k >= f && k < 2 * f; --k) {
        uint64_t top = prod[k];
        if (top != 0)
            for (unsigned j = 0; j < f; ++j)
                prod[k - f + j] = submod(prod[k - f + j], mulmod(top, R.poly()[j], m), m);
        prod[k] = 0;
        if (k == f) break;
    }
    for (unsigned j = 0; j < f; ++j) r.c_[j] = prod[j];
    return r;
}

bool RElem::operator==(const RElem& o) const {
    check_same_ring(*this, o);
    return c_ == o.c_;
}

RElem RElem::invert() const {
    const auto& R = *ring_;
    if (valuation() != 0) fail(errc::not_a_unit, "inversion of a non-unit");
    RElem y = zero(ring_);
    if (R.kind() == ring_kind::laurent) {
        y.c_[0] = powmod(c_[0], R.p() - 2, R.p());
    } else if (R.f() == 1) {
        y.c_[0] = powmod(c_[0] % R.p(), R.p() - 2, R.p());
    } else {
        FpPoly a(R.f());
        for (unsigned j = 0; j < R.f(); ++j) a[j] = c_[j] % R.p();
        fp_trim(a);
        FpPoly h(R.poly().size());
        for (size_t j = 0; j < h.size(); ++j) h[j] = R.poly()[j] % R.p();
        FpPoly inv = fp_inv_mod(a, h, R.p());
        for (size_t j = 0; j < inv.size(); ++j) y.c_[j] = inv[j];
    }
    RElem two = from_int(ring_, 2);
    for (unsigned i = 0; i < 8 && !((*this) * y == one(ring_)); ++i) y = y * (two - (*this) * y);
    if (!((*this) * y == one(ring_))) fail(errc::not_a_unit, "inversion failed to converge");
    return y;
}

RElem RElem::mul_pi_pow(unsigned k) const {
    const auto& R = *ring_;
    RElem r = zero(ring_);
    if (k >= R.precision()) return r;
    if (R.kind() == ring_kind::laurent) {
        for (unsigned i = 0; i + k < R.precision(); ++i) r.c_[i + k] = c_[i];
    } else {
        uint64_t m = R.p_pow(R.precision());
        for (unsigned j = 0; j < R.f(); ++j) r.c_[j] = mulmod(c_[j], R.p_pow(k), m);
    }
    return r;
}

RElem RElem::div_pi_pow_exact(unsigned k) const {
    if (k == 0) return *this;
    if (valuation() < k) fail(errc::config, "inexact division by pi^k");
    const auto& R = *ring_;
    RElem r = zero(ring_);
    if (R.kind() == ring_kind::laurent) {
        for (unsigned i = k; i < R.precision(); ++i) r.c_[i - k] = c_[i];
    } else {
        for (unsigned j = 0; j < R.f(); ++j) r.c_[j] = c_[j] / R.p_pow(k);
    }
    return r;
}

RElem RElem::reduce_mod(unsigned n) const {
    const auto& R = *ring_;
    if (n >= R.precision()) return *this;
    RElem r = *this;
    if (R.kind() == ring_kind::laurent) {
        for (unsigned i = n; i < R.precision(); ++i) r.c_[i] = 0;
    } else {
        for (unsigned j = 0; j < R.f(); ++j) r.c_[j] = c_[j] % R.p_pow(n);
    }
    return r;
}

RElem RElem::halve() const { return *this * from_int(ring_, 2).invert(); }

std::optional<RElem> RElem::sqrt_unit() const {
    if (valuation() != 0) fail(errc::config, "sqrt_unit requires a unit");
    std::optional<RElem> seed;
    for (const RElem& r : residue_reps(ring_)) {
        if (r.is_zero()) continue;
        if ((r * r - *this).valuation() >= 1) {
            seed = r;
            break;
        }
    }
    if (!seed) return std::nullopt;
    RElem y = *seed;
    for (unsigned i = 0; i < 8 && !(y * y == *this); ++i) y = (y + *this * y.invert()).halve();
    if (!(y * y == *this)) return std::nullopt;
    return y;
}

std::string RElem::str() const {
    const auto& R = *ring_;
    if (R.kind() == ring_kind::unramified && R.f() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

std::vector<RElem> residue_reps(const Ring& R) {
    std::vector<RElem> out;
    out.reserve(R->q());
    for (uint64_t i = 0; i < R->q(); ++i) {
        RElem x = RElem::zero(R);
        std::vector<uint32_t> dig(static_cast<size_t>(R->precision()) * R->f(), 0);
        uint64_t v = i;
        for (unsigned j = 0; j < R->f(); ++j) {
            dig[j] = static_cast<uint32_t>(v % R->p());
            v /= R->p();
        }
        out.push_back(RElem::from_digits(R, dig));
    }
    return out;
}

RElem random_element(const Ring& R, std::mt19937_64& rng) {
    std::vector<uint32_t> dig(static_cast<size_t>(R->precision()) * R->f());
    for (auto& d : dig) d = static_cast<uint32_t>(rng() % R->p());
    return RElem::from_digits(R, dig);
}

RElem random_unit(const Ring& R, std::mt19937_64& rng) {
    for (;;) {
        RElem x = random_element(R, rng);
        if (x.is_unit()) return x;
    }
}

RElem MonicQuad::disc() const {
    RElem four = RElem::from_int(c0.ring(), 4);
    return c1 * c1 - four * c0;
}

QuadFactorization hensel_quadratic(const MonicQuad& P, const RElem& alpha0, const RElem& beta0,
                                   unsigned n) {
    const Ring& R = alpha0.ring();
    unsigned N = R->precision();
    if (n < 1 || n > N) fail(errc::config, "hensel modulus n must satisfy 1 <= n <= N");
    if ((alpha0 + beta0 + P.c1).valuation() < n || (alpha0 * beta0 - P.c0).valuation() < n)
        fail(errc::hensel_hypothesis_violated,
             "P is not congruent to (t-alpha0)(t-beta0) mod pi^n");
    unsigned gap = (alpha0 - beta0).valuation();
    if (2 * gap >= n)
        fail(errc::hensel_hypothesis_violated, "root gap " + std::to_string(gap) +
                                                   " is not < n/2 for n=" + std::to_string(n));
    RElem alpha = alpha0;
    RElem two = RElem::from_int(R, 2);
    bool exact = false;
    for (unsigned iter = 0; iter <= N + 2; ++iter) {
        RElem r = P.eval(alpha);
        if (r.is_zero()) {
            exact = true;
            break;
        }
        RElem deriv = two * alpha + P.c1;
        if (deriv.valuation() != gap || r.valuation() <= 2 * gap) break;
        RElem delta = r.div_pi_pow_exact(gap) * deriv.div_pi_pow_exact(gap).invert();
        alpha = alpha - delta;
    }
    RElem beta = -P.c1 - alpha;
    QuadFactorization out{alpha, beta, (alpha - beta).valuation(), exact};
    if (out.gap != gap)
        fail(errc::theorem_violation, "hensel lifting did not preserve the root gap");
    return out;
}

std::optional<QuadFactorization> factor_quadratic_mod(const MonicQuad& P, unsigned n) {
    const Ring& R = P.c0.ring();
    if (n < 1 || n > R->precision()) fail(errc::config, "factorization modulus out of range");
    RElem T = -P.c1;
    RElem d = P.disc();
    unsigned w = d.valuation();
    if (w >= n) {
        RElem half = T.halve();
        return QuadFactorization{half, half, R->precision(), false};
    }
    if (w % 2 != 0) return std::nullopt;
    auto s = d.div_pi_pow_exact(w).sqrt_unit();
    if (!s) return std::nullopt;
    RElem gamma = s->mul_pi_pow(w / 2);
    RElem alpha = (T + gamma).halve();
    RElem beta = (T - gamma).halve();
    return QuadFactorization{alpha, beta, w / 2, P.eval(alpha).is_zero()};
}

namespace {

// all canonical residues mod pi^k, i.e. q^k elements
std::vector<RElem> residues_mod(const Ring& R, unsigned k) {
    std::vector<RElem> out;
    unsigned nd = k * R->f();
    std::vector<uint32_t> dig(static_cast<size_t>(R->precision()) * R->f(), 0);
    std::vector<uint32_t> odo(nd, 0);
    for (;;) {
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < R->f(); ++j)
                dig[static_cast<size_t>(i) * R->f() + j] = odo[i * R->f() + j];
        out.push_back(RElem::from_digits(R, dig));
        unsigned pos = 0;
        while (pos < nd && ++odo[pos] == R->p()) odo[pos++] = 0;
        if (pos == nd) break;
    }
    return out;
}

} // namespace

std::vector<RElem> quadratic_roots_mod(const MonicQuad& P, unsigned n) {
    const Ring& R = P.c0.ring();
    if (n < 1 || n > R->precision()) fail(errc::config, "root modulus out of range");
    RElem T = -P.c1;
    RElem d = P.disc();
    unsigned w = d.valuation();
    std::vector<RElem> roots;
    std::set<std::vector<uint32_t>> seen;
    auto push = [&](const RElem& cand) {
        RElem r = cand.reduce_mod(n);
        if (P.eval(r).reduce_mod(n).is_zero() && seen.insert(r.digits()).second)
            roots.push_back(r);
    };
    if (w >= n) {
        unsigned h = (n + 1) / 2;
        RElem base = T.halve();
        for (const RElem& e : residues_mod(R, n - h)) push(base + e.mul_pi_pow(h));
        return roots;
    }
    if (w % 2 != 0) return roots;
    auto s = d.div_pi_pow_exact(w).sqrt_unit();
    if (!s) return roots;
    RElem gamma = s->mul_pi_pow(w / 2);
    unsigned h = n - w / 2;
    for (const RElem& e : residues_mod(R, w / 2)) {
        push((T + gamma).halve() + e.mul_pi_pow(h));
        push((T - gamma).halve() + e.mul_pi_pow(h));
    }
    return roots;
}

} // namespace btlat

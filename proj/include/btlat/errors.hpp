#pragma once

#include <stdexcept>
#include <string>

namespace btlat {

// Structured error conditions. Mirrored one-to-one by the C API status codes.
enum class errc {
    none = 0,
    config,                  // mismatched rings, bad parameters, malformed spec
    not_a_unit,
    hensel_hypothesis_violated,
    singular_lattice,
    precision_exhausted,
    residue_field_too_large,
    not_irreducible,
    not_a_boundary_point,
    bad_factorization,
    not_reducible,
    search_budget_exceeded,
    theorem_violation,       // a verified postcondition of a proved theorem failed
    modulus_exceeds_diameter,
    invalid_relation,
    construction_failed,
    oracle_budget,
    resource_limit,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace btlat

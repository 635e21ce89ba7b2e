#ifndef ADDGAL_CENSUS_HPP
#define ADDGAL_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "addgal/matrix.hpp"

namespace addgal {

// Monic degree-n polynomials over F_q whose irreducible factors of degree
// not divisible by b appear with multiplicity divisible by b: exactly the
// characteristic polynomials of a degree-b field-extension subgroup.
// exclude_x_multiples drops the polynomials divisible by X.
std::uint64_t count_c3_charpolys(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                                 bool exclude_x_multiples);

// Monic degree-n polynomials with nonzero constant term that are reducible.
std::uint64_t count_reducible_charpolys(std::uint64_t q, std::uint32_t n);

// Characteristic polynomials of the group generated by the given matrices,
// by breadth-first closure. Throws when the closure exceeds the cap.
std::vector<Poly> charpoly_set_bruteforce(const std::vector<MatrixGF>& generators,
                                          std::uint64_t cap = 1000000);

// GL_m(q^b) embedded in GL_{mb}(q) through the regular representation of
// the top field of the tower; every full-group element enumerated.
// Feasible only for tiny parameters (used as a counting oracle).
std::vector<MatrixGF> embedded_extension_field_group(const TowerCtx& tower, std::uint32_t m);

MatrixGF regular_embedding(const TowerCtx& tower, const MatrixGF& M);

// Numeric upper bounds on characteristic-polynomial counts per maximal
// subgroup class of GL_n(q), straight from the quoted closed forms.
struct ClassBoundReport {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint64_t c2 = 0;                      // sum over ml = n, l > 1 of 28 l q^m
    std::vector<std::uint32_t> primes_b;       // prime divisors of n
    double c3_coset = 0;                       // 2 q^{n/2} per prime b | n
    std::vector<std::uint64_t> c3_identity;    // count_c3_charpolys per b, excluding X-multiples
    double c4_to_c8 = 0;                       // C q^{(n+1)/2} (8n ln n + n ln ln q)
    double universal_constant = 0;
    std::string class_s_note;                  // not bounded by this artifact
};

ClassBoundReport maximal_class_bound(std::uint64_t q, std::uint32_t n, double c_universal = 100.0);

} // namespace addgal

#endif

#ifndef ADDGAL_GROUP_HPP
#define ADDGAL_GROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "addgal/frobenius.hpp"

namespace addgal {

// Parameters (n, h, c, k, u) cut out of a monic separable q-additive
// f over F_q[t]: h is the t-content, D the companion matrix of its
// associated polynomial, and a_0 = c u^k with k maximal (k = 0 and u
// absent when a_0 is constant). They pin down the block upper-triangular
// subgroup of GL_n(q)
//
//   { (D^i  A; 0  B) : i >= 0, det B in (c/det D)^i F_q^{xk} }
//
// which contains the Galois group of f and is the predicted value of it.
struct GroupParams {
    std::uint32_t n = 0;
    AdditivePoly h;          // monic separable, ground-field coefficients
    std::uint32_t eta = 0;   // additive degree of h
    MatrixGF D;              // companion of the associated polynomial of h
    elem c = 1;
    std::uint32_t k = 0;
    std::optional<Poly> u;   // monic, nonconstant, not a proper power; absent iff k = 0

    const FieldCtx& field() const { return h.field(); }
    elem h0() const { return h.coeff(0).coeff(0); } // constant coefficient of assoc(h)
    bool degenerate() const { return eta == n; }    // group collapses to <D>
};

GroupParams extract_group_params(const AdditivePoly& f, std::uint64_t seed = 0);

// Convenience for synthetic parameter sets in tests and enumeration.
GroupParams make_group_params(std::uint32_t n, const AdditivePoly& h, elem c, std::uint32_t k,
                              std::optional<Poly> u = std::nullopt);

// ord(D), and the order of the pair (D, [c/det D]) in <D> x F^x/F^{xk}.
// One period of the latter is what membership tests must scan.
std::uint64_t group_index_period(const GroupParams& gp);

bool group_contains(const GroupParams& gp, const MatrixGF& M);

// |Gamma| = L q^{eta(n-eta)} |GL_{n-eta}(q)| / gcd(k, q-1); the degenerate
// eta = n case returns ord(D).
std::uint64_t group_order(const GroupParams& gp);

// Whether p is the characteristic polynomial of some member: p factors as
// charpoly(D^i) * p2 with p2(0) != 0 and (-1)^{n-eta} p2(0) in the i-th
// determinant coset.
bool is_group_charpoly(const GroupParams& gp, const Poly& p);

// Subgroup of Z_m x F_q^x (m = ord D) materialized from generators;
// elements sorted by (r, element index).
struct DeltaImage {
    std::uint64_t m = 1;
    std::vector<std::pair<std::uint32_t, elem>> elems;

    bool contains(std::uint32_t r, elem s) const;
    friend bool operator==(const DeltaImage& a, const DeltaImage& b) {
        return a.m == b.m && a.elems == b.elems;
    }
};

DeltaImage delta_closure(const FieldCtx& F, std::uint64_t m,
                         const std::vector<std::pair<std::uint32_t, elem>>& gens);

// Image of (restriction to the content root space, quotient determinant):
// generated by (1, (-1)^{n-eta} c/h_0) and (0, x^k) for x in F_q^x.
DeltaImage predicted_delta_image(const GroupParams& gp);

} // namespace addgal

#endif

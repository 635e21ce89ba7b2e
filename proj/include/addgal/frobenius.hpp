#ifndef ADDGAL_FROBENIUS_HPP
#define ADDGAL_FROBENIUS_HPP

#include <cstdint>
#include <utility>

#include "addgal/additive.hpp"
#include "addgal/matrix.hpp"

namespace addgal {

// Companion matrix of a monic polynomial: subdiagonal ones, last column
// the negated coefficients. Degree 0 gives the 0x0 matrix.
MatrixGF companion_matrix(const Poly& p);

// Evaluation of a t-polynomial over the base field at a top-field point.
elem eval_tpoly(const TowerCtx& tower, const Poly& a, elem tau);

// B = D * D^(q) * ... * D^(q^{r-1}) for a monic separable q-additive f
// with coefficients in the top field of the tower, D the companion matrix
// of the associated polynomial. B represents the q^r-power Frobenius on
// the root space of f; its characteristic polynomial has coefficients in
// the base field.
MatrixGF frobenius_matrix(const AdditivePoly& f, const TowerCtx& tower);

// Re-expresses a top-field polynomial with Frobenius-fixed coefficients
// over the base field; throws std::logic_error if any coefficient moves.
Poly descend_poly(const TowerCtx& tower, const Poly& p);

// Frobenius data of the specialization t -> tau. Non-separable
// specializations are reported with the flag cleared, not rejected.
struct SpecializationReport {
    elem tau = 0;
    std::uint32_t r = 1;       // [F_q(tau) : F_q]
    bool separable = false;
    MatrixGF frob;             // over the top field; empty when not separable
    Poly charpoly_base;        // monic degree n over F_q
    elem det_base = 0;         // (-1)^{rn} N(a_0(tau))
};

SpecializationReport specialize(const AdditivePoly& f, const TowerCtx& tower, elem tau);

// The associated polynomial at tau = 0 split as X^k * g with g(0) != 0;
// g divides the characteristic polynomial of a Frobenius element.
std::pair<std::uint32_t, Poly> charpoly_divisor_at_zero(const AdditivePoly& f);

} // namespace addgal

#endif

#ifndef ADDGAL_ADDITIVE_HPP
#define ADDGAL_ADDITIVE_HPP

#include <cstdint>
#include <vector>

#include "addgal/poly.hpp"

namespace addgal {

// A q-additive polynomial sum_i a_i X^{q^i} with coefficients a_i in F[t].
// F is the coefficient field; qadd is the q of q-additivity (a power of
// char F; equal to |F| for polynomials over F_q[t], smaller when the
// coefficients live in an extension F_{q^r}). Ground-field coefficients
// are modelled as degree-0 polynomials in t.
class AdditivePoly {
public:
    AdditivePoly() : F_(nullptr), qadd_(0) {}
    AdditivePoly(const FieldCtx& F, std::uint64_t qadd, std::vector<Poly> coeffs);

    static AdditivePoly zero(const FieldCtx& F, std::uint64_t qadd) {
        return AdditivePoly(F, qadd, {});
    }
    static AdditivePoly from_constants(const FieldCtx& F, std::uint64_t qadd,
                                       const std::vector<elem>& consts);

    const FieldCtx& field() const { return *F_; }
    std::uint64_t qadd() const { return qadd_; }

    int adeg() const { return int(a_.size()) - 1; } // additive degree n
    bool is_zero() const { return a_.empty(); }
    const Poly& coeff(std::size_t i) const;
    const std::vector<Poly>& coeffs() const { return a_; }

    bool separable() const { return !a_.empty() && !a_[0].is_zero(); }
    bool is_monic() const { return !a_.empty() && a_.back().is_one(); }
    int deg_t() const;
    bool constant_coeffs() const { return deg_t() <= 0; }

    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) {
        return a.qadd_ == b.qadd_ && a.a_ == b.a_;
    }
    friend bool operator!=(const AdditivePoly& a, const AdditivePoly& b) { return !(a == b); }

private:
    const FieldCtx* F_;
    std::uint64_t qadd_;
    std::vector<Poly> a_; // a_[i] multiplies X^{qadd^i}; a_.back() nonzero
};

// Degree reindexing X^{q^i} <-> X^i, in both directions. to_associated
// requires ground-field coefficients.
Poly to_associated(const AdditivePoly& f);
AdditivePoly from_associated(const Poly& p, std::uint64_t qadd);

AdditivePoly add(const AdditivePoly& f, const AdditivePoly& g);

// f(g(X)). Over F_q[t] composition corresponds to multiplication of the
// associated polynomials; with extension-field coefficients it is still
// the ring composition (coefficients get twisted by q-power Frobenius).
AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g);

// Evaluation at a field point; needs ground-field coefficients.
elem evaluate(const AdditivePoly& f, elem x);

BiPoly expand(const AdditivePoly& f); // as element of F[t][X]
// Inverse of expand; throws if the X-support is not of q-power degrees.
AdditivePoly parse_expansion(const BiPoly& b, std::uint64_t qadd);

// Monic additive gcd of ground-field q-additive polynomials over F_q,
// computed through the associated polynomials.
AdditivePoly additive_gcd(const std::vector<AdditivePoly>& fs);

// The t-content of f: the monic q-additive h in F_q[X] whose associated
// polynomial is the gcd of the associated t-slices of f.
AdditivePoly con_t_additive(const AdditivePoly& f);

// Right division in the composition ring: f = compose(u, g) + r with the
// additive degree of r below that of g. Requires monic g. For monic g
// over F_q[t] everything stays in F_q[t].
std::pair<AdditivePoly, AdditivePoly> divrem_right(const AdditivePoly& f, const AdditivePoly& g);

// g | f as ordinary polynomials in X, decided through right division.
bool divides(const AdditivePoly& g, const AdditivePoly& f);

// The same test by ordinary long division of the expansions; independent
// route kept for cross-checks.
bool divides_by_expansion(const AdditivePoly& g, const AdditivePoly& f);

// All monic additive g in F_q[t][X] with 0 < m < n, deg_t g >= 1 and
// g | f. The search space is restricted to m >= n - floor(log_q d) and
// coefficient t-degrees <= floor(d/q), which is exhaustive for divisors
// with F_q[t] coefficients. Output sorted by (m, coefficient order).
std::vector<AdditivePoly> find_additive_divisors(const AdditivePoly& f, std::uint32_t d,
                                                 int threads = 1);

// Whether the F_q-coefficient search above is guaranteed to see every
// divisor over the algebraic closure: n > eta + 2 log_q d, i.e.
// q^{n-eta} > d^2. When false, closure-only divisors may exist.
bool divisor_search_complete(const AdditivePoly& f, std::uint32_t d);

// deg_t f >= q^{n-m} deg_t g for additive g | f; verifies divisibility
// first and throws when g does not divide f. A false return would
// contradict the height bound and signals an arithmetic bug.
bool check_height_inequality(const AdditivePoly& f, const AdditivePoly& g);

} // namespace addgal

#endif

#ifndef ADDGAL_POLY_HPP
#define ADDGAL_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "addgal/field.hpp"
#include "addgal/rng.hpp"

namespace addgal {

// Dense univariate polynomial over a FieldCtx, coefficients low-to-high
// with no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree -1.
class Poly {
public:
    Poly() : F_(nullptr) {}
    explicit Poly(const FieldCtx& F) : F_(&F) {}
    Poly(const FieldCtx& F, std::vector<elem> coeffs) : F_(&F), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const FieldCtx& F) { return Poly(F); }
    static Poly constant(const FieldCtx& F, elem a) { return Poly(F, {a}); }
    static Poly one(const FieldCtx& F) { return constant(F, 1); }
    static Poly X(const FieldCtx& F) { return Poly(F, {0, 1}); }

    const FieldCtx& field() const { return *F_; }
    bool attached() const { return F_ != nullptr; }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    elem lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return lead() == 1; }
    const std::vector<elem>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, elem v) {
        if (i >= c_.size()) c_.resize(i + 1, 0);
        c_[i] = v;
        normalize();
    }

    elem operator()(elem x) const; // Horner evaluation

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const FieldCtx* F_;
    std::vector<elem> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, elem s);
Poly shift(const Poly& a, std::size_t k); // a * X^k

// Quotient and remainder; b need not be monic (its lead is inverted).
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b); // monic representative
Poly derivative(const Poly& a);
Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& mod);

// Deterministic total order: by degree, then coefficient ranks from the
// constant term up. Used for canonical factor lists and divisor output.
bool poly_lex_less(const Poly& a, const Poly& b);

struct PolyFactor {
    Poly factor; // monic irreducible
    std::uint32_t multiplicity;
};

// Factorization of the monic part of f into monic irreducibles.
// Deterministic for a fixed seed (the seed drives equal-degree splitting
// only); factors come out sorted by poly_lex_less.
std::vector<PolyFactor> factorize(const Poly& f, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

// Multiset of (degree, multiplicity), one entry per distinct irreducible
// factor, sorted by degree then multiplicity.
using FactorizationType = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
FactorizationType factorization_type(const Poly& f, std::uint64_t seed = 0);

// Number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(e) q^{d/e}.
std::uint64_t count_irreducibles(std::uint64_t q, std::uint32_t d);

// Element of F_q[t][X], X-major: rows[j] is the coefficient of X^j as a
// polynomial in t.
class BiPoly {
public:
    BiPoly() : F_(nullptr) {}
    explicit BiPoly(const FieldCtx& F) : F_(&F) {}
    BiPoly(const FieldCtx& F, std::vector<Poly> rows) : F_(&F), rows_(std::move(rows)) {
        normalize();
    }

    const FieldCtx& field() const { return *F_; }
    bool is_zero() const { return rows_.empty(); }
    int degree_x() const { return int(rows_.size()) - 1; }
    int degree_t() const;
    const Poly& row(std::size_t j) const;
    const std::vector<Poly>& rows() const { return rows_; }

    // The transposed view: entry j of the result is the coefficient of t^j
    // as a polynomial in X. Transposing twice is the identity.
    std::vector<Poly> t_slices() const;
    static BiPoly from_t_slices(const FieldCtx& F, const std::vector<Poly>& slices);

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

private:
    void normalize() {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }

    const FieldCtx* F_;
    std::vector<Poly> rows_;
};

// Monic gcd (in X) of the t-coefficient slices.
Poly content_t(const BiPoly& f);

} // namespace addgal

#endif

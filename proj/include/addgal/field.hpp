#ifndef ADDGAL_FIELD_HPP
#define ADDGAL_FIELD_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace addgal {

// A field element is the packed index sum c_i * p^i of its coefficient
// vector (c_0, ..., c_{e-1}) over F_p, i.e. the residue c_0 + c_1 x + ...
// modulo the defining polynomial of the context it belongs to.
using elem = std::uint32_t;

// F_{p^e} = F_p[x]/(modulus). Immutable after construction and safe to
// share across threads. All arithmetic is exact; multiplication, inverse
// and powers go through discrete exp/log tables, which caps the supported
// field size at kMaxFieldSize elements.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 20;

    // Canonical context: deterministic modulus, the lexicographically
    // smallest monic irreducible of degree e over F_p (coefficient
    // vectors compared low-to-high).
    FieldCtx(std::uint32_t p, std::uint32_t e);
    // Explicit modulus (length e+1, low-to-high, monic); verified irreducible.
    FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    // Contexts are pointed to by every value type; pinning them avoids
    // dangling references.
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = delete;

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    // The residue class of x; a root of the modulus when e > 1.
    elem gen() const { return e_ > 1 ? elem(p_) : elem(1); }
    elem primitive() const { return primitive_; } // generator of the unit group

    elem from_int(std::uint64_t v) const { return elem(v % p_); }
    std::uint32_t digit(elem a, std::uint32_t i) const;
    std::vector<std::uint32_t> digits(elem a) const;
    elem from_digits(const std::vector<std::uint32_t>& d) const;

    elem add(elem a, elem b) const {
        if (p_ == 2) return a ^ b;
        elem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (a % p_ + b % p_) % p_ * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }
    elem neg(elem a) const {
        if (p_ == 2) return a;
        elem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (p_ - a % p_) % p_ * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, std::uint64_t k) const;

    // x -> x^{p^i}
    elem frob_p(elem a, std::uint64_t i) const;

    std::uint64_t log(elem a) const; // discrete log w.r.t. primitive(); a != 0
    elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

    // Canonical total order: lexicographic on the coefficient vector,
    // c_0 compared first. Used wherever a "smallest" element is needed.
    std::uint64_t canonical_rank(elem a) const;
    elem elem_at_rank(std::uint64_t r) const;
    bool lex_less(elem a, elem b) const { return canonical_rank(a) < canonical_rank(b); }

    bool valid(elem a) const { return a < q_; }

private:
    void init_tables();

    std::uint32_t p_, e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_;
    elem primitive_ = 0;
    std::vector<elem> exp_; // length 2(q-1): exp_[i] = primitive^i, doubled to skip a mod
    std::vector<std::uint32_t> log_;
};

std::uint64_t mult_order(const FieldCtx& F, elem a);

// Membership of s in base^i * F_q^{xk}, where F_q^{xk} is the subgroup of
// k-th powers and k = 0 denotes the trivial subgroup {1}. Decided without
// discrete logs: t = s * base^{-i} is a k-th power iff t^{(q-1)/g} = 1 with
// g = gcd(k, q-1), and gcd(0, q-1) = q-1 recovers the k = 0 convention.
bool in_power_coset(const FieldCtx& F, elem s, elem base, std::int64_t i, std::uint64_t k);

// F_q = base inside F_{q^r} = top, with an explicitly computed embedding.
// The top field is the canonical F_p^{e*r}; the embedding sends the
// residue class generating the base to the lexicographically smallest
// root of the base modulus in the top field.
class TowerCtx {
public:
    TowerCtx(const FieldCtx& base, std::uint32_t r);
    // Alternative model of the top field; modulus over F_p of degree e*r.
    TowerCtx(const FieldCtx& base, std::uint32_t r, std::vector<std::uint32_t> top_modulus);

    TowerCtx(const TowerCtx&) = delete;
    TowerCtx& operator=(const TowerCtx&) = delete;

    const FieldCtx& base() const { return *base_; }
    const FieldCtx& top() const { return top_; }
    std::uint32_t r() const { return r_; }

    elem embed(elem a) const { return embed_[a]; }
    bool in_base(elem x) const { return descend_.count(x) != 0; }
    elem descend(elem x) const; // throws if x is not in the embedded base field

    // x -> x^{q^i} on the top field, q the base field size.
    elem frob_q(elem x, std::uint64_t i) const;

    // N_{top/base}(x) = x^{(q^r-1)/(q-1)}, returned as a base-field element.
    elem norm(elem x) const;

    // [F_q(x) : F_q], a divisor of r.
    std::uint32_t degree_over_base(elem x) const;

    // Coordinates of x w.r.t. the power basis 1, y, ..., y^{r-1} of the
    // top field over the embedded base, y the top residue class.
    std::vector<elem> coords(elem x) const;

private:
    const FieldCtx* base_;
    std::uint32_t r_;
    FieldCtx top_;
    std::vector<elem> embed_;
    std::unordered_map<elem, elem> descend_;
    std::vector<std::uint8_t> basis_inv_; // (e*r)^2 matrix over F_p, column-major
};

} // namespace addgal

#endif

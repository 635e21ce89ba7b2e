#include "addgal/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace addgal {

namespace {

// order of [x] in F^x / F^{xk}: least j >= 1 with x^j a k-th power
std::uint64_t coset_order(const FieldCtx& F, elem x, std::uint64_t k) {
    for (std::uint64_t j = 1;; ++j) {
        if (in_power_coset(F, F.pow(x, j), 1, 0, k)) return j;
    }
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

} // namespace

GroupParams make_group_params(std::uint32_t n, const AdditivePoly& h, elem c, std::uint32_t k,
                              std::optional<Poly> u) {
    if (!h.is_monic() || !h.separable() || !h.constant_coeffs())
        throw std::invalid_argument("content parameter must be monic separable over F_q");
    if (c == 0) throw std::invalid_argument("c must be a unit");
    if (k > 0 && !u) throw std::invalid_argument("k >= 1 needs the radical u");
    if (h.adeg() > int(n)) throw std::invalid_argument("content degree exceeds n");
    GroupParams gp;
    gp.n = n;
    gp.h = h;
    gp.eta = std::uint32_t(h.adeg());
    gp.D = companion_matrix(to_associated(h));
    gp.c = c;
    gp.k = k;
    gp.u = std::move(u);
    return gp;
}

GroupParams extract_group_params(const AdditivePoly& f, std::uint64_t seed) {
    if (!f.is_monic()) throw std::invalid_argument("parameter extraction needs monic input");
    if (!f.separable()) throw std::invalid_argument("parameter extraction needs a_0 != 0");
    const FieldCtx& F = f.field();
    AdditivePoly h = con_t_additive(f);
    const Poly& a0 = f.coeff(0);

    elem c;
    std::uint32_t k = 0;
    std::optional<Poly> u;
    if (a0.degree() <= 0) {
        c = a0.coeff(0); // constant a_0: k = 0 by convention
    } else {
        c = a0.lead();
        auto factors = factorize(a0, seed);
        std::uint32_t g = 0;
        for (const auto& pf : factors) g = std::gcd(g, pf.multiplicity);
        k = g;
        Poly rad = Poly::one(F);
        for (const auto& pf : factors)
            for (std::uint32_t i = 0; i < pf.multiplicity / k; ++i) rad = mul(rad, pf.factor);
        u = rad;
        // reconstruction audit: a_0 = c u^k exactly
        Poly check = Poly::constant(F, c);
        for (std::uint32_t i = 0; i < k; ++i) check = mul(check, rad);
        if (check != a0) throw std::logic_error("a_0 != c u^k after factorization");
    }
    return make_group_params(std::uint32_t(f.adeg()), h, c, k, std::move(u));
}

std::uint64_t group_index_period(const GroupParams& gp) {
    const FieldCtx& F = gp.field();
    std::uint64_t m = gp.eta == 0 ? 1 : matrix_order(gp.D);
    elem s0 = F.div(gp.c, det(gp.D));
    return lcm_u64(m, coset_order(F, s0, gp.k));
}

bool group_contains(const GroupParams& gp, const MatrixGF& M) {
    const FieldCtx& F = gp.field();
    std::uint32_t n = gp.n, eta = gp.eta;
    if (M.dim() != n) throw std::invalid_argument("dimension mismatch");
    if (det(M) == 0) return false;

    // lower-left block must vanish
    for (std::uint32_t i = eta; i < n; ++i)
        for (std::uint32_t j = 0; j < eta; ++j)
            if (M(i, j) != 0) return false;

    std::uint64_t ordD = gp.eta == 0 ? 1 : matrix_order(gp.D);
    std::uint64_t L = group_index_period(gp);

    // locate the top-left block in <D>
    std::uint64_t i0 = 0;
    if (eta > 0) {
        MatrixGF T = block(M, 0, 0, eta, eta);
        MatrixGF P = MatrixGF::identity(F, eta);
        bool found = false;
        for (std::uint64_t i = 0; i < ordD; ++i) {
            if (P == T) {
                i0 = i;
                found = true;
                break;
            }
            P = mul(P, gp.D);
        }
        if (!found) return false;
    }

    if (gp.degenerate()) return true; // Gamma = <D>

    elem detB = det(block(M, eta, eta, n - eta, n - eta));
    if (detB == 0) return false;
    elem s0 = F.div(gp.c, det(gp.D));
    for (std::uint64_t i = i0; i < L; i += ordD)
        if (in_power_coset(F, detB, s0, std::int64_t(i), gp.k)) return true;
    return false;
}

std::uint64_t group_order(const GroupParams& gp) {
    const FieldCtx& F = gp.field();
    std::uint64_t q = F.q();
    std::uint64_t m = gp.eta == 0 ? 1 : matrix_order(gp.D);
    if (gp.degenerate()) return m;

    std::uint64_t L = group_index_period(gp);
    std::uint64_t g = gp.k == 0 ? q - 1 : std::gcd<std::uint64_t>(gp.k, q - 1);
    std::uint32_t me = gp.n - gp.eta;

    auto mul_checked = [](std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > ~std::uint64_t(0) / b) throw std::overflow_error("group order overflows");
        return a * b;
    };
    std::uint64_t order = L;
    for (std::uint32_t i = 0; i < gp.eta * me; ++i) order = mul_checked(order, q);
    // |GL_me(q)| = prod_i (q^me - q^i)
    std::uint64_t qme = 1;
    for (std::uint32_t i = 0; i < me; ++i) qme = mul_checked(qme, q);
    std::uint64_t qi = 1;
    for (std::uint32_t i = 0; i < me; ++i) {
        order = mul_checked(order, qme - qi);
        qi *= q;
    }
    return order / g;
}

bool is_group_charpoly(const GroupParams& gp, const Poly& p) {
    const FieldCtx& F = gp.field();
    if (!p.is_monic() || p.degree() != int(gp.n))
        throw std::invalid_argument("candidate must be monic of degree n");
    std::uint64_t ordD = gp.eta == 0 ? 1 : matrix_order(gp.D);
    std::uint64_t L = group_index_period(gp);

    if (gp.degenerate()) {
        MatrixGF P = MatrixGF::identity(F, gp.eta);
        for (std::uint64_t i = 0; i < ordD; ++i) {
            if (charpoly(P) == p) return true;
            P = mul(P, gp.D);
        }
        return false;
    }

    elem s0 = F.div(gp.c, det(gp.D));
    bool odd_dim = (gp.n - gp.eta) % 2 == 1;
    MatrixGF P = MatrixGF::identity(F, gp.eta);
    std::vector<Poly> cps(ordD);
    for (std::uint64_t i = 0; i < ordD; ++i) {
        cps[i] = charpoly(P);
        P = mul(P, gp.D);
    }
    for (std::uint64_t i = 0; i < L; ++i) {
        auto [quo, rem] = divrem(p, cps[i % ordD]);
        if (!rem.is_zero()) continue;
        elem p20 = quo.coeff(0);
        if (p20 == 0) continue;
        elem detB = odd_dim ? F.neg(p20) : p20; // det B = (-1)^{n-eta} p2(0)
        if (in_power_coset(F, detB, s0, std::int64_t(i), gp.k)) return true;
    }
    return false;
}

bool DeltaImage::contains(std::uint32_t r, elem s) const {
    return std::binary_search(elems.begin(), elems.end(), std::make_pair(r, s));
}

DeltaImage delta_closure(const FieldCtx& F, std::uint64_t m,
                         const std::vector<std::pair<std::uint32_t, elem>>& gens) {
    DeltaImage img;
    img.m = m == 0 ? 1 : m;
    std::set<std::pair<std::uint32_t, elem>> seen;
    seen.insert({0, 1});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<std::uint32_t, elem>> cur(seen.begin(), seen.end());
        for (const auto& a : cur) {
            for (const auto& g : gens) {
                std::pair<std::uint32_t, elem> next{std::uint32_t((a.first + g.first) % img.m),
                                                    F.mul(a.second, g.second)};
                if (seen.insert(next).second) grew = true;
            }
        }
    }
    img.elems.assign(seen.begin(), seen.end());
    return img;
}

DeltaImage predicted_delta_image(const GroupParams& gp) {
    const FieldCtx& F = gp.field();
    std::uint64_t m = gp.eta == 0 ? 1 : matrix_order(gp.D);
    elem s0 = F.div(gp.c, gp.h0());
    if ((gp.n - gp.eta) % 2 == 1) s0 = F.neg(s0); // (-1)^{n-eta} c / h_0
    std::vector<std::pair<std::uint32_t, elem>> gens;
    gens.push_back({std::uint32_t(1 % m), s0});
    for (elem x = 1; x < F.q(); ++x) gens.push_back({0, F.pow(x, gp.k)});
    return delta_closure(F, m, gens);
}

} // namespace addgal

#include "addgal/frobenius.hpp"

#include <stdexcept>

namespace addgal {

MatrixGF companion_matrix(const Poly& p) {
    if (!p.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
    const FieldCtx& F = p.field();
    std::uint32_t n = std::uint32_t(p.degree());
    MatrixGF D(F, n);
    for (std::uint32_t i = 1; i < n; ++i) D(i, i - 1) = 1;
    for (std::uint32_t i = 0; i < n; ++i) D(i, n - 1) = F.neg(p.coeff(i));
    return D;
}

elem eval_tpoly(const TowerCtx& tower, const Poly& a, elem tau) {
    const FieldCtx& T = tower.top();
    if (a.is_zero()) return 0;
    elem v = tower.embed(a.lead());
    for (int i = a.degree(); i-- > 0;)
        v = T.add(T.mul(v, tau), tower.embed(a.coeff(std::size_t(i))));
    return v;
}

MatrixGF frobenius_matrix(const AdditivePoly& f, const TowerCtx& tower) {
    if (&f.field() != &tower.top())
        throw std::invalid_argument("coefficients must live in the tower top");
    if (f.qadd() != tower.base().q())
        throw std::invalid_argument("additivity base must match the tower base");
    if (!f.separable()) throw std::invalid_argument("Frobenius matrix needs separable input");
    if (!f.is_monic()) throw std::invalid_argument("Frobenius matrix needs monic input");
    Poly assoc = to_associated(f);
    MatrixGF D = companion_matrix(assoc);
    MatrixGF B = D;
    std::uint32_t e_base = tower.base().e();
    for (std::uint32_t i = 1; i < tower.r(); ++i)
        B = mul(B, entrywise_frob_p(D, std::uint64_t(i) * e_base));
    return B;
}

Poly descend_poly(const TowerCtx& tower, const Poly& p) {
    std::vector<elem> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        elem x = p.coeff(i);
        if (tower.frob_q(x, 1) != x || !tower.in_base(x))
            throw std::logic_error("coefficient is not Frobenius-fixed");
        c[i] = tower.descend(x);
    }
    return Poly(tower.base(), std::move(c));
}

SpecializationReport specialize(const AdditivePoly& f, const TowerCtx& tower, elem tau) {
    if (&f.field() != &tower.base())
        throw std::invalid_argument("specialization needs coefficients over the tower base");
    if (f.qadd() != tower.base().q())
        throw std::invalid_argument("specialization is defined over F_q[t]");
    if (!f.is_monic()) throw std::invalid_argument("specialization needs monic input");

    const FieldCtx& T = tower.top();
    SpecializationReport rep;
    rep.tau = tau;
    rep.r = tower.degree_over_base(tau);

    elem a0 = eval_tpoly(tower, f.coeff(0), tau);
    rep.separable = (a0 != 0);
    if (!rep.separable) return rep;

    std::vector<elem> consts(f.coeffs().size());
    for (std::size_t i = 0; i < consts.size(); ++i)
        consts[i] = eval_tpoly(tower, f.coeff(i), tau);
    AdditivePoly ftau = AdditivePoly::from_constants(T, f.qadd(), consts);

    // Work over F_q(tau) exactly: twist r times, r the exact degree of tau.
    Poly assoc = to_associated(ftau);
    MatrixGF D = companion_matrix(assoc);
    MatrixGF B = D;
    std::uint32_t e_base = tower.base().e();
    for (std::uint32_t i = 1; i < rep.r; ++i)
        B = mul(B, entrywise_frob_p(D, std::uint64_t(i) * e_base));
    rep.frob = B;
    rep.charpoly_base = descend_poly(tower, charpoly(B));

    // det = (-1)^{rn} N_{F_q(tau)/F_q}(a_0(tau))
    const FieldCtx& Fq = tower.base();
    std::uint64_t qr1 = 1;
    for (std::uint32_t i = 0; i < rep.r; ++i) qr1 *= Fq.q();
    elem nrm_top = T.pow(a0, (qr1 - 1) / (Fq.q() - 1));
    elem nrm = tower.descend(nrm_top);
    std::uint32_t n = std::uint32_t(f.adeg());
    bool negate = (std::uint64_t(rep.r) * n) % 2 == 1;
    rep.det_base = negate ? Fq.neg(nrm) : nrm;
    return rep;
}

std::pair<std::uint32_t, Poly> charpoly_divisor_at_zero(const AdditivePoly& f) {
    if (!f.is_monic() || !f.separable())
        throw std::invalid_argument("needs a monic separable polynomial");
    const FieldCtx& F = f.field();
    std::vector<elem> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i)(0);
    Poly assoc(F, std::move(c));
    if (assoc.is_zero()) throw std::logic_error("associated specialization vanished");
    std::uint32_t k = 0;
    while (assoc.coeff(k) == 0) ++k;
    std::vector<elem> g(assoc.coeffs().begin() + k, assoc.coeffs().end());
    return {k, Poly(F, std::move(g))};
}

} // namespace addgal

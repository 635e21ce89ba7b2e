#include "addgal/additive.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addgal {

namespace {

bool is_power_of(std::uint64_t v, std::uint32_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

// b^{qadd^j} for b in F[t]. Ground-field coefficients are fixed by the
// qadd-power Frobenius exactly when |F| == qadd, in which case the power
// is the substitution t -> t^{qadd^j}; constants are twisted directly.
Poly twist_pow(const Poly& b, std::uint64_t qadd, std::uint32_t j) {
    const FieldCtx& F = b.field();
    if (j == 0 || b.is_zero()) return b;
    if (b.degree() <= 0) {
        elem c = b.coeff(0);
        for (std::uint32_t s = 0; s < j; ++s) c = F.pow(c, qadd);
        return Poly::constant(F, c);
    }
    if (F.q() != qadd)
        throw std::invalid_argument("t-dependent coefficients need |F| == qadd");
    std::uint64_t step = 1;
    for (std::uint32_t s = 0; s < j; ++s) {
        step *= qadd;
        if (step > (std::uint64_t(1) << 32)) throw std::overflow_error("twist exponent too large");
    }
    std::vector<elem> c(std::size_t(b.degree()) * step + 1, 0);
    for (int k = 0; k <= b.degree(); ++k) c[std::size_t(k) * step] = b.coeff(k);
    return Poly(F, std::move(c));
}

} // namespace

AdditivePoly::AdditivePoly(const FieldCtx& F, std::uint64_t qadd, std::vector<Poly> coeffs)
    : F_(&F), qadd_(qadd), a_(std::move(coeffs)) {
    if (qadd < 2 || !is_power_of(qadd, F.p()))
        throw std::invalid_argument("qadd must be a power of the field characteristic");
    std::uint64_t v = F.q();
    while (v > 1 && v % qadd == 0) v /= qadd;
    if (v != 1) throw std::invalid_argument("|F| must be a power of qadd");
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

AdditivePoly AdditivePoly::from_constants(const FieldCtx& F, std::uint64_t qadd,
                                          const std::vector<elem>& consts) {
    std::vector<Poly> cs;
    cs.reserve(consts.size());
    for (elem c : consts) cs.push_back(Poly::constant(F, c));
    return AdditivePoly(F, qadd, std::move(cs));
}

const Poly& AdditivePoly::coeff(std::size_t i) const {
    static const Poly empty;
    return i < a_.size() ? a_[i] : empty;
}

int AdditivePoly::deg_t() const {
    int d = -1;
    for (const auto& c : a_) d = std::max(d, c.degree());
    return d;
}

Poly to_associated(const AdditivePoly& f) {
    if (!f.constant_coeffs() && !f.is_zero())
        throw std::invalid_argument("associated polynomial needs ground-field coefficients");
    const FieldCtx& F = f.field();
    std::vector<elem> c(f.coeffs().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i).coeff(0);
    return Poly(F, std::move(c));
}

AdditivePoly from_associated(const Poly& p, std::uint64_t qadd) {
    const FieldCtx& F = p.field();
    std::vector<Poly> c;
    c.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(Poly::constant(F, p.coeff(std::size_t(i))));
    return AdditivePoly(F, qadd, std::move(c));
}

AdditivePoly add(const AdditivePoly& f, const AdditivePoly& g) {
    if (f.qadd() != g.qadd()) throw std::invalid_argument("qadd mismatch");
    const FieldCtx& F = f.field();
    std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Poly> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = add(f.coeff(i), g.coeff(i));
    return AdditivePoly(F, f.qadd(), std::move(c));
}

AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g) {
    if (&f.field() != &g.field() || f.qadd() != g.qadd())
        throw std::invalid_argument("composition needs matching contexts");
    const FieldCtx& F = f.field();
    if (f.is_zero() || g.is_zero()) return AdditivePoly::zero(F, f.qadd());
    std::vector<Poly> c(f.coeffs().size() + g.coeffs().size() - 1, Poly::zero(F));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Poly& ai = f.coeff(i);
        if (ai.is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            const Poly& bj = g.coeff(j);
            if (bj.is_zero()) continue;
            c[i + j] = add(c[i + j], mul(ai, twist_pow(bj, f.qadd(), std::uint32_t(i))));
        }
    }
    return AdditivePoly(F, f.qadd(), std::move(c));
}

elem evaluate(const AdditivePoly& f, elem x) {
    if (!f.constant_coeffs() && !f.is_zero())
        throw std::invalid_argument("evaluation needs ground-field coefficients");
    const FieldCtx& F = f.field();
    elem acc = 0;
    elem xp = x; // x^{qadd^i}
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        acc = F.add(acc, F.mul(f.coeff(i).coeff(0), xp));
        xp = F.pow(xp, f.qadd());
    }
    return acc;
}

BiPoly expand(const AdditivePoly& f) {
    const FieldCtx& F = f.field();
    if (f.is_zero()) return BiPoly(F);
    std::uint64_t deg = 1;
    for (int i = 0; i < f.adeg(); ++i) deg *= f.qadd();
    if (deg > (std::uint64_t(1) << 22)) throw std::overflow_error("expansion too large");
    std::vector<Poly> rows(std::size_t(deg) + 1, Poly::zero(F));
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        rows[pw] = f.coeff(i);
        pw *= f.qadd();
    }
    return BiPoly(F, std::move(rows));
}

AdditivePoly parse_expansion(const BiPoly& b, std::uint64_t qadd) {
    const FieldCtx& F = b.field();
    if (!b.is_zero() && !b.row(0).is_zero())
        throw std::invalid_argument("polynomial is not q-additive");
    std::vector<Poly> coeffs;
    std::uint64_t pw = 1;
    for (std::size_t j = 1; j < b.rows().size(); ++j) {
        if (j == pw) {
            coeffs.push_back(b.row(j));
            pw *= qadd;
        } else if (!b.row(j).is_zero()) {
            throw std::invalid_argument("polynomial is not q-additive");
        }
    }
    return AdditivePoly(F, qadd, std::move(coeffs));
}

AdditivePoly additive_gcd(const std::vector<AdditivePoly>& fs) {
    std::uint64_t qadd = 0;
    Poly g;
    bool first = true;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        if (!f.constant_coeffs())
            throw std::invalid_argument("additive gcd needs ground-field coefficients");
        if (f.qadd() != f.field().q())
            throw std::invalid_argument("additive gcd is defined over F_q itself");
        qadd = f.qadd();
        Poly assoc = to_associated(f);
        g = first ? monic(assoc) : gcd(g, assoc);
        first = false;
    }
    if (first) throw std::invalid_argument("additive gcd of all-zero input");
    return from_associated(g, qadd);
}

AdditivePoly con_t_additive(const AdditivePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("content of zero polynomial");
    const FieldCtx& F = f.field();
    if (f.qadd() != F.q())
        throw std::invalid_argument("t-content is defined over F_q itself");
    int dt = f.deg_t();
    Poly g;
    bool first = true;
    for (int s = 0; s <= std::max(dt, 0); ++s) {
        std::vector<elem> slice(f.coeffs().size(), 0);
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) slice[i] = f.coeff(i).coeff(s);
        Poly assoc(F, std::move(slice));
        if (assoc.is_zero()) continue;
        g = first ? monic(assoc) : gcd(g, assoc);
        first = false;
    }
    return from_associated(g, f.qadd());
}

std::pair<AdditivePoly, AdditivePoly> divrem_right(const AdditivePoly& f,
                                                   const AdditivePoly& g) {
    if (&f.field() != &g.field() || f.qadd() != g.qadd())
        throw std::invalid_argument("context mismatch");
    if (g.is_zero()) throw std::invalid_argument("division by zero");
    if (!g.is_monic()) throw std::invalid_argument("right division needs monic divisor");
    const FieldCtx& F = f.field();
    int n = f.adeg(), m = g.adeg();
    if (n < m) return {AdditivePoly::zero(F, f.qadd()), f};

    std::vector<Poly> r(f.coeffs().begin(), f.coeffs().end());
    std::vector<Poly> u(std::size_t(n - m) + 1, Poly::zero(F));
    for (int j = n - m; j >= 0; --j) {
        Poly uj = r[std::size_t(m) + j];
        if (uj.is_zero()) continue;
        u[j] = uj;
        for (int i = 0; i <= m; ++i) {
            Poly sub_term = mul(uj, twist_pow(g.coeff(std::size_t(i)), f.qadd(), std::uint32_t(j)));
            r[std::size_t(i) + j] = sub(r[std::size_t(i) + j], sub_term);
        }
    }
    r.resize(m);
    return {AdditivePoly(F, f.qadd(), std::move(u)), AdditivePoly(F, f.qadd(), std::move(r))};
}

bool divides(const AdditivePoly& g, const AdditivePoly& f) {
    return divrem_right(f, g).second.is_zero();
}

bool divides_by_expansion(const AdditivePoly& g, const AdditivePoly& f) {
    if (!g.is_monic()) throw std::invalid_argument("expansion division needs monic divisor");
    BiPoly fe = expand(f), ge = expand(g);
    // long division in X with coefficients in F[t]; monic divisor keeps
    // everything polynomial
    std::vector<Poly> rem(fe.rows());
    std::size_t dg = ge.rows().size() - 1;
    while (rem.size() > dg) {
        Poly top = rem.back();
        if (!top.is_zero()) {
            for (std::size_t i = 0; i < dg; ++i) {
                std::size_t pos = rem.size() - 1 - dg + i;
                rem[pos] = sub(rem[pos], mul(top, ge.row(i)));
            }
        }
        rem.pop_back();
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

std::uint32_t floor_log(std::uint64_t q, std::uint64_t d) {
    std::uint32_t l = 0;
    std::uint64_t v = q;
    while (v <= d) {
        ++l;
        v *= q;
    }
    return l;
}

// polynomial of t-degree <= dcap from a mixed-radix code; c_0 is the most
// significant digit so ascending codes are ascending lex order
Poly poly_at_code(const FieldCtx& F, std::uint32_t dcap, std::uint64_t code) {
    std::vector<elem> c(dcap + 1);
    for (std::uint32_t k = 0; k <= dcap; ++k) {
        std::uint64_t rank = code % F.q();
        code /= F.q();
        c[dcap - k] = F.elem_at_rank(rank);
    }
    return Poly(F, std::move(c));
}

} // namespace

std::vector<AdditivePoly> find_additive_divisors(const AdditivePoly& f, std::uint32_t d,
                                                 int threads) {
    if (!f.is_monic() || !f.separable())
        throw std::invalid_argument("divisor search needs monic separable input");
    const FieldCtx& F = f.field();
    std::uint64_t q = f.qadd();
    int n = f.adeg();
    std::vector<AdditivePoly> out;
    if (d < q) return out; // deg_t g <= floor(d/q) = 0 rules everything out
    std::uint32_t dcap = std::uint32_t(d / q);
    std::uint32_t span = floor_log(q, d);
    int mmin = std::max(1, n - int(span));

    std::uint64_t polycount = 1;
    for (std::uint32_t i = 0; i <= dcap; ++i) {
        polycount *= q;
        if (polycount > (std::uint64_t(1) << 40)) throw std::runtime_error("divisor search space too large");
    }

    for (int m = mmin; m < n; ++m) {
        std::uint64_t total = 1;
        for (int i = 0; i < m; ++i) {
            total *= polycount;
            if (total > (std::uint64_t(1) << 40)) throw std::runtime_error("divisor search space too large");
        }
        // digit for b_0 is most significant, so ascending codes enumerate
        // coefficient vectors in lexicographic order
        auto decode = [&](std::uint64_t code) {
            std::vector<Poly> bs(std::size_t(m) + 1);
            for (int i = m - 1; i >= 0; --i) {
                bs[std::size_t(i)] = poly_at_code(F, dcap, code % polycount);
                code /= polycount;
            }
            bs[std::size_t(m)] = Poly::one(F);
            return AdditivePoly(F, q, std::move(bs));
        };
        auto is_hit = [&](std::uint64_t code) {
            AdditivePoly g = decode(code);
            return g.separable() && g.deg_t() >= 1 && divides(g, f);
        };

        std::vector<std::uint64_t> hits;
#ifdef _OPENMP
        int nt = threads <= 0 ? omp_get_max_threads() : threads;
#else
        int nt = 1;
#endif
        if (nt > 1) {
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
            {
                std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1024)
                for (long long code = 0; code < (long long)total; ++code)
                    if (is_hit(std::uint64_t(code))) local.push_back(std::uint64_t(code));
#pragma omp critical
                hits.insert(hits.end(), local.begin(), local.end());
            }
#endif
        } else {
            for (std::uint64_t code = 0; code < total; ++code)
                if (is_hit(code)) hits.push_back(code);
        }
        std::sort(hits.begin(), hits.end());
        for (std::uint64_t code : hits) out.push_back(decode(code));
    }
    return out;
}

bool divisor_search_complete(const AdditivePoly& f, std::uint32_t d) {
    int eta = con_t_additive(f).adeg();
    int n = f.adeg();
    // n > eta + 2 log_q d, i.e. q^{n-eta} > d^2, in exact integers
    if (n <= eta) return false;
    unsigned __int128 pw = 1;
    for (int i = 0; i < n - eta; ++i) {
        pw *= f.qadd();
        if (pw > (unsigned __int128)(d) * d) return true;
    }
    return pw > (unsigned __int128)(d) * d;
}

bool check_height_inequality(const AdditivePoly& f, const AdditivePoly& g) {
    if (!divides(g, f)) throw std::invalid_argument("g does not divide f");
    int dg = g.deg_t();
    if (dg <= 0) return true;
    int df = f.deg_t();
    unsigned __int128 rhs = dg;
    for (int i = 0; i < f.adeg() - g.adeg(); ++i) {
        rhs *= f.qadd();
        if (rhs > (unsigned __int128)df) return false;
    }
    return (unsigned __int128)df >= rhs;
}

} // namespace addgal

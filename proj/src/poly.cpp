#include "addgal/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace addgal {

elem Poly::operator()(elem x) const {
    if (c_.empty()) return 0;
    const FieldCtx& F = *F_;
    elem v = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;)
        v = F.add(F.mul(v, x), c_[i]);
    return v;
}

namespace {

// a zero polynomial may be detached from any context; pick whichever
// operand carries one
const FieldCtx& ctx_of(const Poly& a, const Poly& b) {
    if (a.attached()) return a.field();
    return b.field();
}

} // namespace

Poly add(const Poly& a, const Poly& b) {
    if (!a.attached() && !b.attached()) return Poly();
    const FieldCtx& F = ctx_of(a, b);
    std::vector<elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly neg(const Poly& a) {
    if (!a.attached()) return Poly();
    const FieldCtx& F = a.field();
    std::vector<elem> c(a.coeffs());
    for (auto& x : c) x = F.neg(x);
    return Poly(F, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    if (!a.attached() && !b.attached()) return Poly();
    const FieldCtx& F = ctx_of(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        elem ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
    }
    return Poly(F, std::move(c));
}

Poly mul_scalar(const Poly& a, elem s) {
    const FieldCtx& F = a.field();
    if (s == 0) return Poly::zero(F);
    std::vector<elem> c(a.coeffs());
    for (auto& x : c) x = F.mul(x, s);
    return Poly(F, std::move(c));
}

Poly shift(const Poly& a, std::size_t k) {
    if (a.is_zero()) return a;
    std::vector<elem> c(a.coeffs().size() + k, 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + k);
    return Poly(a.field(), std::move(c));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const FieldCtx& F = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(F), a};
    elem linv = F.inv(b.lead());
    std::vector<elem> rem(a.coeffs());
    std::vector<elem> quo(a.degree() - b.degree() + 1, 0);
    for (std::size_t i = rem.size(); i-- > std::size_t(b.degree());) {
        elem t = F.mul(rem[i], linv);
        if (t == 0) continue;
        quo[i - b.degree()] = t;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = F.sub(rem[i - b.degree() + j], F.mul(t, b.coeff(j)));
    }
    rem.resize(b.degree() > 0 ? b.degree() : 0);
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly monic(const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return mul_scalar(a, a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly derivative(const Poly& a) {
    const FieldCtx& F = a.field();
    if (a.degree() < 1) return Poly::zero(F);
    std::vector<elem> c(a.degree(), 0);
    for (int i = 1; i <= a.degree(); ++i) {
        elem m = F.from_int(std::uint64_t(i));
        c[i - 1] = F.mul(a.coeff(i), m);
    }
    return Poly(F, std::move(c));
}

Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& mod) {
    const FieldCtx& F = base.field();
    Poly r = Poly::one(F);
    Poly b = divrem(base, mod).second;
    while (k) {
        if (k & 1) r = divrem(mul(r, b), mod).second;
        b = divrem(mul(b, b), mod).second;
        k >>= 1;
    }
    return r;
}

bool poly_lex_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const FieldCtx& F = a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        auto ra = F.canonical_rank(a.coeff(i)), rb = F.canonical_rank(b.coeff(i));
        if (ra != rb) return ra < rb;
    }
    return false;
}

namespace {

Poly pth_root(const Poly& f) {
    const FieldCtx& F = f.field();
    std::uint32_t p = F.p();
    std::vector<elem> c(f.degree() / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.frob_p(f.coeff(i * p), F.e() - 1); // a^{1/p} = a^{p^{e-1}}
    return Poly(F, std::move(c));
}

// Square-free decomposition in characteristic p: returns pairwise coprime
// squarefree monic parts with their multiplicities.
void squarefree_decompose(const Poly& f, std::uint32_t mult_scale,
                          std::vector<std::pair<Poly, std::uint32_t>>& out) {
    const FieldCtx& F = f.field();
    std::uint32_t p = F.p();
    Poly df = derivative(f);
    Poly c = df.is_zero() ? f : gcd(f, df);
    Poly w = divrem(f, c).first;
    std::uint32_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, i * mult_scale);
        ++i;
        w = std::move(y);
        c = divrem(c, w).first;
    }
    if (c.degree() > 0)
        squarefree_decompose(pth_root(c), mult_scale * p, out);
}

// Distinct-degree: g monic squarefree -> list of (product of all irreducible
// factors of degree d, d).
std::vector<std::pair<Poly, std::uint32_t>> distinct_degree(const Poly& g) {
    const FieldCtx& F = g.field();
    std::uint64_t q = F.q();
    std::vector<std::pair<Poly, std::uint32_t>> out;
    Poly f = g;
    Poly h = divrem(Poly::X(F), f).second;
    std::uint32_t d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > std::uint32_t(f.degree())) {
            out.emplace_back(f, std::uint32_t(f.degree()));
            break;
        }
        h = pow_mod(h, q, f);
        Poly gg = gcd(sub(h, Poly::X(F)), f);
        if (gg.degree() > 0) {
            out.emplace_back(gg, d);
            f = divrem(f, gg).first;
            h = divrem(h, f).second;
        }
    }
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace variant in char 2).
void equal_degree(const Poly& h, std::uint32_t d, RngStream& rng, std::vector<Poly>& out) {
    const FieldCtx& F = h.field();
    if (std::uint32_t(h.degree()) == d) {
        out.push_back(h);
        return;
    }
    std::uint64_t q = F.q();
    for (;;) {
        std::vector<elem> ac(h.degree());
        for (auto& x : ac) x = elem(rng.below(q));
        Poly a(F, std::move(ac));
        if (a.degree() < 1) continue;
        Poly g;
        if (F.p() == 2) {
            // trace map over F_2: sum of a^{2^i}, i < d*e
            Poly t = a, acc = a;
            for (std::uint32_t i = 1; i < d * F.e(); ++i) {
                t = divrem(mul(t, t), h).second;
                acc = add(acc, t);
            }
            g = gcd(acc, h);
        } else {
            // a^{(q^d-1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
            Poly t = a, acc = a;
            for (std::uint32_t i = 1; i < d; ++i) {
                t = pow_mod(t, q, h);
                acc = divrem(mul(acc, t), h).second;
            }
            Poly b = pow_mod(acc, (q - 1) / 2, h);
            g = gcd(sub(b, Poly::one(F)), h);
        }
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divrem(h, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<PolyFactor> factorize(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<PolyFactor> result;
    if (f.degree() == 0) return result;
    RngStream rng(seed, 0x66616374ULL);
    std::vector<std::pair<Poly, std::uint32_t>> sqf;
    squarefree_decompose(monic(f), 1, sqf);
    for (auto& [part, mult] : sqf) {
        for (auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) result.push_back({g, mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return poly_lex_less(a.factor, b.factor);
    });
    return result;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree test on zero polynomial");
    if (f.degree() == 0) return true;
    Poly df = derivative(f);
    if (df.is_zero()) return false;
    return gcd(f, df).degree() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("irreducibility test needs degree >= 1");
    std::uint32_t n = std::uint32_t(f.degree());
    if (n == 1) return true;
    const FieldCtx& F = f.field();
    std::uint64_t q = F.q();
    Poly fm = monic(f);
    // Rabin: x^{q^n} = x mod f and gcd(x^{q^{n/l}} - x, f) = 1 for primes l | n
    std::vector<std::uint32_t> checkpoints;
    std::uint32_t m = n;
    for (std::uint32_t l = 2; l <= m; ++l) {
        if (m % l == 0) {
            checkpoints.push_back(n / l);
            while (m % l == 0) m /= l;
        }
    }
    Poly h = divrem(Poly::X(F), fm).second;
    for (std::uint32_t j = 1; j <= n; ++j) {
        h = pow_mod(h, q, fm);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            if (gcd(sub(h, Poly::X(F)), fm).degree() != 0) return false;
        }
    }
    return h == Poly::X(F);
}

FactorizationType factorization_type(const Poly& f, std::uint64_t seed) {
    auto fs = factorize(f, seed);
    FactorizationType t;
    for (auto& pf : fs) t.emplace_back(std::uint32_t(pf.factor.degree()), pf.multiplicity);
    std::sort(t.begin(), t.end());
    return t;
}

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > ~std::uint64_t(0) / q) throw std::overflow_error("q^d overflows 64 bits");
        r *= q;
    }
    return r;
}

int moebius(std::uint32_t n) {
    int mu = 1;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace

std::uint64_t count_irreducibles(std::uint64_t q, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    __int128 acc = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = moebius(e);
        if (mu == 0) continue;
        __int128 term = checked_pow(q, d / e);
        acc += mu > 0 ? term : -term;
    }
    acc /= d;
    return std::uint64_t(acc);
}

// ---------------------------------------------------------------------------
// BiPoly

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

const Poly& BiPoly::row(std::size_t j) const {
    static const Poly empty;
    return j < rows_.size() ? rows_[j] : empty;
}

std::vector<Poly> BiPoly::t_slices() const {
    const FieldCtx& F = *F_;
    int dt = degree_t();
    std::vector<Poly> out;
    for (int j = 0; j <= dt; ++j) {
        std::vector<elem> c(rows_.size(), 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].coeff(j);
        out.emplace_back(F, std::move(c));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

BiPoly BiPoly::from_t_slices(const FieldCtx& F, const std::vector<Poly>& slices) {
    int dx = -1;
    for (const auto& s : slices) dx = std::max(dx, s.degree());
    std::vector<Poly> rows;
    for (int i = 0; i <= dx; ++i) {
        std::vector<elem> c(slices.size(), 0);
        for (std::size_t j = 0; j < slices.size(); ++j) c[j] = slices[j].coeff(i);
        rows.emplace_back(F, std::move(c));
    }
    return BiPoly(F, std::move(rows));
}

Poly content_t(const BiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("content of zero polynomial");
    auto slices = f.t_slices();
    Poly g;
    bool first = true;
    for (const auto& s : slices) {
        if (s.is_zero()) continue;
        g = first ? monic(s) : gcd(g, s);
        first = false;
    }
    return g;
}

} // namespace addgal

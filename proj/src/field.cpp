#include "addgal/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace addgal {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// --- dense F_p[x] helpers used only for modulus construction ---

using PVec = std::vector<std::uint32_t>; // low-to-high, may carry trailing zeros

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, std::uint32_t p) {
    PVec c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // f is monic, so reduction needs no inversions
    std::size_t df = f.size() - 1;
    for (std::size_t i = c.size(); i-- > df;) {
        std::uint32_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < df; ++j)
            c[i - df + j] = (c[i - df + j] + std::uint64_t(t) * (p - f[j])) % p;
    }
    c.resize(df);
    return c;
}

PVec ppowmod(PVec base, std::uint64_t k, const PVec& f, std::uint32_t p) {
    PVec r{1};
    r.resize(f.size() - 1, 0);
    while (k) {
        if (k & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead = b.back();
        // monicize b
        if (lead != 1) {
            std::uint32_t inv = 1;
            for (std::uint32_t x = 1; x < p; ++x)
                if (std::uint64_t(x) * lead % p == 1) { inv = x; break; }
            for (auto& c : b) c = std::uint64_t(c) * inv % p;
        }
        while (a.size() >= b.size()) {
            std::uint32_t t = a.back();
            if (t != 0) {
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[a.size() - b.size() + j] =
                        (a[a.size() - b.size() + j] + std::uint64_t(t) * (p - b[j])) % p;
            }
            a.pop_back();
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool pirreducible(const PVec& f, std::uint32_t p) {
    std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    // Rabin: x^{p^e} = x mod f, and gcd(x^{p^{e/l}} - x, f) = 1 for primes l | e
    PVec x{0, 1};
    PVec h = x; // x^{p^j} mod f
    auto ls = prime_factors(e);
    std::vector<std::size_t> checkpoints;
    for (auto l : ls) checkpoints.push_back(e / l);
    for (std::size_t j = 1; j <= e; ++j) {
        h = ppowmod(h, p, f, p);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            PVec diff = h;
            diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            PVec g = pgcd(diff, f, p);
            if (!(g.size() == 1 && g[0] != 0)) return false;
        }
    }
    // h = x^{p^e} mod f must equal x
    PVec hx = h;
    ptrim(hx);
    return hx.size() == 2 && hx[0] == 0 && hx[1] == 1;
}

// Lexicographically smallest monic irreducible of degree e over F_p,
// coefficient vectors (m_0, ..., m_{e-1}) compared left to right.
PVec canonical_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return PVec{0, 1}; // x itself
    std::vector<std::uint32_t> m(e, 0);
    for (;;) {
        PVec f(m);
        f.push_back(1);
        if (pirreducible(f, p)) return f;
        // odometer, last coordinate fastest (ascending lex order)
        std::size_t i = e;
        while (i-- > 0) {
            if (++m[i] < p) break;
            m[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

} // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e)
    : FieldCtx(p, e, canonical_modulus(p, e)) {}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), mod_(std::move(modulus)) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > kMaxFieldSize) throw std::invalid_argument("field size exceeds supported limit 2^20");
    }
    if (mod_.size() != e_ + 1 || mod_.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (auto c : mod_)
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (!pirreducible(mod_, p_)) throw std::invalid_argument("modulus is reducible");
    init_tables();
}

std::uint32_t FieldCtx::digit(elem a, std::uint32_t i) const {
    for (std::uint32_t j = 0; j < i; ++j) a /= p_;
    return a % p_;
}

std::vector<std::uint32_t> FieldCtx::digits(elem a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

elem FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
    if (d.size() != e_) throw std::invalid_argument("coefficient vector has wrong length");
    elem a = 0;
    for (std::uint32_t i = e_; i-- > 0;) {
        if (d[i] >= p_) throw std::invalid_argument("coefficient out of range");
        a = a * p_ + d[i];
    }
    return a;
}

elem FieldCtx::inv(elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return exp_[(q_ - 1) - log_[a]];
}

elem FieldCtx::pow(elem a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    return exp_[std::uint64_t(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

elem FieldCtx::frob_p(elem a, std::uint64_t i) const {
    i %= e_;
    std::uint64_t k = 1;
    for (std::uint64_t j = 0; j < i; ++j) k *= p_;
    return pow(a, k);
}

std::uint64_t FieldCtx::log(elem a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    return log_[a];
}

std::uint64_t FieldCtx::canonical_rank(elem a) const {
    std::uint64_t r = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r = r * p_ + a % p_;
        a /= p_;
    }
    return r;
}

elem FieldCtx::elem_at_rank(std::uint64_t r) const {
    elem a = 0;
    std::uint64_t mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        a += elem(r % p_ * mul);
        r /= p_;
        mul *= p_;
    }
    // rank digits come most-significant-first, so rebuild in reverse
    std::vector<std::uint32_t> d = digits(a);
    std::reverse(d.begin(), d.end());
    return from_digits(d);
}

void FieldCtx::init_tables() {
    // raw (table-free) product, for bootstrapping the tables
    auto mul_raw = [&](elem a, elem b) -> elem {
        std::vector<std::uint32_t> c(2 * e_, 0);
        std::vector<std::uint32_t> da = digits(a), db = digits(b);
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < e_; ++j)
                c[i + j] = (c[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
        }
        for (std::size_t i = c.size(); i-- > e_;) {
            std::uint32_t t = c[i];
            if (t == 0) continue;
            c[i] = 0;
            for (std::uint32_t j = 0; j < e_; ++j)
                c[i - e_ + j] = (c[i - e_ + j] + std::uint64_t(t) * (p_ - mod_[j])) % p_;
        }
        elem r = 0;
        for (std::uint32_t i = e_; i-- > 0;) r = r * p_ + c[i];
        return r;
    };
    auto pow_raw = [&](elem a, std::uint64_t k) {
        elem r = 1;
        while (k) {
            if (k & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            k >>= 1;
        }
        return r;
    };

    auto fs = prime_factors(q_ - 1);
    primitive_ = 1;
    if (q_ > 2) {
        for (elem a = 2; a < q_; ++a) {
            bool ok = true;
            for (auto l : fs)
                if (pow_raw(a, (q_ - 1) / l) == 1) { ok = false; break; }
            if (ok) { primitive_ = a; break; }
        }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    elem cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + (q_ - 1)] = cur;
        log_[cur] = std::uint32_t(i);
        cur = mul_raw(cur, primitive_);
    }
    if (cur != 1) throw std::logic_error("primitive element has wrong order");
}

std::uint64_t mult_order(const FieldCtx& F, elem a) {
    if (a == 0) throw std::invalid_argument("order of zero");
    std::uint64_t n = F.q() - 1;
    return n / std::gcd(n, F.log(a));
}

bool in_power_coset(const FieldCtx& F, elem s, elem base, std::int64_t i, std::uint64_t k) {
    if (s == 0 || base == 0) throw std::invalid_argument("power coset test needs nonzero arguments");
    std::uint64_t n = F.q() - 1;
    elem bi = (i >= 0) ? F.pow(base, std::uint64_t(i)) : F.pow(F.inv(base), std::uint64_t(-i));
    elem t = F.mul(s, F.inv(bi));
    std::uint64_t g = (k == 0) ? n : std::gcd(k, n);
    return F.pow(t, n / g) == 1;
}

// ---------------------------------------------------------------------------
// TowerCtx

TowerCtx::TowerCtx(const FieldCtx& base, std::uint32_t r)
    : TowerCtx(base, r, canonical_modulus(base.p(), base.e() * r)) {}

TowerCtx::TowerCtx(const FieldCtx& base, std::uint32_t r, std::vector<std::uint32_t> top_modulus)
    : base_(&base), r_(r), top_(base.p(), base.e() * r, std::move(top_modulus)) {
    if (r == 0) throw std::invalid_argument("tower degree must be >= 1");
    const FieldCtx& T = top_;
    std::uint64_t q = base.q();

    embed_.resize(q);
    if (base.e() == 1) {
        for (elem a = 0; a < q; ++a) embed_[a] = a; // prime field: constant digits
    } else {
        // smallest root of the base modulus in the top field
        elem root = 0;
        bool found = false;
        for (std::uint64_t rank = 0; rank < T.q(); ++rank) {
            elem x = T.elem_at_rank(rank);
            elem v = 0, xp = 1;
            for (std::size_t j = 0; j < base.modulus().size(); ++j) {
                v = T.add(v, T.mul(T.from_int(base.modulus()[j]), xp));
                xp = T.mul(xp, x);
            }
            if (v == 0) { root = x; found = true; break; }
        }
        if (!found) throw std::logic_error("base modulus has no root in top field");
        for (elem a = 0; a < q; ++a) {
            elem acc = 0, rp = 1;
            for (std::uint32_t i = 0; i < base.e(); ++i) {
                acc = T.add(acc, T.mul(T.from_int(base.digit(a, i)), rp));
                rp = T.mul(rp, root);
            }
            embed_[a] = acc;
        }
    }
    for (elem a = 0; a < q; ++a) descend_[embed_[a]] = a;
    if (embed_[1] != 1) throw std::logic_error("embedding does not fix 1");

    // basis-change matrix: columns are digits of embed(x^i) * y^j
    std::uint32_t D = base.e() * r;
    std::vector<std::uint8_t> M(std::size_t(D) * D, 0);
    elem y = T.gen();
    elem yj = 1;
    for (std::uint32_t j = 0; j < r; ++j) {
        for (std::uint32_t i = 0; i < base.e(); ++i) {
            // base basis element x^i has packed index p^i
            elem basis = 1;
            for (std::uint32_t t = 0; t < i; ++t) basis *= base.p();
            elem col = T.mul(embed_[basis], yj);
            for (std::uint32_t row = 0; row < D; ++row)
                M[std::size_t(row) * D + (std::size_t(j) * base.e() + i)] =
                    std::uint8_t(T.digit(col, row));
        }
        yj = T.mul(yj, y);
    }
    // invert M over F_p (Gauss-Jordan)
    std::uint32_t p = base.p();
    std::vector<std::uint8_t> inv(std::size_t(D) * D, 0);
    for (std::uint32_t i = 0; i < D; ++i) inv[std::size_t(i) * D + i] = 1;
    auto at = [D](std::vector<std::uint8_t>& m, std::uint32_t i, std::uint32_t j) -> std::uint8_t& {
        return m[std::size_t(i) * D + j];
    };
    for (std::uint32_t col = 0; col < D; ++col) {
        std::uint32_t piv = col;
        while (piv < D && at(M, piv, col) == 0) ++piv;
        if (piv == D) throw std::logic_error("tower basis is singular");
        if (piv != col) {
            for (std::uint32_t j = 0; j < D; ++j) {
                std::swap(at(M, piv, j), at(M, col, j));
                std::swap(at(inv, piv, j), at(inv, col, j));
            }
        }
        std::uint32_t lead = at(M, col, col);
        std::uint32_t linv = 1;
        for (std::uint32_t x = 1; x < p; ++x)
            if (x * lead % p == 1) { linv = x; break; }
        for (std::uint32_t j = 0; j < D; ++j) {
            at(M, col, j) = std::uint8_t(at(M, col, j) * linv % p);
            at(inv, col, j) = std::uint8_t(at(inv, col, j) * linv % p);
        }
        for (std::uint32_t row = 0; row < D; ++row) {
            if (row == col) continue;
            std::uint32_t f = at(M, row, col);
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < D; ++j) {
                at(M, row, j) = std::uint8_t((at(M, row, j) + (p - f) * at(M, col, j)) % p);
                at(inv, row, j) = std::uint8_t((at(inv, row, j) + (p - f) * at(inv, col, j)) % p);
            }
        }
    }
    basis_inv_ = std::move(inv);
}

elem TowerCtx::descend(elem x) const {
    auto it = descend_.find(x);
    if (it == descend_.end())
        throw std::invalid_argument("element does not lie in the embedded base field");
    return it->second;
}

elem TowerCtx::frob_q(elem x, std::uint64_t i) const {
    if (x == 0) return 0;
    std::uint64_t n = top_.q() - 1;
    std::uint64_t k = 1;
    std::uint64_t q = base_->q() % n;
    i %= r_; // Frobenius w.r.t. F_q has order r on the top field
    for (std::uint64_t j = 0; j < i; ++j) k = k * q % n;
    return top_.pow(x, k);
}

elem TowerCtx::norm(elem x) const {
    if (x == 0) return 0;
    std::uint64_t k = (top_.q() - 1) / (base_->q() - 1);
    return descend(top_.pow(x, k));
}

std::uint32_t TowerCtx::degree_over_base(elem x) const {
    for (std::uint32_t s = 1; s < r_; ++s) {
        if (r_ % s != 0) continue;
        if (frob_q(x, s) == x) return s;
    }
    return r_;
}

std::vector<elem> TowerCtx::coords(elem x) const {
    std::uint32_t D = base_->e() * r_;
    std::uint32_t p = base_->p();
    std::vector<std::uint32_t> v(D);
    for (std::uint32_t i = 0; i < D; ++i) v[i] = top_.digit(x, i);
    std::vector<elem> out(r_);
    for (std::uint32_t j = 0; j < r_; ++j) {
        std::vector<std::uint32_t> dg(base_->e(), 0);
        for (std::uint32_t i = 0; i < base_->e(); ++i) {
            std::uint32_t row = j * base_->e() + i;
            std::uint64_t acc = 0;
            for (std::uint32_t col = 0; col < D; ++col)
                acc += std::uint64_t(basis_inv_[std::size_t(row) * D + col]) * v[col];
            dg[i] = std::uint32_t(acc % p);
        }
        out[j] = base_->from_digits(dg);
    }
    return out;
}

} // namespace addgal

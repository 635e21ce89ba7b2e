#include "addgal/census.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace addgal {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > ~std::uint64_t(0) / b) throw std::overflow_error("count overflows 64 bits");
    return a * b;
}

// multisets of size j from a pool of i items: C(i + j - 1, j)
std::uint64_t multiset_count(std::uint64_t i, std::uint32_t j) {
    unsigned __int128 r = 1;
    for (std::uint32_t t = 1; t <= j; ++t) {
        r = r * (i - 1 + t) / t;
        if (r > (unsigned __int128)~std::uint64_t(0)) throw std::overflow_error("binomial overflows");
    }
    return std::uint64_t(r);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::uint64_t count_c3_charpolys(std::uint64_t q, std::uint32_t n, std::uint32_t b,
                                 bool exclude_x_multiples) {
    if (!is_prime(b)) throw std::invalid_argument("b must be prime");
    if (n % b != 0) throw std::invalid_argument("b must divide n");
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::uint32_t d = 1; d <= n; ++d) {
        std::uint64_t pool = count_irreducibles(q, d);
        if (d == 1 && exclude_x_multiples) pool -= 1; // drop X itself
        if (pool == 0) continue;
        // factors of degree divisible by b are free; the rest must come in
        // b-fold packs
        std::uint32_t step = (d % b == 0) ? d : d * b;
        if (step > n) continue;
        std::vector<std::uint64_t> next(n + 1, 0);
        for (std::uint32_t deg = 0; deg <= n; ++deg) {
            if (ways[deg] == 0) continue;
            for (std::uint32_t j = 0; deg + j * step <= n; ++j) {
                std::uint64_t add = checked_mul(ways[deg], multiset_count(pool, j));
                std::uint64_t& slot = next[deg + j * step];
                if (slot > ~std::uint64_t(0) - add) throw std::overflow_error("count overflows");
                slot += add;
            }
        }
        ways = std::move(next);
    }
    return ways[n];
}

std::uint64_t count_reducible_charpolys(std::uint64_t q, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n == 1) return 0;
    std::uint64_t total = q - 1; // q^{n-1} (q-1) monic with nonzero constant term
    for (std::uint32_t i = 0; i + 1 < n; ++i) total = checked_mul(total, q);
    return total - count_irreducibles(q, n);
}

std::vector<Poly> charpoly_set_bruteforce(const std::vector<MatrixGF>& generators,
                                          std::uint64_t cap) {
    if (generators.empty()) throw std::invalid_argument("need at least one generator");
    const FieldCtx& F = generators.front().field();
    std::uint32_t n = generators.front().dim();
    for (const auto& g : generators)
        if (!is_invertible(g)) throw std::invalid_argument("generators must be invertible");

    std::set<std::vector<elem>> seen;
    std::vector<MatrixGF> frontier{MatrixGF::identity(F, n)};
    seen.insert(frontier.front().entries());
    std::vector<MatrixGF> all = frontier;
    while (!frontier.empty()) {
        std::vector<MatrixGF> next;
        for (const auto& m : frontier) {
            for (const auto& g : generators) {
                MatrixGF prod = mul(m, g);
                if (seen.insert(prod.entries()).second) {
                    if (seen.size() > cap) throw std::runtime_error("group closure exceeds cap");
                    next.push_back(prod);
                    all.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }

    std::set<std::vector<elem>> cps;
    std::vector<Poly> out;
    for (const auto& m : all) {
        Poly cp = charpoly(m);
        if (cps.insert(cp.coeffs()).second) out.push_back(cp);
    }
    std::sort(out.begin(), out.end(), poly_lex_less);
    return out;
}

MatrixGF regular_embedding(const TowerCtx& tower, const MatrixGF& M) {
    const FieldCtx& T = tower.top();
    const FieldCtx& B = tower.base();
    std::uint32_t b = tower.r();
    std::uint32_t m = M.dim();
    MatrixGF big(B, m * b);
    elem y = T.gen();
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            elem a = M(i, j);
            if (a == 0) continue;
            elem ayj = a;
            for (std::uint32_t jj = 0; jj < b; ++jj) {
                auto col = tower.coords(ayj); // column jj of the block: a * y^jj
                for (std::uint32_t ii = 0; ii < b; ++ii)
                    big(i * b + ii, j * b + jj) = col[ii];
                ayj = T.mul(ayj, y);
            }
        }
    }
    return big;
}

std::vector<MatrixGF> embedded_extension_field_group(const TowerCtx& tower, std::uint32_t m) {
    const FieldCtx& T = tower.top();
    std::uint64_t cells = std::uint64_t(m) * m;
    unsigned __int128 total = 1;
    for (std::uint64_t i = 0; i < cells; ++i) {
        total *= T.q();
        if (total > (unsigned __int128)(1) << 24)
            throw std::runtime_error("extension-field group too large to enumerate");
    }
    std::vector<MatrixGF> out;
    for (std::uint64_t code = 0; code < std::uint64_t(total); ++code) {
        MatrixGF M(T, m);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) {
                M(i, j) = elem(c % T.q());
                c /= T.q();
            }
        if (!is_invertible(M)) continue;
        out.push_back(regular_embedding(tower, M));
    }
    return out;
}

ClassBoundReport maximal_class_bound(std::uint64_t q, std::uint32_t n, double c_universal) {
    if (n < 2) throw std::invalid_argument("class bounds need n >= 2");
    ClassBoundReport rep;
    rep.q = q;
    rep.n = n;
    rep.universal_constant = c_universal;

    for (std::uint32_t m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        std::uint32_t l = n / m; // l > 1 since m < n
        std::uint64_t qm = 1;
        for (std::uint32_t i = 0; i < m; ++i) qm = checked_mul(qm, q);
        rep.c2 += checked_mul(std::uint64_t(28) * l, qm);
    }

    std::uint32_t rest = n;
    for (std::uint32_t b = 2; b <= rest; ++b) {
        if (rest % b != 0) continue;
        rep.primes_b.push_back(b);
        while (rest % b == 0) rest /= b;
    }
    rep.c3_coset = 2.0 * std::pow(double(q), n / 2.0) * double(rep.primes_b.size());
    for (std::uint32_t b : rep.primes_b)
        rep.c3_identity.push_back(n % b == 0 ? count_c3_charpolys(q, n, b, true) : 0);

    rep.c4_to_c8 = c_universal * std::pow(double(q), (n + 1) / 2.0) *
                   (8.0 * n * std::log(double(n)) + n * std::log(std::log(double(q))));
    rep.class_s_note = "class S: not bounded by this artifact (universal constants unavailable)";
    return rep;
}

} // namespace addgal

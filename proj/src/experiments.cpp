#include "addgal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "addgal/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addgal {

namespace {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t v = q;
    while (v > 1) {
        if (v % p != 0) throw std::invalid_argument("q must be a prime power");
        v /= p;
        ++e;
    }
    return {std::uint32_t(p), e};
}

int thread_count(int threads) {
#ifdef _OPENMP
    return threads <= 0 ? omp_get_max_threads() : threads;
#else
    (void)threads;
    return 1;
#endif
}

// Enumerate (or sample) tau of exact degree r and hand each to fn.
template <class Fn>
void sweep_taus(const TowerCtx& T, const ExperimentConfig& cfg, RngStream& rng, Fn&& fn) {
    std::uint64_t qr = T.top().q();
    if (qr <= cfg.tau_exhaustive_limit) {
        for (elem tau = 0; tau < qr; ++tau) {
            if (T.degree_over_base(tau) != T.r()) continue;
            fn(tau);
        }
    } else {
        for (std::uint64_t i = 0; i < cfg.tau_budget; ++i) {
            elem tau = elem(rng.below(qr));
            if (T.degree_over_base(tau) != T.r()) continue;
            fn(tau);
        }
    }
}

} // namespace

void validate(const ExperimentConfig& cfg) {
    prime_power(cfg.q);
    if (cfg.r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw std::invalid_argument("bad n range");
    if (cfg.mode == ExperimentMode::theorem2 && cfg.a0.empty())
        throw std::invalid_argument("theorem2 mode needs the a0 conditioning cell");
    if (cfg.tau_budget < 1) throw std::invalid_argument("tau_budget must be >= 1");
}

TowerSet::TowerSet(const FieldCtx& base, std::uint32_t r_max) : base_(base) {
    for (std::uint32_t r = 1; r <= r_max; ++r)
        towers_.push_back(std::make_unique<TowerCtx>(base, r));
}

AdditivePoly sample_additive(const FieldCtx& F, std::uint32_t n, std::uint32_t d, RngStream& rng) {
    std::vector<Poly> a(n + 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<elem> c(d + 1);
        for (auto& x : c) x = elem(rng.below(F.q()));
        a[i] = Poly(F, std::move(c));
    }
    a[n] = Poly::one(F);
    return AdditivePoly(F, F.q(), std::move(a));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::EVIDENCE_GAMMA: return "EVIDENCE_GAMMA";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
        case Verdict::VIOLATION: return "VIOLATION";
    }
    return "?";
}

Certificate largeness_certificate(const AdditivePoly& f, std::uint32_t d, const TowerSet& towers,
                                  const ExperimentConfig& cfg, RngStream tau_rng) {
    if (!f.is_monic() || !f.separable())
        throw std::invalid_argument("certificate needs monic separable input");
    const FieldCtx& F = f.field();
    Certificate cert;

    GroupParams gp = extract_group_params(f);
    std::uint32_t me = gp.n - gp.eta;

    cert.no_divisor = find_additive_divisors(f, d).empty();
    cert.divisor_complete = divisor_search_complete(f, d);

    DeltaImage predicted = predicted_delta_image(gp);
    std::uint64_t m = predicted.m;
    elem detD = det(gp.D);
    std::uint64_t ordD = gp.eta == 0 ? 1 : matrix_order(gp.D);
    std::vector<Poly> cpD(ordD);
    {
        MatrixGF P = MatrixGF::identity(F, gp.eta);
        for (std::uint64_t i = 0; i < ordD; ++i) {
            cpD[i] = charpoly(P);
            P = mul(P, gp.D);
        }
    }

    cert.irreducible_found = (me == 0);
    cert.type_n11_found = (me <= 1);
    FactorizationType near_irreducible;
    if (me >= 3) {
        near_irreducible = {{1, 1}, {me - 1, 1}};
        std::sort(near_irreducible.begin(), near_irreducible.end());
    }

    std::set<std::pair<std::uint32_t, elem>> observed;
    for (std::uint32_t r = 1; r <= cfg.r_max; ++r) {
        const TowerCtx& T = towers.at(r);
        sweep_taus(T, cfg, tau_rng, [&](elem tau) {
            auto rep = specialize(f, T, tau);
            if (!rep.separable) return;
            ++cert.specializations;

            const Poly& cpr = cpD[r % ordD];
            auto [quo, rem] = divrem(rep.charpoly_base, cpr);
            if (!rem.is_zero()) {
                cert.upper_bound_ok = false; // contradicts the invariant-subspace restriction
                return;
            }
            if (!is_group_charpoly(gp, rep.charpoly_base)) cert.upper_bound_ok = false;

            elem s = F.div(rep.det_base, F.pow(detD, r));
            std::uint32_t rm = std::uint32_t(r % m);
            if (!predicted.contains(rm, s)) cert.upper_bound_ok = false;
            observed.insert({rm, s});

            if (me >= 1 && is_irreducible(quo)) cert.irreducible_found = true;
            if (me == 2) {
                if (is_squarefree(quo) && !is_irreducible(quo)) cert.type_n11_found = true;
            } else if (me >= 3) {
                if (factorization_type(quo) == near_irreducible) cert.type_n11_found = true;
            }
        });
    }

    std::vector<std::pair<std::uint32_t, elem>> gens(observed.begin(), observed.end());
    cert.delta_match = (delta_closure(F, m, gens) == predicted);

    if (!cert.upper_bound_ok)
        cert.verdict = Verdict::VIOLATION;
    else if (cert.no_divisor && cert.irreducible_found && cert.type_n11_found && cert.delta_match)
        cert.verdict = Verdict::EVIDENCE_GAMMA;
    else
        cert.verdict = Verdict::INCONCLUSIVE;
    return cert;
}

DeltaEmpirical delta_image_empirical(const AdditivePoly& f, const TowerSet& towers,
                                     const ExperimentConfig& cfg, RngStream tau_rng) {
    if (!f.is_monic() || !f.separable())
        throw std::invalid_argument("delta sweep needs monic separable input");
    const FieldCtx& F = f.field();
    GroupParams gp = extract_group_params(f);
    DeltaImage predicted = predicted_delta_image(gp);
    std::uint64_t m = predicted.m;
    elem detD = det(gp.D);

    DeltaEmpirical out;
    std::set<std::pair<std::uint32_t, elem>> observed;
    for (std::uint32_t r = 1; r <= cfg.r_max; ++r) {
        const TowerCtx& T = towers.at(r);
        sweep_taus(T, cfg, tau_rng, [&](elem tau) {
            auto rep = specialize(f, T, tau);
            if (!rep.separable) return;
            ++out.usable;
            elem s = F.div(rep.det_base, F.pow(detD, r));
            std::uint32_t rm = std::uint32_t(r % m);
            if (!predicted.contains(rm, s)) out.contained = false;
            observed.insert({rm, s});
        });
    }
    std::vector<std::pair<std::uint32_t, elem>> gens(observed.begin(), observed.end());
    out.observed = delta_closure(F, m, gens);
    out.match = (out.observed == predicted);
    return out;
}

std::pair<double, double> binomial_ci(std::uint64_t k, std::uint64_t n, double alpha) {
    if (n == 0) return {0.0, 1.0};
    auto log_pmf = [n](std::uint64_t j, double p) {
        return std::lgamma(double(n + 1)) - std::lgamma(double(j + 1)) -
               std::lgamma(double(n - j + 1)) + j * std::log(p) + (n - j) * std::log1p(-p);
    };
    auto tail_ge = [&](std::uint64_t j0, double p) { // P(X >= j0)
        if (p <= 0) return j0 == 0 ? 1.0 : 0.0;
        if (p >= 1) return 1.0;
        double acc = 0;
        for (std::uint64_t j = j0; j <= n; ++j) acc += std::exp(log_pmf(j, p));
        return std::min(acc, 1.0);
    };
    auto tail_le = [&](std::uint64_t j0, double p) { // P(X <= j0)
        if (p <= 0) return 1.0;
        if (p >= 1) return j0 == n ? 1.0 : 0.0;
        double acc = 0;
        for (std::uint64_t j = 0; j <= j0; ++j) acc += std::exp(log_pmf(j, p));
        return std::min(acc, 1.0);
    };
    double lo = 0.0, hi = 1.0;
    if (k > 0) {
        double a = 0.0, b = double(k) / n;
        for (int it = 0; it < 60; ++it) {
            double mid = (a + b) / 2;
            if (tail_ge(k, mid) < alpha / 2)
                a = mid;
            else
                b = mid;
        }
        lo = (a + b) / 2;
    }
    if (k < n) {
        double a = double(k) / n, b = 1.0;
        for (int it = 0; it < 60; ++it) {
            double mid = (a + b) / 2;
            if (tail_le(k, mid) < alpha / 2)
                b = mid;
            else
                a = mid;
        }
        hi = (a + b) / 2;
    }
    return {lo, hi};
}

bool TrendReport::any_violation() const {
    for (const auto& r : rows)
        if (r.violations > 0) return true;
    return false;
}

TrendReport run_theorem_experiment(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    auto [p, e] = prime_power(cfg.q);
    FieldCtx F(p, e);
    TowerSet towers(F, cfg.r_max);

    std::optional<AdditivePoly> h_cell;
    std::optional<Poly> a0_cell;
    if (cfg.mode == ExperimentMode::theorem2) {
        a0_cell = parse_tpoly_compact(F, cfg.a0);
        if (a0_cell->is_zero()) throw std::invalid_argument("a0 cell must be nonzero");
        h_cell = cfg.content_h.empty() ? AdditivePoly::from_constants(F, F.q(), {1})
                                       : parse_additive_compact(F, cfg.content_h);
        if (!h_cell->is_monic() || !h_cell->separable() || !h_cell->constant_coeffs())
            throw std::invalid_argument("content cell must be monic separable over F_q");
    } else if (cfg.mode != ExperimentMode::theorem1) {
        throw std::invalid_argument("not a theorem experiment mode");
    }

    TrendReport report;
    report.cfg = cfg;
    for (std::uint32_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        TrendRow row;
        row.n = n;
        row.samples = cfg.trials;
        // bit 1 conditioned, 2 evidence, 4 divisor failure, 8 violation
        std::vector<std::uint8_t> state(cfg.trials, 0);
        int nt = thread_count(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt) if (nt > 1)
#endif
        for (long long trial = 0; trial < (long long)cfg.trials; ++trial) {
            RngStream rng(cfg.seed, (std::uint64_t(n) << 32) | std::uint64_t(trial));
            RngStream sample_rng = rng.fork(0);
            AdditivePoly f = sample_additive(F, n, cfg.d, sample_rng);
            if (cfg.mode == ExperimentMode::theorem2) {
                std::vector<Poly> coeffs(f.coeffs());
                coeffs[0] = *a0_cell;
                f = AdditivePoly(F, F.q(), std::move(coeffs));
            }
            if (!f.separable()) continue;
            AdditivePoly con = con_t_additive(f);
            bool conditioned =
                (cfg.mode == ExperimentMode::theorem1) ? con.adeg() == 0 : con == *h_cell;
            if (!conditioned) continue;
            Certificate cert = largeness_certificate(f, cfg.d, towers, cfg, rng.fork(1));
            std::uint8_t s = 1;
            if (cert.verdict == Verdict::EVIDENCE_GAMMA) s |= 2;
            if (!cert.no_divisor) s |= 4;
            if (cert.verdict == Verdict::VIOLATION) s |= 8;
            state[std::size_t(trial)] = s;
        }
        for (std::uint8_t s : state) {
            if (!(s & 1)) continue;
            ++row.conditioned;
            if (s & 2) ++row.evidence;
            if (s & 4) ++row.divisor_failures;
            if (s & 8) ++row.violations;
        }
        row.fraction = row.conditioned ? double(row.evidence) / double(row.conditioned) : 0.0;
        auto ci = binomial_ci(row.evidence, row.conditioned);
        row.ci_lo = ci.first;
        row.ci_hi = ci.second;
        row.divisor_failure_fraction =
            row.conditioned ? double(row.divisor_failures) / double(row.conditioned) : 0.0;
        auto dci = binomial_ci(row.divisor_failures, row.conditioned);
        row.dff_ci_lo = dci.first;
        row.dff_ci_hi = dci.second;
        report.rows.push_back(row);
    }
    return report;
}

ContentReport content_distribution(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    auto [p, e] = prime_power(cfg.q);
    FieldCtx F(p, e);
    std::uint32_t n = cfg.n_min;

    ContentReport rep;
    rep.cfg = cfg;
    rep.n = n;
    double qd = std::pow(double(cfg.q), double(cfg.d));
    rep.constant_C = (1.0 - 1.0 / qd) / (1.0 - 1.0 / (qd * double(cfg.q)));

    std::uint64_t per = 1;
    for (std::uint32_t i = 0; i <= cfg.d; ++i) per *= cfg.q;
    unsigned __int128 space = 1;
    bool small = true;
    for (std::uint32_t i = 0; i < n && small; ++i) {
        space *= per;
        if (space > cfg.exhaustive_limit) small = false;
    }
    rep.exhaustive = small;
    rep.total = rep.exhaustive ? std::uint64_t(space) : cfg.trials;

    using Key = std::pair<std::vector<elem>, std::vector<elem>>;
    std::map<Key, std::uint64_t> counts;
    std::uint64_t separable = 0;

    auto decode_tuple = [&](std::uint64_t code) {
        std::vector<Poly> a(n + 1);
        for (std::uint32_t i = 0; i < n; ++i) {
            std::vector<elem> c(cfg.d + 1);
            std::uint64_t pc = code % per;
            code /= per;
            for (std::uint32_t j = 0; j <= cfg.d; ++j) {
                c[j] = elem(pc % cfg.q);
                pc /= cfg.q;
            }
            a[i] = Poly(F, std::move(c));
        }
        a[n] = Poly::one(F);
        return AdditivePoly(F, F.q(), std::move(a));
    };

    int nt = thread_count(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (nt > 1)
#endif
    {
        std::map<Key, std::uint64_t> local;
        std::uint64_t local_sep = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long i = 0; i < (long long)rep.total; ++i) {
            AdditivePoly f(F, F.q(), {});
            if (rep.exhaustive) {
                f = decode_tuple(std::uint64_t(i));
            } else {
                RngStream rng(cfg.seed, std::uint64_t(i));
                f = sample_additive(F, n, cfg.d, rng);
            }
            if (!f.separable()) continue;
            ++local_sep;
            AdditivePoly h = con_t_additive(f);
            local[{to_associated(h).coeffs(), f.coeff(0).coeffs()}] += 1;
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            separable += local_sep;
            for (auto& [k, v] : local) counts[k] += v;
        }
    }
    rep.separable = separable;

    double qd1 = std::pow(double(cfg.q), double(cfg.d) + 1.0);
    std::map<std::uint32_t, std::uint64_t> eta_counts;
    for (auto& [key, cnt] : counts) {
        ContentCell cell;
        cell.h_assoc = key.first;
        cell.a0 = key.second;
        cell.count = cnt;
        std::uint32_t eta = std::uint32_t(cell.h_assoc.size() - 1);
        eta_counts[eta] += cnt;
        if (eta == n) {
            cell.degenerate = true;
        } else {
            cell.predicted = rep.constant_C / std::pow(qd1, double(eta) + 1.0);
            rep.max_abs_deviation = std::max(
                rep.max_abs_deviation, std::abs(double(cnt) / double(rep.total) - cell.predicted));
        }
        rep.cells.push_back(std::move(cell));
    }
    for (auto& [eta, cnt] : eta_counts) {
        double nh =
            eta == 0 ? 1.0 : (double(cfg.q) - 1.0) * std::pow(double(cfg.q), double(eta) - 1.0);
        ContentReport::EtaRow row;
        row.eta = eta;
        row.count = cnt;
        row.predicted = eta == n ? -1.0 : nh * rep.constant_C / std::pow(qd1, double(eta));
        rep.eta_rows.push_back(row);
    }
    return rep;
}

bool DeltaReport::any_violation() const {
    for (const auto& r : rows)
        if (r.contained != r.separable) return true;
    return false;
}

DeltaReport run_delta_experiment(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    auto [p, e] = prime_power(cfg.q);
    FieldCtx F(p, e);
    TowerSet towers(F, cfg.r_max);

    DeltaReport report;
    report.cfg = cfg;
    for (std::uint32_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        DeltaRow row;
        row.n = n;
        row.samples = cfg.trials;
        std::vector<std::uint8_t> state(cfg.trials, 0);
        int nt = thread_count(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt) if (nt > 1)
#endif
        for (long long trial = 0; trial < (long long)cfg.trials; ++trial) {
            RngStream rng(cfg.seed, (std::uint64_t(n) << 32) | std::uint64_t(trial));
            RngStream sample_rng = rng.fork(0);
            AdditivePoly f = sample_additive(F, n, cfg.d, sample_rng);
            if (!f.separable()) continue;
            auto res = delta_image_empirical(f, towers, cfg, rng.fork(1));
            std::uint8_t s = 1;
            if (res.match) s |= 2;
            if (res.contained) s |= 4;
            state[std::size_t(trial)] = s;
        }
        for (std::uint8_t s : state) {
            if (!(s & 1)) continue;
            ++row.separable;
            if (s & 2) ++row.matched;
            if (s & 4) ++row.contained;
        }
        report.rows.push_back(row);
    }
    return report;
}

std::vector<std::uint64_t> norm_surjectivity_check(const Poly& u, const TowerCtx& tower,
                                                   int threads) {
    if (!u.is_monic() || u.degree() < 1)
        throw std::invalid_argument("u must be monic and nonconstant");
    {
        auto fs = factorize(u, 1);
        std::uint32_t g = 0;
        for (auto& pf : fs) g = std::gcd(g, pf.multiplicity);
        if (g > 1) throw std::invalid_argument("u must not be a proper power");
    }
    const FieldCtx& T = tower.top();
    const FieldCtx& B = tower.base();
    std::vector<elem> embedded(u.coeffs().size());
    for (std::size_t i = 0; i < embedded.size(); ++i) embedded[i] = tower.embed(u.coeff(i));

    std::vector<std::uint64_t> counts(B.q(), 0);
    int nt = thread_count(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (nt > 1)
#endif
    {
        std::vector<std::uint64_t> local(B.q(), 0);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long code = 0; code < (long long)T.q(); ++code) {
            elem tau = elem(code);
            if (tower.degree_over_base(tau) != tower.r()) continue;
            elem v = embedded.back();
            for (std::size_t i = embedded.size() - 1; i-- > 0;)
                v = T.add(T.mul(v, tau), embedded[i]);
            if (v == 0) continue;
            ++local[tower.norm(v)];
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (std::size_t b = 0; b < local.size(); ++b) counts[b] += local[b];
    }
    return counts;
}

std::optional<elem> spec_fact_search(const std::vector<Poly>& coeffs,
                                     const std::vector<std::uint32_t>& partition) {
    if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient");
    const FieldCtx& F = coeffs.front().field();
    std::uint32_t n = std::uint32_t(coeffs.size());
    std::uint32_t sum = 0;
    for (auto x : partition) {
        if (x == 0) throw std::invalid_argument("partition parts must be positive");
        sum += x;
    }
    if (sum != n) throw std::invalid_argument("partition must sum to the degree");
    std::vector<std::uint32_t> want(partition);
    std::sort(want.begin(), want.end());

    for (std::uint64_t rank = 0; rank < F.q(); ++rank) {
        elem tau = F.elem_at_rank(rank);
        std::vector<elem> c(n + 1);
        for (std::uint32_t i = 0; i < n; ++i) c[i] = coeffs[i](tau);
        c[n] = 1;
        Poly ft(F, std::move(c));
        // characteristic polynomials of invertible elements carry a nonzero
        // constant term, so X may not appear among the factors
        if (ft.coeff(0) == 0) continue;
        auto type = factorization_type(ft, 0);
        bool ok = type.size() == want.size();
        if (ok) {
            for (std::size_t i = 0; i < type.size(); ++i) {
                if (type[i].second != 1 || type[i].first != want[i]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return tau;
    }
    return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest,
                                                                std::uint32_t maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SpecFactReport run_specfact_experiment(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    auto [p, e] = prime_power(cfg.q);
    FieldCtx F(p, e);
    std::uint32_t n = cfg.n_min;
    auto parts = partitions_of(n);

    SpecFactReport rep;
    rep.cfg = cfg;
    rep.n = n;

    std::uint64_t per = 1;
    for (std::uint32_t i = 0; i <= cfg.d; ++i) per *= cfg.q;
    unsigned __int128 space = 1;
    bool small = true;
    for (std::uint32_t i = 0; i < n && small; ++i) {
        space *= per;
        if (space > cfg.exhaustive_limit) small = false;
    }
    rep.exhaustive = small;
    rep.total = rep.exhaustive ? std::uint64_t(space) : cfg.trials;

    auto decode_tuple = [&](std::uint64_t code) {
        std::vector<Poly> a(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            std::vector<elem> c(cfg.d + 1);
            std::uint64_t pc = code % per;
            code /= per;
            for (std::uint32_t j = 0; j <= cfg.d; ++j) {
                c[j] = elem(pc % cfg.q);
                pc /= cfg.q;
            }
            a[i] = Poly(F, std::move(c));
        }
        return a;
    };

    std::uint64_t admit = 0;
    std::vector<std::uint64_t> part_failures(parts.size(), 0);
    int nt = thread_count(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt) if (nt > 1)
#endif
    {
        std::uint64_t local_admit = 0;
        std::vector<std::uint64_t> local_failures(parts.size(), 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
        for (long long i = 0; i < (long long)rep.total; ++i) {
            std::vector<Poly> coeffs;
            if (rep.exhaustive) {
                coeffs = decode_tuple(std::uint64_t(i));
            } else {
                RngStream rng(cfg.seed, std::uint64_t(i));
                coeffs.resize(n);
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::vector<elem> c(cfg.d + 1);
                    for (auto& x : c) x = elem(rng.below(F.q()));
                    coeffs[j] = Poly(F, std::move(c));
                }
            }
            bool all = true;
            for (std::size_t pi = 0; pi < parts.size(); ++pi) {
                if (!spec_fact_search(coeffs, parts[pi]).has_value()) {
                    all = false;
                    ++local_failures[pi];
                }
            }
            if (all) ++local_admit;
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            admit += local_admit;
            for (std::size_t pi = 0; pi < parts.size(); ++pi)
                part_failures[pi] += local_failures[pi];
        }
    }
    rep.admit_all = admit;
    rep.fraction = rep.total ? double(admit) / double(rep.total) : 0.0;
    rep.a_constant = double(cfg.q) * (1.0 - rep.fraction);
    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        rep.partition_failures.push_back({parts[pi], part_failures[pi]});
    return rep;
}

} // namespace addgal

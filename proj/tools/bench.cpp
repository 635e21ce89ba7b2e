// Serial vs OpenMP timing for the three data-parallel kernels: the
// trial loop of the theorem experiment, the norm-witness sweep, and the
// divisor-search candidate loop. The parallel runs must reproduce the
// serial results bit for bit; this binary checks that too.

#include <chrono>
#include <cstdio>

#include "addgal/io.hpp"

using namespace addgal;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class F>
double timed(F&& fn) {
    double t0 = now();
    fn();
    return now() - t0;
}

} // namespace

int main() {
    std::printf("%-34s %10s %10s %8s %s\n", "kernel", "serial[s]", "parallel[s]", "speedup",
                "match");

    {
        ExperimentConfig cfg;
        cfg.q = 2;
        cfg.d = 2;
        cfg.n_min = 6;
        cfg.n_max = 6;
        cfg.trials = 400;
        cfg.r_max = 3;
        cfg.seed = 1;
        cfg.mode = ExperimentMode::theorem1;
        TrendReport a, b;
        double ts = timed([&] { a = run_theorem_experiment(cfg, 1); });
        double tp = timed([&] { b = run_theorem_experiment(cfg, 0); });
        bool ok = trend_to_csv(a) == trend_to_csv(b);
        std::printf("%-34s %10.3f %10.3f %8.2f %s\n", "certificates (q=2,d=2,n=6,400x)", ts, tp,
                    ts / tp, ok ? "yes" : "NO");
    }

    {
        FieldCtx F5(5, 1);
        TowerCtx tower(F5, 7);
        Poly u(F5, {1, 1});
        std::vector<std::uint64_t> a, b;
        double ts = timed([&] { a = norm_surjectivity_check(u, tower, 1); });
        double tp = timed([&] { b = norm_surjectivity_check(u, tower, 0); });
        std::printf("%-34s %10.3f %10.3f %8.2f %s\n", "norm sweep (q=5,r=7)", ts, tp, ts / tp,
                    a == b ? "yes" : "NO");
    }

    {
        FieldCtx F2(2, 1);
        RngStream rng(9, 0);
        std::vector<Poly> coeffs(9);
        for (int i = 0; i < 8; ++i) {
            std::vector<elem> c{elem(rng.below(2)), elem(rng.below(2)), elem(rng.below(2))};
            coeffs[std::size_t(i)] = Poly(F2, std::move(c));
        }
        while (coeffs[0].is_zero()) coeffs[0] = Poly(F2, {1});
        coeffs[8] = Poly::one(F2);
        AdditivePoly f(F2, 2, std::move(coeffs));
        std::vector<AdditivePoly> a, b;
        double ts = timed([&] { a = find_additive_divisors(f, 4, 1); });
        double tp = timed([&] { b = find_additive_divisors(f, 4, 0); });
        std::printf("%-34s %10.3f %10.3f %8.2f %s\n", "divisor search (q=2,d=4,n=8)", ts, tp,
                    ts / tp, a == b ? "yes" : "NO");
    }
    return 0;
}

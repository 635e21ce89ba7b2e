#ifndef ADDGAL_EXPERIMENTS_HPP
#define ADDGAL_EXPERIMENTS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addgal/group.hpp"
#include "addgal/rng.hpp"

namespace addgal {

enum class ExperimentMode { theorem1, theorem2, content, delta, specfact };

// Everything a run depends on; reports are a pure function of this.
struct ExperimentConfig {
    std::uint64_t q = 2;
    std::uint32_t d = 1;
    std::uint32_t n_min = 3;
    std::uint32_t n_max = 3;
    std::uint64_t trials = 0;
    std::uint32_t r_max = 1;
    std::uint64_t seed = 0;
    ExperimentMode mode = ExperimentMode::theorem1;
    std::string content_h; // compact additive form; theorem2 conditioning cell
    std::string a0;        // compact t-polynomial; theorem2 conditioning cell
    std::uint64_t tau_budget = 4096;          // sampled tau per degree above the limit
    std::uint64_t tau_exhaustive_limit = 65536;
    std::uint64_t exhaustive_limit = 16384;   // tuple spaces at most this size are enumerated
};

void validate(const ExperimentConfig& cfg); // throws std::invalid_argument

// Towers F_q in F_{q^r} for r = 1..r_max, built once and shared.
class TowerSet {
public:
    TowerSet(const FieldCtx& base, std::uint32_t r_max);
    const TowerCtx& at(std::uint32_t r) const { return *towers_.at(r - 1); }
    std::uint32_t r_max() const { return std::uint32_t(towers_.size()); }
    const FieldCtx& base() const { return base_; }

private:
    const FieldCtx& base_;
    std::vector<std::unique_ptr<TowerCtx>> towers_;
};

// Monic f = X^{q^n} + sum a_i X^{q^i} with a_0..a_{n-1} i.i.d. uniform over
// the q^{d+1} polynomials of t-degree <= d.
AdditivePoly sample_additive(const FieldCtx& F, std::uint32_t n, std::uint32_t d, RngStream& rng);

enum class Verdict { EVIDENCE_GAMMA, INCONCLUSIVE, VIOLATION };
const char* verdict_name(Verdict v);

// One-sided largeness evidence assembled from specialization data. The
// upper-bound bits audit proven containments and may never fail; evidence
// bits may legitimately stay false at small parameters.
struct Certificate {
    bool no_divisor = true;        // additive-divisor search empty beyond the content
    bool divisor_complete = true;  // the F_q search covers closure divisors
    bool irreducible_found = false;
    bool type_n11_found = false;
    bool delta_match = false;
    bool upper_bound_ok = true;    // charpoly membership, exact division, delta containment
    std::uint32_t specializations = 0; // separable specializations inspected
    Verdict verdict = Verdict::INCONCLUSIVE;
};

Certificate largeness_certificate(const AdditivePoly& f, std::uint32_t d, const TowerSet& towers,
                                  const ExperimentConfig& cfg, RngStream tau_rng);

// Empirical delta image over all specializations of degree <= r_max.
struct DeltaEmpirical {
    DeltaImage observed;
    bool match = false;     // equals the predicted image
    bool contained = true;  // every observed pair lies in the predicted image
    std::uint32_t usable = 0;
};

DeltaEmpirical delta_image_empirical(const AdditivePoly& f, const TowerSet& towers,
                                     const ExperimentConfig& cfg, RngStream tau_rng);

// Exact two-sided 95% binomial confidence interval (Clopper-Pearson).
std::pair<double, double> binomial_ci(std::uint64_t k, std::uint64_t n, double alpha = 0.05);

struct TrendRow {
    std::uint32_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t conditioned = 0;
    std::uint64_t evidence = 0;
    std::uint64_t divisor_failures = 0;
    std::uint64_t violations = 0;
    double fraction = 0, ci_lo = 0, ci_hi = 0;
    double divisor_failure_fraction = 0, dff_ci_lo = 0, dff_ci_hi = 0;
};

struct TrendReport {
    ExperimentConfig cfg;
    std::vector<TrendRow> rows;
    bool any_violation() const;
};

TrendReport run_theorem_experiment(const ExperimentConfig& cfg, int threads = 1);

struct ContentCell {
    std::vector<elem> h_assoc; // associated polynomial of the content
    std::vector<elem> a0;      // the constant-coefficient cell
    std::uint64_t count = 0;
    double predicted = 0;   // probability over the full tuple space
    bool degenerate = false; // eta = n cell, outside the prediction's range
};

struct ContentReport {
    ExperimentConfig cfg;
    std::uint32_t n = 0;
    bool exhaustive = false;
    std::uint64_t total = 0;
    std::uint64_t separable = 0;
    double constant_C = 0;
    std::vector<ContentCell> cells;
    // conditional on a_0 != 0: observed and predicted P(adeg con = eta)
    struct EtaRow {
        std::uint32_t eta;
        std::uint64_t count;
        double predicted;
    };
    std::vector<EtaRow> eta_rows;
    double max_abs_deviation = 0; // over non-degenerate cells
};

ContentReport content_distribution(const ExperimentConfig& cfg, int threads = 1);

struct DeltaRow {
    std::uint32_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t separable = 0;
    std::uint64_t matched = 0;
    std::uint64_t contained = 0;
};

struct DeltaReport {
    ExperimentConfig cfg;
    std::vector<DeltaRow> rows;
    bool any_violation() const;
};

DeltaReport run_delta_experiment(const ExperimentConfig& cfg, int threads = 1);

// Witness counts for N_{F_{q^r}/F_q}(u(tau)) = b over tau of exact degree
// r; u must be monic, nonconstant and not a proper power.
std::vector<std::uint64_t> norm_surjectivity_check(const Poly& u, const TowerCtx& tower,
                                                   int threads = 1);

// Smallest tau in F_q (canonical order) whose specialization is squarefree
// with the exact factorization degrees given by the partition.
std::optional<elem> spec_fact_search(const std::vector<Poly>& coeffs,
                                     const std::vector<std::uint32_t>& partition);

std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t n);

struct SpecFactReport {
    ExperimentConfig cfg;
    std::uint32_t n = 0;
    bool exhaustive = false;
    std::uint64_t total = 0;
    std::uint64_t admit_all = 0;
    double fraction = 0;
    double a_constant = 0; // q (1 - fraction): fraction >= 1 - A/q
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> partition_failures;
};

SpecFactReport run_specfact_experiment(const ExperimentConfig& cfg, int threads = 1);

} // namespace addgal

#endif

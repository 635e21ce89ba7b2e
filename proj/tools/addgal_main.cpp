// Command-line front end: analyze single polynomials, run certificates,
// reproduce counting claims, and drive the Monte Carlo experiments.
//
// Exit codes: 0 clean, 1 proven-containment violation (a bug, not bad
// input), 2 configuration or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "addgal/io.hpp"

using namespace addgal;

namespace {

struct FieldArgs {
    std::uint64_t q = 2;
};

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0;
    for (std::uint64_t v = q; v > 1; v /= p) {
        if (v % p != 0) throw std::invalid_argument("q must be a prime power");
        ++e;
    }
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    return {std::uint32_t(p), e};
}

AdditivePoly load_additive(const FieldCtx& F, const std::string& text, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open '" + file + "'");
        json j;
        in >> j;
        return additive_from_json(F, j);
    }
    if (text.find('{') != std::string::npos) return additive_from_json(F, json::parse(text));
    return parse_additive_compact(F, text);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << std::endl;
    else
        write_text(out, j.dump(2) + "\n");
}

int run_analyze(std::uint64_t q, const std::string& ftext, const std::string& ffile,
                std::uint32_t d_override, std::uint64_t seed, const std::string& out) {
    auto [p, e] = split_prime_power(q);
    FieldCtx F(p, e);
    AdditivePoly f = load_additive(F, ftext, ffile);
    if (!f.is_monic()) throw std::invalid_argument("input must be monic");
    if (!f.separable()) throw std::invalid_argument("input is not separable (a_0 = 0)");

    std::uint32_t d = d_override ? d_override : std::uint32_t(std::max(f.deg_t(), 0));
    GroupParams gp = extract_group_params(f, seed);

    json dossier;
    dossier["field"] = field_to_json(F);
    dossier["f"] = additive_to_json(f);
    dossier["con_t"] = additive_compact(gp.h);
    dossier["params"] = group_params_to_json(gp);
    try {
        dossier["group_order"] = group_order(gp);
    } catch (const std::overflow_error&) {
        dossier["group_order"] = nullptr; // beyond 64 bits at this size
    }
    dossier["predicted_delta"] = delta_to_json(F, predicted_delta_image(gp));

    json divs = json::array();
    for (const auto& g : find_additive_divisors(f, d)) divs.push_back(additive_compact(g));
    dossier["divisors"] = divs;
    dossier["divisor_search_complete"] = divisor_search_complete(f, d);

    auto [k, g0] = charpoly_divisor_at_zero(f);
    dossier["charpoly_divisor_at_zero"] = json{{"k", k}, {"g", poly_to_json(g0)}};
    emit(dossier, out);
    return 0;
}

int run_certify(std::uint64_t q, const std::string& ftext, const std::string& ffile,
                std::uint32_t r_max, std::uint64_t seed, const std::string& out) {
    auto [p, e] = split_prime_power(q);
    FieldCtx F(p, e);
    AdditivePoly f = load_additive(F, ftext, ffile);
    if (!f.is_monic()) throw std::invalid_argument("input must be monic");
    if (!f.separable()) throw std::invalid_argument("input is not separable (a_0 = 0)");

    ExperimentConfig cfg;
    cfg.q = q;
    cfg.d = std::uint32_t(std::max(f.deg_t(), 0));
    cfg.r_max = r_max;
    cfg.seed = seed;
    TowerSet towers(F, r_max);
    Certificate cert = largeness_certificate(f, cfg.d, towers, cfg, RngStream(seed, 1));
    json j = certificate_to_json(cert);
    j["f"] = additive_to_json(f);
    j["r_max"] = r_max;
    emit(j, out);
    return cert.verdict == Verdict::VIOLATION ? 1 : 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out,
                       const std::string& format, int threads, std::int64_t trials_override,
                       std::int64_t seed_override, std::int64_t rmax_override) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
    json jcfg;
    try {
        in >> jcfg;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("config parse error: ") + ex.what());
    }
    if (trials_override >= 0) jcfg["trials"] = trials_override;
    if (seed_override >= 0) jcfg["seed"] = seed_override;
    if (rmax_override >= 0) jcfg["r_max"] = rmax_override;
    ExperimentConfig cfg = config_from_json(jcfg);

    std::string base = out.empty() ? "report" : out;
    bool want_csv = format != "json";
    bool want_json = format != "csv";
    bool violation = false;
    json j;
    std::string csv;
    switch (cfg.mode) {
        case ExperimentMode::theorem1:
        case ExperimentMode::theorem2: {
            TrendReport rep = run_theorem_experiment(cfg, threads);
            j = trend_to_json(rep);
            csv = trend_to_csv(rep);
            violation = rep.any_violation();
            break;
        }
        case ExperimentMode::content: {
            ContentReport rep = content_distribution(cfg, threads);
            j = content_to_json(rep);
            csv = content_to_csv(rep);
            break;
        }
        case ExperimentMode::delta: {
            DeltaReport rep = run_delta_experiment(cfg, threads);
            j = delta_report_to_json(rep);
            csv = delta_report_to_csv(rep);
            violation = rep.any_violation();
            break;
        }
        case ExperimentMode::specfact: {
            SpecFactReport rep = run_specfact_experiment(cfg, threads);
            j = specfact_to_json(rep);
            csv = specfact_to_csv(rep);
            break;
        }
    }
    if (want_json) write_text(base + ".json", j.dump(2) + "\n");
    if (want_csv) write_text(base + ".csv", csv);
    std::cout << (violation ? "VIOLATION detected" : "ok") << ": reports written to " << base
              << (want_json ? ".json" : "") << (want_json && want_csv ? " / " : "")
              << (want_csv ? base + ".csv" : "") << std::endl;
    return violation ? 1 : 0;
}

int run_census_cmd(std::uint64_t q, std::uint32_t n, double c_universal, const std::string& out,
                   const std::string& format) {
    ClassBoundReport rep = maximal_class_bound(q, n, c_universal);
    if (format == "json") {
        emit(class_bound_to_json(rep), out);
        return 0;
    }
    std::ostringstream csv;
    csv << "q,n,b,c3_count_excluding_x,c3_count_including_x,c2_bound,c3_coset_bound,"
           "c4_c8_bound,reducible_count\n";
    for (std::size_t i = 0; i < rep.primes_b.size(); ++i) {
        std::uint32_t b = rep.primes_b[i];
        csv << q << ',' << n << ',' << b << ',' << rep.c3_identity[i] << ','
            << count_c3_charpolys(q, n, b, false) << ',' << rep.c2 << ',' << rep.c3_coset << ','
            << rep.c4_to_c8 << ',' << count_reducible_charpolys(q, n) << '\n';
    }
    if (rep.primes_b.empty()) {
        csv << q << ',' << n << ",,,," << rep.c2 << ",0," << rep.c4_to_c8 << ','
            << count_reducible_charpolys(q, n) << '\n';
    }
    if (out.empty())
        std::cout << csv.str();
    else
        write_text(out, csv.str());
    return 0;
}

int run_delta_cmd(std::uint64_t q, const std::string& ftext, const std::string& ffile,
                  std::uint32_t r_max, std::uint64_t seed, const std::string& out) {
    auto [p, e] = split_prime_power(q);
    FieldCtx F(p, e);
    AdditivePoly f = load_additive(F, ftext, ffile);
    if (!f.is_monic() || !f.separable())
        throw std::invalid_argument("input must be monic and separable");
    ExperimentConfig cfg;
    cfg.q = q;
    cfg.d = std::uint32_t(std::max(f.deg_t(), 0));
    cfg.r_max = r_max;
    TowerSet towers(F, r_max);
    auto res = delta_image_empirical(f, towers, cfg, RngStream(seed, 3));
    GroupParams gp = extract_group_params(f, seed);
    json j{{"f", additive_to_json(f)},
           {"r_max", r_max},
           {"observed", delta_to_json(F, res.observed)},
           {"predicted", delta_to_json(F, predicted_delta_image(gp))},
           {"match", res.match},
           {"contained", res.contained},
           {"usable_specializations", res.usable}};
    emit(j, out);
    return res.contained ? 0 : 1;
}

int run_specfact_cmd(std::uint64_t q, const std::string& coeffs_text,
                     const std::string& partition_text, const std::string& out) {
    auto [p, e] = split_prime_power(q);
    FieldCtx F(p, e);
    // trailing zero coefficients are significant here: the coefficient
    // count sets the degree of the monic polynomial
    std::vector<Poly> coeffs;
    {
        std::string cur;
        for (char ch : coeffs_text + ";") {
            if (ch == ';') {
                coeffs.push_back(parse_tpoly_compact(F, cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
    }
    std::vector<std::uint32_t> partition;
    for (const auto& tok : json::parse("[" + partition_text + "]"))
        partition.push_back(tok.get<std::uint32_t>());
    auto tau = spec_fact_search(coeffs, partition);
    json j{{"q", q}, {"partition", partition}};
    j["tau"] = tau ? json(F.digits(*tau)) : json(nullptr);
    emit(j, out);
    return 0;
}

int run_norms_cmd(std::uint64_t q, const std::string& u_text, std::uint32_t r_min,
                  std::uint32_t r_max, int threads, const std::string& out,
                  const std::string& format) {
    auto [p, e] = split_prime_power(q);
    FieldCtx F(p, e);
    Poly u = parse_tpoly_compact(F, u_text);
    std::ostringstream csv;
    csv << "q,r,u,b,count\n";
    json rows = json::array();
    for (std::uint32_t r = r_min; r <= r_max; ++r) {
        TowerCtx tower(F, r);
        auto counts = norm_surjectivity_check(u, tower, threads);
        json jc = json::array();
        for (elem b = 1; b < F.q(); ++b) {
            csv << q << ',' << r << ',' << u_text << ',' << b << ',' << counts[b] << '\n';
            jc.push_back(json{{"b", elem_to_json(F, b)}, {"count", counts[b]}});
        }
        rows.push_back(json{{"r", r}, {"counts", jc}});
    }
    if (format == "json") {
        emit(json{{"q", q}, {"u", u_text}, {"rows", rows}}, out);
    } else if (out.empty()) {
        std::cout << csv.str();
    } else {
        write_text(out, csv.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive-polynomial Galois toolkit"};
    app.require_subcommand(1);

    std::uint64_t q = 2, seed = 0;
    std::uint32_t r_max = 3, r_min = 1, n = 2, d_override = 0;
    double c_universal = 100.0;
    int threads = 1;
    std::string ftext, ffile, out, format = "csv", config_path, coeffs_text, partition_text,
                u_text;

    auto add_field_opts = [&](CLI::App* cmd, bool needs_f) {
        cmd->add_option("--q", q, "field size (prime power)")->required();
        if (needs_f) {
            cmd->add_option("--f", ftext, "polynomial, compact 'a0;a1;...;an' or inline JSON");
            cmd->add_option("--json", ffile, "path to a polynomial JSON file");
        }
        cmd->add_option("--out", out, "output path (default: stdout)");
    };

    auto* analyze = app.add_subcommand("analyze", "one-shot dossier for a polynomial");
    add_field_opts(analyze, true);
    analyze->add_option("--d", d_override, "height bound for the divisor search");
    analyze->add_option("--seed", seed, "factorization seed");

    auto* certify = app.add_subcommand("certify", "largeness certificate for a polynomial");
    add_field_opts(certify, true);
    certify->add_option("--rmax", r_max, "max specialization degree");
    certify->add_option("--seed", seed, "rng seed");

    std::int64_t trials_override = -1, seed_override = -1, rmax_override = -1;
    auto* experiment = app.add_subcommand("experiment", "run a configured experiment");
    experiment->add_option("--config", config_path, "JSON config path")->required();
    experiment->add_option("--out", out, "report path prefix (default 'report')");
    experiment->add_option("--format", format, "csv, json, or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    experiment->add_option("--threads", threads, "0 = all hardware threads");
    experiment->add_option("--trials", trials_override, "override the config's trial count");
    experiment->add_option("--seed", seed_override, "override the config's seed");
    experiment->add_option("--rmax", rmax_override, "override the config's r_max");

    auto* census = app.add_subcommand("census", "characteristic-polynomial counts and bounds");
    census->add_option("--q", q, "field size (prime power)")->required();
    census->add_option("--n", n, "dimension")->required();
    census->add_option("--C", c_universal, "universal constant for the C4-C8 bound");
    census->add_option("--out", out, "output path (default: stdout)");
    census->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* delta = app.add_subcommand("delta", "empirical vs predicted determinant image");
    add_field_opts(delta, true);
    delta->add_option("--rmax", r_max, "max specialization degree");
    delta->add_option("--seed", seed, "rng seed");

    auto* specfact = app.add_subcommand("specfact", "specialization with a factorization type");
    specfact->add_option("--q", q, "field size (prime power)")->required();
    specfact->add_option("--coeffs", coeffs_text, "a_0;...;a_{n-1} of the degree-n polynomial")
        ->required();
    specfact->add_option("--partition", partition_text, "comma-separated parts, e.g. 2,1")
        ->required();
    specfact->add_option("--out", out, "output path (default: stdout)");

    auto* norms = app.add_subcommand("norms", "norm surjectivity witness counts");
    norms->add_option("--q", q, "field size (prime power)")->required();
    norms->add_option("--u", u_text, "monic u(t), compact form")->required();
    norms->add_option("--rmin", r_min, "first degree to sweep");
    norms->add_option("--rmax", r_max, "last degree to sweep");
    norms->add_option("--threads", threads, "0 = all hardware threads");
    norms->add_option("--out", out, "output path (default: stdout)");
    norms->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(q, ftext, ffile, d_override, seed, out);
        if (app.got_subcommand(certify)) return run_certify(q, ftext, ffile, r_max, seed, out);
        if (app.got_subcommand(experiment))
            return run_experiment_cmd(config_path, out, format, threads, trials_override,
                                      seed_override, rmax_override);
        if (app.got_subcommand(census)) return run_census_cmd(q, n, c_universal, out, format);
        if (app.got_subcommand(delta)) return run_delta_cmd(q, ftext, ffile, r_max, seed, out);
        if (app.got_subcommand(specfact)) return run_specfact_cmd(q, coeffs_text, partition_text, out);
        if (app.got_subcommand(norms))
            return run_norms_cmd(q, u_text, r_min, r_max, threads, out, format);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << std::endl;
        return 2;
    } catch (const json::exception& ex) {
        std::cerr << "error: " << ex.what() << std::endl;
        return 2;
    } catch (const std::exception& ex) {
        // internal failures share the violation exit code: both mean a bug
        std::cerr << "internal error: " << ex.what() << std::endl;
        return 1;
    }
    return 2;
}

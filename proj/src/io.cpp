#include "addgal/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace addgal {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

Poly parse_tpoly_compact(const FieldCtx& F, const std::string& s) {
    std::vector<elem> c;
    for (const auto& tok : split(s, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coefficient in '" + s + "'");
        std::uint64_t v = std::stoull(tok);
        if (v >= F.q()) throw std::invalid_argument("coefficient index out of range in '" + s + "'");
        c.push_back(elem(v));
    }
    return Poly(F, std::move(c));
}

std::string tpoly_compact(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= a.degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.coeff(std::size_t(i)));
    }
    return out;
}

AdditivePoly parse_additive_compact(const FieldCtx& F, const std::string& s) {
    std::vector<Poly> coeffs;
    for (const auto& part : split(s, ';')) coeffs.push_back(parse_tpoly_compact(F, part));
    return AdditivePoly(F, F.q(), std::move(coeffs));
}

std::string additive_compact(const AdditivePoly& f) {
    std::string out;
    for (int i = 0; i <= f.adeg(); ++i) {
        if (i) out += ';';
        out += tpoly_compact(f.coeff(std::size_t(i)));
    }
    return out;
}

json field_to_json(const FieldCtx& F) {
    return json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

json elem_to_json(const FieldCtx& F, elem a) {
    if (F.e() == 1) return json(a);
    return json(F.digits(a));
}

elem elem_from_json(const FieldCtx& F, const json& j) {
    if (j.is_number()) {
        std::uint64_t v = j.get<std::uint64_t>();
        if (F.e() == 1) {
            if (v >= F.q()) throw std::invalid_argument("element out of range");
            return elem(v);
        }
        if (v >= F.q()) throw std::invalid_argument("element index out of range");
        return elem(v);
    }
    return F.from_digits(j.get<std::vector<std::uint32_t>>());
}

json poly_to_json(const Poly& a) {
    json arr = json::array();
    for (int i = 0; i <= a.degree(); ++i) arr.push_back(elem_to_json(a.field(), a.coeff(std::size_t(i))));
    return arr;
}

Poly poly_from_json(const FieldCtx& F, const json& j) {
    std::vector<elem> c;
    for (const auto& x : j) c.push_back(elem_from_json(F, x));
    return Poly(F, std::move(c));
}

json bipoly_to_json(const BiPoly& b) {
    json rows = json::array();
    for (const auto& r : b.rows()) rows.push_back(poly_to_json(r));
    return rows;
}

BiPoly bipoly_from_json(const FieldCtx& F, const json& j) {
    std::vector<Poly> rows;
    for (const auto& r : j) rows.push_back(poly_from_json(F, r));
    return BiPoly(F, std::move(rows));
}

json additive_to_json(const AdditivePoly& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.adeg(); ++i) coeffs.push_back(poly_to_json(f.coeff(std::size_t(i))));
    return json{{"q", f.qadd()}, {"coeffs", coeffs}};
}

AdditivePoly additive_from_json(const FieldCtx& F, const json& j) {
    std::uint64_t q = j.at("q").get<std::uint64_t>();
    std::vector<Poly> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(poly_from_json(F, x));
    return AdditivePoly(F, q, std::move(coeffs));
}

json matrix_to_json(const MatrixGF& m) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < m.dim(); ++j) row.push_back(elem_to_json(m.field(), m(i, j)));
        rows.push_back(row);
    }
    return json{{"n", m.dim()}, {"entries", rows}};
}

json group_params_to_json(const GroupParams& gp) {
    json j{{"n", gp.n},
           {"eta", gp.eta},
           {"h", additive_to_json(gp.h)},
           {"c", elem_to_json(gp.field(), gp.c)},
           {"k", gp.k},
           {"degenerate", gp.degenerate()}};
    if (gp.u) j["u"] = poly_to_json(*gp.u);
    return j;
}

json delta_to_json(const FieldCtx& F, const DeltaImage& d) {
    json elems = json::array();
    for (auto [r, s] : d.elems) elems.push_back(json::array({r, elem_to_json(F, s)}));
    return json{{"m", d.m}, {"elems", elems}};
}

json specialization_to_json(const TowerCtx& T, const SpecializationReport& rep) {
    json j{{"tau", json(T.top().digits(rep.tau))}, {"r", rep.r}, {"separable", rep.separable}};
    if (rep.separable) {
        // charpoly over F_q as an F_p coefficient grid
        json grid = json::array();
        for (int i = 0; i <= rep.charpoly_base.degree(); ++i)
            grid.push_back(json(T.base().digits(rep.charpoly_base.coeff(std::size_t(i)))));
        j["charpoly"] = grid;
        j["det"] = elem_to_json(T.base(), rep.det_base);
    }
    return j;
}

json certificate_to_json(const Certificate& c) {
    return json{{"no_divisor", c.no_divisor},
                {"divisor_search_complete", c.divisor_complete},
                {"irreducible_found", c.irreducible_found},
                {"type_n11_found", c.type_n11_found},
                {"delta_match", c.delta_match},
                {"upper_bound_ok", c.upper_bound_ok},
                {"specializations", c.specializations},
                {"verdict", verdict_name(c.verdict)}};
}

const char* mode_name(ExperimentMode m) {
    switch (m) {
        case ExperimentMode::theorem1: return "theorem1";
        case ExperimentMode::theorem2: return "theorem2";
        case ExperimentMode::content: return "content";
        case ExperimentMode::delta: return "delta";
        case ExperimentMode::specfact: return "specfact";
    }
    return "?";
}

ExperimentMode mode_from_name(const std::string& s) {
    if (s == "theorem1") return ExperimentMode::theorem1;
    if (s == "theorem2") return ExperimentMode::theorem2;
    if (s == "content") return ExperimentMode::content;
    if (s == "delta") return ExperimentMode::delta;
    if (s == "specfact") return ExperimentMode::specfact;
    throw std::invalid_argument("unknown experiment mode '" + s + "'");
}

json config_to_json(const ExperimentConfig& cfg) {
    json j{{"q", cfg.q},           {"d", cfg.d},
           {"n_min", cfg.n_min},   {"n_max", cfg.n_max},
           {"trials", cfg.trials}, {"r_max", cfg.r_max},
           {"seed", cfg.seed},     {"mode", mode_name(cfg.mode)},
           {"tau_budget", cfg.tau_budget},
           {"tau_exhaustive_limit", cfg.tau_exhaustive_limit},
           {"exhaustive_limit", cfg.exhaustive_limit}};
    if (!cfg.content_h.empty()) j["content_h"] = cfg.content_h;
    if (!cfg.a0.empty()) j["a0"] = cfg.a0;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    cfg.q = j.at("q").get<std::uint64_t>();
    cfg.d = j.at("d").get<std::uint32_t>();
    if (j.contains("n")) {
        cfg.n_min = cfg.n_max = j.at("n").get<std::uint32_t>();
    } else {
        cfg.n_min = j.at("n_min").get<std::uint32_t>();
        cfg.n_max = j.at("n_max").get<std::uint32_t>();
    }
    cfg.trials = j.value("trials", std::uint64_t(0));
    cfg.r_max = j.at("r_max").get<std::uint32_t>();
    cfg.seed = j.value("seed", std::uint64_t(0));
    cfg.mode = mode_from_name(j.at("mode").get<std::string>());
    cfg.content_h = j.value("content_h", std::string());
    cfg.a0 = j.value("a0", std::string());
    cfg.tau_budget = j.value("tau_budget", std::uint64_t(4096));
    cfg.tau_exhaustive_limit = j.value("tau_exhaustive_limit", std::uint64_t(65536));
    cfg.exhaustive_limit = j.value("exhaustive_limit", std::uint64_t(16384));
    validate(cfg);
    return cfg;
}

json trend_to_json(const TrendReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(json{{"n", r.n},
                            {"samples", r.samples},
                            {"conditioned", r.conditioned},
                            {"evidence", r.evidence},
                            {"fraction", r.fraction},
                            {"ci_lo", r.ci_lo},
                            {"ci_hi", r.ci_hi},
                            {"divisor_failures", r.divisor_failures},
                            {"divisor_failure_fraction", r.divisor_failure_fraction},
                            {"dff_ci_lo", r.dff_ci_lo},
                            {"dff_ci_hi", r.dff_ci_hi},
                            {"violations", r.violations}});
    }
    return json{{"config", config_to_json(rep.cfg)}, {"rows", rows}};
}

std::string trend_to_csv(const TrendReport& rep) {
    std::ostringstream out;
    out << "n,samples,conditioned,evidence,fraction,ci_lo,ci_hi,divisor_failures,"
           "divisor_failure_fraction,dff_ci_lo,dff_ci_hi,violations\n";
    for (const auto& r : rep.rows) {
        out << r.n << ',' << r.samples << ',' << r.conditioned << ',' << r.evidence << ','
            << fmt_double(r.fraction) << ',' << fmt_double(r.ci_lo) << ',' << fmt_double(r.ci_hi)
            << ',' << r.divisor_failures << ',' << fmt_double(r.divisor_failure_fraction) << ','
            << fmt_double(r.dff_ci_lo) << ',' << fmt_double(r.dff_ci_hi) << ',' << r.violations
            << '\n';
    }
    return out.str();
}

namespace {

std::string coeffs_text(const std::vector<elem>& c) {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
    }
    return out;
}

} // namespace

json content_to_json(const ContentReport& rep) {
    json cells = json::array();
    for (const auto& c : rep.cells) {
        cells.push_back(json{{"h_assoc", c.h_assoc},
                             {"a0", c.a0},
                             {"count", c.count},
                             {"predicted", c.predicted},
                             {"degenerate", c.degenerate}});
    }
    json etas = json::array();
    for (const auto& r : rep.eta_rows)
        etas.push_back(json{{"eta", r.eta}, {"count", r.count}, {"predicted", r.predicted}});
    return json{{"config", config_to_json(rep.cfg)},
                {"n", rep.n},
                {"exhaustive", rep.exhaustive},
                {"total", rep.total},
                {"separable", rep.separable},
                {"constant_C", rep.constant_C},
                {"cells", cells},
                {"eta_rows", etas},
                {"max_abs_deviation", rep.max_abs_deviation}};
}

std::string content_to_csv(const ContentReport& rep) {
    std::ostringstream out;
    out << "h_assoc,a0,count,freq,predicted,degenerate\n";
    for (const auto& c : rep.cells) {
        out << coeffs_text(c.h_assoc) << ',' << coeffs_text(c.a0) << ',' << c.count << ','
            << fmt_double(double(c.count) / double(rep.total)) << ',' << fmt_double(c.predicted)
            << ',' << (c.degenerate ? 1 : 0) << '\n';
    }
    return out.str();
}

json delta_report_to_json(const DeltaReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"n", r.n},
                            {"samples", r.samples},
                            {"separable", r.separable},
                            {"matched", r.matched},
                            {"contained", r.contained}});
    return json{{"config", config_to_json(rep.cfg)}, {"rows", rows}};
}

std::string delta_report_to_csv(const DeltaReport& rep) {
    std::ostringstream out;
    out << "n,samples,separable,matched,contained\n";
    for (const auto& r : rep.rows)
        out << r.n << ',' << r.samples << ',' << r.separable << ',' << r.matched << ','
            << r.contained << '\n';
    return out.str();
}

json specfact_to_json(const SpecFactReport& rep) {
    json fails = json::array();
    for (const auto& [part, cnt] : rep.partition_failures)
        fails.push_back(json{{"partition", part}, {"failures", cnt}});
    return json{{"config", config_to_json(rep.cfg)},
                {"n", rep.n},
                {"exhaustive", rep.exhaustive},
                {"total", rep.total},
                {"admit_all", rep.admit_all},
                {"fraction", rep.fraction},
                {"a_constant", rep.a_constant},
                {"partition_failures", fails}};
}

std::string specfact_to_csv(const SpecFactReport& rep) {
    std::ostringstream out;
    out << "n,total,exhaustive,partition,failures,fraction_admit_all,a_constant\n";
    for (const auto& [part, cnt] : rep.partition_failures) {
        out << rep.n << ',' << rep.total << ',' << (rep.exhaustive ? 1 : 0) << ',';
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i) out << '+';
            out << part[i];
        }
        out << ',' << cnt << ',' << fmt_double(rep.fraction) << ',' << fmt_double(rep.a_constant)
            << '\n';
    }
    return out.str();
}

json class_bound_to_json(const ClassBoundReport& rep) {
    return json{{"q", rep.q},
                {"n", rep.n},
                {"c2", rep.c2},
                {"primes_b", rep.primes_b},
                {"c3_coset", rep.c3_coset},
                {"c3_identity", rep.c3_identity},
                {"c4_to_c8", rep.c4_to_c8},
                {"universal_constant", rep.universal_constant},
                {"class_s", rep.class_s_note}};
}

} // namespace addgal

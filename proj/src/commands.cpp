#include <gjms6/commands.hpp>
#include <gjms6/bubble.hpp>
#include <gjms6/errors.hpp>
#include <gjms6/green_expansion.hpp>
#include <gjms6/sphere_spectral.hpp>
#include <gjms6/zonal_galerkin.hpp>

#include <cmath>
#include <fstream>
#include <regex>

namespace gjms6 {

namespace {

void require_n(const RunConfig& c, int lowest) {
    if (c.n == 6) throw UsageError("n = 6 is excluded: the factor (n-6) vanishes");
    if (c.n < lowest) throw UsageError("n must be at least " + std::to_string(lowest));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Status status_of(bool ok) { return ok ? Status::match : Status::mismatch; }

// Dense polynomials of degree d in n variables have C(n+d-1, d) coefficients.
void require_small_expansion(int n, int max_order) {
    double count = 1;
    for (int j = 1; j <= max_order; ++j) count = count * (n - 1 + j) / j;
    if (count > 2.5e5) throw UsageError("expansion too large: lower --max-order or --n");
}

} // namespace

Rational parse_rational(const std::string& s) {
    static const std::regex form(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, form)) throw UsageError("not a rational number: '" + s + "'");
    Rational q(Integer(m[1].str()), m[2].matched ? Integer(m[2].str()) : Integer(1));
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

nlohmann::json config_json(const RunConfig& c) {
    return {{"subcommand", c.subcommand}, {"n", c.n},         {"ell_max", c.ell_max},   {"eps", c.eps},
            {"rho", c.rho},               {"quad_points", c.quad_points}, {"seed", c.seed}, {"tol", c.tol},
            {"output_format", c.format},  {"output_path", c.output},      {"perturb", c.perturb}, {"k", c.k},
            {"max_order", c.max_order},   {"K", c.k_map},     {"scan", c.scan},         {"sweep_csv", c.sweep_csv},
            {"f", c.f_spec}};
}

Report cmd_spectrum(const RunConfig& c) {
    require_n(c, 7);
    const int ell_max = c.ell_max < 0 ? 3 : c.ell_max;
    const int n = c.n;
    Report r;
    const auto s = sphere_spectrum(n, ell_max);
    const auto op = sphere_operator();
    const Rational a = op.a(n), b = op.b(n), k = op.c(n);
    for (int ell = 0; ell <= ell_max; ++ell) {
        // P = mu^3 - a mu^2 + b mu - c on spherical harmonics of degree ell.
        const Rational mu = Rational(ell) * (ell + n - 1);
        const Rational cubic = mu * mu * mu - a * mu * mu + b * mu - k;
        r.add_exact("spectrum.lambda." + std::to_string(ell), cubic, s.eigenvalues[static_cast<std::size_t>(ell)],
                    Provenance::derived);
    }
    const Rational q = 2 * s.eigenvalues[0] / (n - 6);
    r.add_exact("spectrum.Q", q_sphere()(n), q, Provenance::paper);
    r.add_close("spectrum.Y6", y6_sphere(n), sobolev_quotient(n), 1e-8, Provenance::derived);
    return r;
}

Report cmd_factorization(const RunConfig& c) {
    Report r;
    const Rational perturb = parse_rational(c.perturb);
    auto id_of = [](std::string name) {
        std::string out;
        for (char ch : name) {
            if (std::isalnum(static_cast<unsigned char>(ch))) out += static_cast<char>(std::tolower(ch));
            else if (ch == '=') out += '_';
        }
        return out;
    };
    for (const auto& cc : verify_factorization(DimRational(perturb)).coefficients) {
        r.add("factorization." + id_of(cc.name), cc.expected.str(), cc.computed.str(), status_of(cc.match), Provenance::paper);
    }
    if (c.k != 0) {
        if (c.k != 3) throw UsageError("--k: only k = 3 belongs to the sixth-order operator");
        for (const auto& cc : verify_general_product(c.k).coefficients) {
            r.add("general_product." + id_of(cc.name), cc.expected.str(), cc.computed.str(), status_of(cc.match),
                  Provenance::derived);
        }
    }
    return r;
}

Report cmd_green(const RunConfig& c) {
    require_n(c, 7);
    const int n = c.n;
    Report r;
    const auto w = random_weyl(n, c.seed);
    const auto jet = random_schouten_jet(w, c.seed);
    std::string why;
    r.add("weyl.invariants", "true", yes_no(check_weyl_invariants(w, &why)), status_of(why.empty()), Provenance::trivial);
    const auto src = build_source(n, w, jet);  // throws if a bracket is not harmonic
    r.add("lemma2.1.brackets_harmonic", "true", "true", Status::match, Provenance::paper);

    if (n >= 11) {
        const auto res = solve_psi4(n, src);
        const auto ref = psi4_reference_coefficients();
        const auto layerwise = psi4_solver_coefficients();
        for (std::size_t i = 0; i < 3; ++i) {
            r.add_exact("prop2.1e.bracket" + std::to_string(i + 1), ref[i](n), -res.coefficients[i], Provenance::paper);
        }
        r.add("prop2.1e.global_sign", "1", "-1", Status::documented_discrepancy, Provenance::paper);
        const Rational tail = -res.coefficients[3];
        r.add("prop2.1e.tail", to_string(ref[3](n)), to_string(tail),
              tail == ref[3](n) ? Status::match : Status::documented_discrepancy, Provenance::paper);
        r.add_exact("prop2.1e.tail.layerwise", layerwise[3](n), res.coefficients[3], Provenance::derived);
        r.add_exact("prop2.1e.tail.factor", Rational((n - 10) * (n - 8)), ref[3](n) / tail, Provenance::derived);
        LogRadialSeries psi(n), f(n);
        psi.add(4, 0, res.psi4);
        f.add(4, 0, src.f4);
        r.add("psi4.residual", "0", (apply_triple_log(psi) + f).is_zero() ? "0" : "nonzero",
              status_of((apply_triple_log(psi) + f).is_zero()), Provenance::derived);
        return r;
    }
    if (n == 10) {
        const auto lc = log_coefficient_n10(w, jet);
        const Rational printed = make_rational(1, 17280);
        r.add("prop2.1d.log_coefficient.raw", to_string(printed), to_string(lc.raw_over_norm),
              lc.raw_over_norm == printed ? Status::match : Status::documented_discrepancy, Provenance::paper);
        r.add("prop2.1d.log_coefficient.cn", to_string(printed), format_double(lc.cn_over_norm),
              Status::documented_discrepancy, Provenance::paper);
        r.add_exact("prop2.1d.f4_h0", source_coefficients()[3](n), lc.f4_h0, Provenance::derived);
        r.add_exact("prop2.1d.divisor", b_combination(4, 2)(n), lc.divisor, Provenance::derived);
        r.add_exact("prop2.1d.raw_identity", -lc.f4_h0 / lc.divisor, lc.raw_over_norm, Provenance::derived);
        r.add("prop2.1d.positive", "true", yes_no(sgn(lc.raw) > 0), status_of(sgn(lc.raw) > 0), Provenance::paper);
        const auto ex = expand(n, {{4, src.f4}}, zero_map(n), 4);
        const int onset = ex.log_coefficients.empty() ? -1 : ex.log_coefficients.begin()->first.first;
        r.add("prop2.1b.log_onset", std::to_string(n - 4), std::to_string(onset),
              onset == n - 4 ? Status::match : Status::documented_discrepancy, Provenance::paper);
        return r;
    }
    const auto ex = expand(n, {{4, src.f4}}, zero_map(n), 4);
    r.add("prop2.1c.residual", "0", ex.residual_clear() ? "0" : "nonzero", status_of(ex.residual_clear()),
          Provenance::derived);
    int lowest = 4;
    for (const auto& [key, poly] : ex.psi_terms.terms()) lowest = std::min(lowest, key.first);
    // r^{6-n} psi_k is O(r) once k + 6 - n >= 1.
    r.add("prop2.1c.correction_order", ">= 1", std::to_string(lowest + 6 - n), status_of(lowest + 6 - n >= 1),
          Provenance::paper);
    if (n % 2 == 1) {
        r.add("prop2.1a.log_terms", "0", std::to_string(ex.log_coefficients.size()), status_of(ex.log_coefficients.empty()),
              Provenance::paper);
    } else {
        const int onset = ex.log_coefficients.empty() ? -1 : ex.log_coefficients.begin()->first.first;
        r.add("prop2.1b.log_onset", std::to_string(n - 4), std::to_string(onset), status_of(onset == n - 4),
              Provenance::paper);
    }
    return r;
}

Report cmd_expand(const RunConfig& c) {
    require_n(c, 7);
    if (c.max_order < 0) throw UsageError("--max-order must be non-negative");
    if (c.k_map != "zero" && c.k_map != "r2") throw UsageError("--K must be 'zero' or 'r2'");
    require_small_expansion(c.n, c.max_order);
    const int n = c.n;
    const auto w = random_weyl(n, c.seed);
    const auto src = build_source(n, w, random_schouten_jet(w, c.seed));
    const DegreeRaisingMap k =
        c.k_map == "zero" ? zero_map(n) : DegreeRaisingMap([](const HomogeneousPoly& p) { return mul_r2(p); });
    std::map<int, HomogeneousPoly> source;
    if (c.max_order >= 4) source.emplace(4, src.f4);
    const auto ex = expand(n, source, k, c.max_order);
    Report r;
    r.add("expand.residual", "0", ex.residual_clear() ? "0" : "nonzero", status_of(ex.residual_clear()), Provenance::derived);
    const int top = ex.psi_terms.max_log_power();
    r.add("expand.max_log_power", "<= 4", std::to_string(top), status_of(top <= 4), Provenance::paper);
    if (n % 2 == 1) {
        r.add("expand.log_terms", "0", std::to_string(ex.log_coefficients.size()), status_of(ex.log_coefficients.empty()),
              Provenance::paper);
    } else if (!ex.log_coefficients.empty()) {
        const int onset = ex.log_coefficients.begin()->first.first;
        r.add("expand.log_onset", ">= " + std::to_string(n - 6), std::to_string(onset), status_of(onset >= n - 6),
              Provenance::derived);
    }
    for (const auto& [key, poly] : ex.psi_terms.terms()) {
        r.add("expand.term.d" + std::to_string(key.first) + ".log" + std::to_string(key.second), "nonzero",
              std::to_string(poly.terms().size()) + " monomials", Status::match, Provenance::trivial);
    }
    return r;
}

Report cmd_bubble(const RunConfig& c) {
    require_n(c, 7);
    if (!(c.eps > 0) || !(c.rho > 0)) throw UsageError("--eps and --rho must be positive");
    const int n = c.n;
    Report r;
    const double q = sobolev_quotient(n);
    r.add_close("lemma3.1.sobolev_quotient", y6_sphere(n), q, 1e-8, Provenance::derived);
    r.add_close("lemma3.1.eps_invariance", q, sobolev_quotient(n, c.eps), 1e-9, Provenance::trivial);
    if (n < 10) return r;

    const BubbleParams p{n, c.eps, c.rho, {}};
    std::vector<double> grid;
    std::vector<double> sweep;
    const bool sweeping = c.scan || !c.sweep_csv.empty();
    if (sweeping) grid = geometric_grid(c.eps, c.eps * 1e-3, 7);

    if (n == 10) {
        bool reduced = true;
        for (double s : {0.1, 1.0, 10.0, 1e3}) {
            reduced = reduced && std::abs(brace_integrand(10, s) - n10_reduced_integrand(s)) <=
                                     1e-12 * std::abs(n10_reduced_integrand(s));
        }
        r.add("prop3.1.n10.reduced_integrand", "equal", reduced ? "equal" : "different", status_of(reduced),
              Provenance::paper);
        if (sweeping) {
            const auto d = n10_log_divergence(c.rho, grid);
            sweep = d.brace;
            r.add("prop3.1.n10.slope_negative", "< 0", format_double(d.slope), status_of(d.slope < 0), Provenance::paper);
            r.add_close("prop3.1.n10.slope", n10_log_rate().get_d(), d.slope, 1e-3, Provenance::derived);
            r.add("prop3.1.n10.fit_residual", "<= 0.001", format_double(d.fit_residual), status_of(d.fit_residual <= 1e-3),
                  Provenance::derived);
        }
    } else {
        const Rational bracket = limit_bracket(n);
        r.add_exact("prop3.1.bracket", limit_beta_combination()(n), bracket, Provenance::derived);
        r.add("prop3.1.bracket_negative", "< 0", to_string(bracket), status_of(sgn(bracket) < 0), Provenance::paper);
        const double limit = coefficient_A_limit(n);
        r.add_close("prop3.1.A_limit_routes", limit, coefficient_A_limit_quadrature(n), 1e-10, Provenance::derived);
        r.add_close("prop3.1.A_convergence", limit, coefficient_A(p) / std::pow(c.eps, 4), 1e-2, Provenance::derived);
        if (sweeping) {
            for (double e : grid) sweep.push_back(coefficient_A(BubbleParams{n, e, c.rho, {}}) / std::pow(e, 4));
        }
    }
    if (c.scan) {
        const auto v = remainder_scaling(n, geometric_grid(c.eps, c.eps * 1e-2, 5), c.rho);
        r.add("hot_est.exponent", format_double(v.predicted_exponent) + (v.log_corrected ? " (with log)" : ""),
              format_double(v.fitted_exponent), status_of(std::abs(v.fitted_exponent - v.predicted_exponent) <= 0.1),
              Provenance::paper);
        if (v.log_corrected) {
            r.add_close("hot_est.log_coefficient", v.expected_log_coefficient, v.log_coefficient, 1e-2, Provenance::derived);
        }
    }
    if (!c.sweep_csv.empty()) {
        std::ofstream out(c.sweep_csv);
        if (!out) throw UsageError("cannot write " + c.sweep_csv);
        out << "eps," << (n == 10 ? "brace" : "A_over_eps4") << "\n";
        for (std::size_t k = 0; k < grid.size(); ++k) out << format_double(grid[k]) << ',' << format_double(sweep[k]) << "\n";
    }
    return r;
}

Report cmd_mountain(const RunConfig& c) {
    require_n(c, 7);
    static const std::regex form(R"(const(?::(.+))?)");
    std::smatch m;
    if (!std::regex_match(c.f_spec, m, form)) throw UsageError("--f: only 'const' or 'const:<value>' is supported");
    double f = 1.0;
    if (m[1].matched) {
        try {
            f = std::stod(m[1].str());
        } catch (const std::exception&) {
            throw UsageError("--f: bad value '" + m[1].str() + "'");
        }
    }
    if (!(f > 0)) throw UsageError("--f: the constant must be positive");
    const int n = c.n;
    const int ell_max = c.ell_max < 0 ? 8 : c.ell_max;
    if (ell_max < 0 || ell_max > 64) throw UsageError("--ell-max must lie in [0, 64]");
    const ZonalProblem pr(n, ell_max, [f](double) { return f; }, c.quad_points);
    const double p = pr.critical_exponent();
    const double level = 3.0 / n * std::pow(y6_sphere(n), n / 6.0) * std::pow(f, (6.0 - n) / 6.0);
    const auto one = pr.constant(std::pow(pr.eigenvalues()[0] / f, 1 / (p - 2)));
    // Even modes only: the l = 1 direction is the conformal null direction.
    auto u0 = one;
    for (std::size_t l = 0; l < u0.a.size(); l += 2) u0.a[l] += 0.01 * one.a[0] / (1.0 + static_cast<double>(l));
    const auto res = find_critical_point(pr, u0, c.tol);

    Report r;
    r.add("mountain.newton_residual", "<= " + format_double(c.tol), format_double(res.residual),
          status_of(res.residual <= c.tol), Provenance::derived);
    double dev = 0;
    for (std::size_t l = 0; l < one.a.size(); ++l) dev = std::max(dev, std::abs(res.u.a[l] - one.a[l]));
    dev /= std::abs(one.a[0]);
    r.add("mountain.constant_solution", "<= 1e-08", format_double(dev), status_of(dev <= 1e-8), Provenance::derived);
    r.add_close("thm3.2.level", level, mountain_pass_level(pr, res.u), 1e-8, Provenance::derived);
    r.add_close("thm3.2.critical_energy", level, pr.energy(res.u), 1e-8, Provenance::derived);

    const auto g = pr.gradient(u0);
    double worst = 0, scale = 0;
    for (std::size_t l = 0; l < u0.a.size(); ++l) {
        const double h = 1e-6 * std::max(1.0, std::abs(u0.a[l]));
        auto up = u0, down = u0;
        up.a[l] += h;
        down.a[l] -= h;
        const double fd = (pr.energy(up) - pr.energy(down)) / (2 * h);
        worst = std::max(worst, std::abs(fd - g.a[l]));
        scale = std::max(scale, std::abs(g.a[l]));
    }
    const double gerr = worst / std::max(scale, 1e-300);
    r.add("mountain.gradient_fd", "<= 1e-06", format_double(gerr), status_of(gerr <= 1e-6), Provenance::derived);
    return r;
}

Report run_command(const RunConfig& c) {
    Report r;
    if (c.subcommand == "spectrum") r = cmd_spectrum(c);
    else if (c.subcommand == "factorization") r = cmd_factorization(c);
    else if (c.subcommand == "green") r = cmd_green(c);
    else if (c.subcommand == "expand") r = cmd_expand(c);
    else if (c.subcommand == "bubble") r = cmd_bubble(c);
    else if (c.subcommand == "mountain") r = cmd_mountain(c);
    else throw UsageError("unknown subcommand '" + c.subcommand + "'");
    r.config = config_json(c);
    return r;
}

} // namespace gjms6

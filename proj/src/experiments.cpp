#include "levyfp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levyfp/io.hpp"
#include "levyfp/lyapunov.hpp"
#include "levyfp/norms.hpp"
#include "levyfp/parallel.hpp"
#include "levyfp/ratefit.hpp"
#include "levyfp/spectral_solver.hpp"
#include "levyfp/stable_laws.hpp"
#include "levyfp/wildsum.hpp"

namespace levyfp {

namespace {

constexpr const char* kVersion = "levyfp 0.1.0";

using nlohmann::json;

std::string hash_string(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::vector<std::string> csv_comments(const std::string& experiment, const RunConfig& cfg) {
    return {kVersion, "experiment: " + experiment, "config_hash: " + hash_string(cfg.hash())};
}

bool all_finite(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

std::vector<double> radial_frequencies(const Grid1D& grid) {
    std::vector<double> rho(grid.n_points / 2 + 1);
    for (std::size_t r = 0; r < rho.size(); ++r) rho[r] = r * grid.dxi();
    return rho;
}

json fit_to_json(const RateFit& fit) {
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"residual", fit.residual},
            {"target_slope", fit.target_slope},
            {"pass", fit.pass}};
}

void maybe_write_csv(const RunOptions& opt, const std::filesystem::path& name,
                     const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows, const std::string& title,
                     bool log_x, bool log_y) {
    if (!opt.write_outputs || opt.format == "json") return;
    const auto path = opt.out_dir / name;
    write_csv(path, comments, columns, rows);
    write_gnuplot_script(path, title, log_x, log_y);
}

std::string cell_tag(double epsilon, double s) {
    std::ostringstream os;
    os << "eps" << epsilon << "_s" << s;
    return os.str();
}

}  // namespace

// --- verify-kernel -----------------------------------------------------------

ExperimentSummary run_verify_kernel(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"verify-kernel", cfg.hash(), true, json::object()};
    // Polynomial-tail symbols need a higher Nyquist frequency to keep the
    // inversion ringing subdominant inside the tail-check window.
    Grid1D grid = cfg.make_grid();
    if (cfg.family() == KernelFamily::ScreenedPoisson && grid.half_width > 50.0) {
        grid = Grid1D::make(grid.n_points, 50.0);
    }
    summary.details["tail_grid_half_width"] = grid.half_width;
    json per_s = json::array();
    std::vector<std::vector<double>> rows;

    for (double s : cfg.s_values) {
        const KernelSpec kernel = cfg.make_kernel(s);
        const HypothesisReport report = verify_hypothesis1(kernel, grid);
        json entry;
        entry["s"] = s;
        entry["hypothesis1"] = json::array();
        for (const auto& check : report.entries) {
            entry["hypothesis1"].push_back({{"name", check.name},
                                            {"measured", check.measured},
                                            {"bound", check.bound},
                                            {"pass", check.pass}});
        }
        summary.pass = summary.pass && report.pass;

        double chat = std::numeric_limits<double>::quiet_NaN();
        if (kernel.has_classical_member()) {
            chat = verify_hypothesis2(cfg.family(), s);
            entry["hypothesis2_constant"] = chat;
            summary.pass = summary.pass && std::isfinite(chat);
        }
        if (cfg.family() == KernelFamily::StudentGaussMixture) {
            const MixtureCoefficients mix = mixture_coefficients(s);
            entry["mixture"] = {{"a", mix.a}, {"gamma", mix.gamma}};
            summary.pass = summary.pass && mix.a > 0.0 && mix.a < 1.0 && mix.gamma > 0.0;
        }
        per_s.push_back(entry);
        rows.push_back({s, report.entries[0].measured, report.entries[1].measured,
                        report.entries[2].measured, chat});
    }
    summary.details["results"] = per_s;
    maybe_write_csv(opt, cfg.name + "_kernel_checks.csv", csv_comments("verify-kernel", cfg),
                    {"s", "remainder_sup", "tail_sup", "levy_integral", "hyp2_constant"}, rows,
                    "kernel hypothesis checks", false, false);
    return summary;
}

// --- evolve / equilibrium ------------------------------------------------------

ExperimentSummary run_evolve(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"evolve", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const double epsilon = cfg.epsilons.front();
    const KernelSpec kernel = cfg.make_kernel(cfg.s_values.front());
    const InitialDatum initial = InitialDatum::gaussian(1.0, 0.5);
    EvolutionSetup setup{kernel, epsilon, initial, grid};

    json states = json::array();
    for (double t : cfg.times.resolve()) {
        SpectralProfile hat = evolve(setup, t);
        DensityProfile u = to_density(hat);
        double min_value = *std::min_element(u.values.begin(), u.values.end());
        const double mass_defect = std::abs(hat.at_zero().real() - 1.0);
        states.push_back({{"t", t}, {"mass_defect", mass_defect}, {"min", min_value}});
        summary.pass = summary.pass && mass_defect < 1e-12 && min_value > -1e-6 &&
                       all_finite(u.values);
        if (opt.write_outputs && opt.format != "json") {
            std::ostringstream name;
            name << cfg.name << "_state_t" << t << ".csv";
            write_profile_csv(opt.out_dir / name.str(), u, csv_comments("evolve", cfg));
        }
    }
    summary.details["states"] = states;
    return summary;
}

ExperimentSummary run_equilibrium(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"equilibrium", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const double epsilon = cfg.epsilons.front();
    const KernelSpec kernel = cfg.make_kernel(cfg.s_values.front());

    SpectralProfile fhat = equilibrium_hat(kernel, epsilon, grid);
    DensityProfile f = to_density(fhat);
    const double m = mass(f);
    const double min_value = *std::min_element(f.values.begin(), f.values.end());
    summary.details["mass"] = m;
    summary.details["min"] = min_value;
    summary.pass = std::abs(m - 1.0) < 1e-6 && min_value > -1e-6 && all_finite(f.values);

    if (opt.write_outputs && opt.format != "json") {
        write_profile_csv(opt.out_dir / (cfg.name + "_equilibrium.csv"), f,
                          csv_comments("equilibrium", cfg));
        std::vector<std::vector<double>> rows;
        for (int r = 0; r <= grid.n_points / 2; ++r) {
            const double rho = r * grid.dxi();
            rows.push_back({rho, equilibrium_hat_point(kernel, epsilon, rho)});
        }
        maybe_write_csv(opt, cfg.name + "_equilibrium_hat.csv",
                        csv_comments("equilibrium", cfg), {"rho", "fhat"}, rows,
                        "equilibrium symbol", true, true);
    }
    return summary;
}

// --- decay-rate ----------------------------------------------------------------

ExperimentSummary run_decay_rate(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"decay-rate", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const std::vector<double> t_list = cfg.times.resolve();
    const double t_max = *std::max_element(t_list.begin(), t_list.end());
    const double k = cfg.weights.k;
    const InitialDatum initial = InitialDatum::gaussian(1.0, 2.0);
    const auto rho = radial_frequencies(grid);

    struct Cell {
        double epsilon, s;
        std::vector<double> distances;
        std::exception_ptr error;
    };
    std::vector<Cell> cells;
    for (double s : cfg.s_values) {
        for (double epsilon : cfg.epsilons) cells.push_back({epsilon, s, {}, nullptr});
    }
    parallel_for(cells.size(), opt.jobs, [&](std::size_t i) {
        Cell& cell = cells[i];
        try {
            const KernelSpec kernel = cfg.make_kernel(cell.s);
            const ExponentCache cache(kernel, cell.epsilon, rho, t_max);
            DensityProfile equilibrium =
                to_density(equilibrium_hat(kernel, cell.epsilon, grid));
            EvolutionSetup setup{kernel, cell.epsilon, initial, grid};
            for (double t : t_list) {
                DensityProfile u = to_density(evolve(setup, t, &cache));
                cell.distances.push_back(weighted_l1_distance(u, equilibrium, k));
            }
        } catch (...) {
            cell.error = std::current_exception();
        }
    });

    json cell_reports = json::array();
    std::vector<double> rates;
    for (const Cell& cell : cells) {
        if (cell.error) std::rethrow_exception(cell.error);
        json report;
        report["epsilon"] = cell.epsilon;
        report["s"] = cell.s;
        if (!all_finite(cell.distances)) {
            report["nan_detected"] = true;
            summary.pass = false;
        } else if (*std::max_element(cell.distances.begin(), cell.distances.end()) < 1e-8) {
            report["stationary"] = true;
        } else {
            const LinearFit fit = fit_semilog(t_list, cell.distances);
            const double rate = -fit.slope;
            report["rate"] = rate;
            report["residual"] = fit.residual;
            rates.push_back(rate);
            summary.pass = summary.pass && rate >= 0.3;
        }
        cell_reports.push_back(report);
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < t_list.size(); ++i) {
            rows.push_back({t_list[i], cell.distances[i]});
        }
        maybe_write_csv(opt, cfg.name + "_decay_" + cell_tag(cell.epsilon, cell.s) + ".csv",
                        csv_comments("decay-rate", cfg), {"t", "distance"}, rows,
                        "distance to equilibrium", false, true);
    }
    if (!rates.empty()) {
        const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
        summary.details["min_rate"] = *lo;
        summary.details["max_rate"] = *hi;
        summary.details["uniformity_ratio"] = *hi / *lo;
        summary.pass = summary.pass && (*hi / *lo < 3.0);
    }
    summary.details["cells"] = cell_reports;
    summary.details["weight_k"] = k;
    return summary;
}

// --- eps-limit -------------------------------------------------------------------

ExperimentSummary run_eps_limit(const RunConfig& cfg, const RunOptions& opt) {
    if (cfg.family() == KernelFamily::UserSymbol) {
        throw ConfigError("eps-limit: user-symbol kernels carry no limit guarantees");
    }
    if (cfg.epsilons.size() < 4) {
        throw ConfigError("eps-limit: need at least 4 epsilon values for a rate fit");
    }
    ExperimentSummary summary{"eps-limit", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const std::vector<double> t_list = cfg.times.resolve();
    const double k = cfg.weights.k;
    const double theta = interpolation_theta(cfg.weights.m, k, 1.0);
    const InitialDatum initial = InitialDatum::gaussian(1.0, 0.5);

    json fits = json::array();
    for (double s : cfg.s_values) {
        const KernelSpec kernel = cfg.make_kernel(s);
        const double delta = kernel.delta();
        DensityProfile limit_equilibrium =
            stable_density(StableParams::make(s, 0.5 / s), grid);

        std::vector<double> sups;
        std::vector<std::vector<double>> rows;
        for (double epsilon : cfg.epsilons) {
            EvolutionSetup setup{kernel, epsilon, initial, grid};
            double sup = 0.0;
            for (double t : t_list) {
                DensityProfile u = to_density(evolve(setup, t));
                DensityProfile v = to_density(ffp_reference(initial, s, t, grid));
                sup = std::max(sup, weighted_l1_distance(u, v, k));
            }
            // t -> infinity proxy: the equilibria of the two flows.
            DensityProfile f_eps = to_density(equilibrium_hat(kernel, epsilon, grid));
            sup = std::max(sup, weighted_l1_distance(f_eps, limit_equilibrium, k));
            sups.push_back(sup);
            rows.push_back({epsilon, sup});
        }
        if (!all_finite(sups)) {
            summary.pass = false;
            continue;
        }
        RateFit fit = fit_loglog_at_least(cfg.epsilons, sups, theta * delta - 0.1);
        json entry = fit_to_json(fit);
        entry["s"] = s;
        entry["theta"] = theta;
        entry["delta"] = delta;
        fits.push_back(entry);
        summary.pass = summary.pass && fit.pass;
        maybe_write_csv(opt, cfg.name + "_epslimit_s" + format_double(s) + ".csv",
                        csv_comments("eps-limit", cfg), {"epsilon", "sup_distance"}, rows,
                        "distance to the singular limit", true, true);
    }
    summary.details["fits"] = fits;
    return summary;
}

// --- s-limit ---------------------------------------------------------------------

ExperimentSummary run_s_limit(const RunConfig& cfg, const RunOptions& opt) {
    if (!KernelSpec::classical(cfg.family()).has_classical_member()) {
        throw UnsupportedFamilyError("s-limit: family lacks a classical member");
    }
    const double epsilon = cfg.epsilons.front();
    const double eps_max = cfg.epsilon_max_for_s_limit();
    if (epsilon > eps_max) {
        std::ostringstream os;
        os << "s-limit: epsilon " << epsilon << " above the guard " << eps_max;
        throw ConfigError(os.str());
    }
    if (cfg.s_values.size() < 3) {
        throw ConfigError("s-limit: need at least 3 s values for a rate fit");
    }
    ExperimentSummary summary{"s-limit", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const std::vector<double> t_list = cfg.times.resolve();
    const double k = cfg.weights.k;
    const double theta = interpolation_theta(cfg.weights.m, k, 1.0);
    const InitialDatum initial = InitialDatum::gaussian(1.0, 0.5);

    const KernelSpec classical = KernelSpec::classical(cfg.family());
    EvolutionSetup classical_setup{classical, epsilon, initial, grid};
    std::vector<DensityProfile> classical_states;
    for (double t : t_list) {
        classical_states.push_back(to_density(evolve(classical_setup, t)));
    }
    DensityProfile classical_equilibrium = to_density(equilibrium_hat(classical, epsilon, grid));

    std::vector<double> gaps, sups, eq_dists;
    std::vector<std::vector<double>> rows;
    for (double s : cfg.s_values) {
        const KernelSpec kernel = cfg.make_kernel(s);
        EvolutionSetup setup{kernel, epsilon, initial, grid};
        double sup = 0.0;
        for (std::size_t i = 0; i < t_list.size(); ++i) {
            DensityProfile u = to_density(evolve(setup, t_list[i]));
            sup = std::max(sup, weighted_l1_distance(u, classical_states[i], k));
        }
        DensityProfile f_s = to_density(equilibrium_hat(kernel, epsilon, grid));
        const double eq_dist = weighted_l1_distance(f_s, classical_equilibrium, k);
        sup = std::max(sup, eq_dist);
        gaps.push_back(1.0 - s);
        sups.push_back(sup);
        eq_dists.push_back(eq_dist);
        rows.push_back({1.0 - s, sup, eq_dist});
    }
    if (!all_finite(sups) || !all_finite(eq_dists)) {
        summary.pass = false;
        summary.details["nan_detected"] = true;
        return summary;
    }
    RateFit fit = fit_loglog_at_least(gaps, sups, theta - 0.15);
    RateFit eq_fit = fit_loglog_at_least(gaps, eq_dists, theta - 0.15);
    summary.details["fit"] = fit_to_json(fit);
    summary.details["equilibrium_fit"] = fit_to_json(eq_fit);
    summary.details["theta"] = theta;
    summary.details["epsilon"] = epsilon;
    summary.pass = fit.pass;
    maybe_write_csv(opt, cfg.name + "_slimit.csv", csv_comments("s-limit", cfg),
                    {"one_minus_s", "sup_distance", "equilibrium_distance"}, rows,
                    "distance to the classical kernel flow", true, true);
    return summary;
}

// --- gclt -----------------------------------------------------------------------

ExperimentSummary run_gclt(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"gclt", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    const ScalesPolicy policy = scales_policy_from_name(cfg.gclt.scales_policy);

    json per_s = json::array();
    std::vector<double> slopes;
    for (double s : cfg.s_values) {
        const KernelSpec kernel = cfg.make_kernel(s);
        const GcltRateResult result =
            be_rate_fit(kernel, cfg.gclt.n_list, policy, grid, cfg.seed);
        json entry;
        entry["s"] = s;
        entry["target_slope"] = result.target_slope;
        entry["stable_input"] = result.stable_input;
        if (!all_finite(result.distances)) {
            summary.pass = false;
            entry["nan_detected"] = true;
        }
        if (result.fit) {
            entry["fit"] = fit_to_json(*result.fit);
            entry["c_be"] = result.c_be;
            entry["threshold_n"] = result.threshold_n;
            slopes.push_back(result.fit->slope);
            summary.pass = summary.pass && result.fit->pass;
        }
        per_s.push_back(entry);

        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < result.n_values.size(); ++i) {
            rows.push_back({static_cast<double>(result.n_values[i]), result.distances[i]});
        }
        maybe_write_csv(opt, cfg.name + "_gclt_s" + format_double(s) + ".csv",
                        csv_comments("gclt", cfg), {"n", "linf_distance"}, rows,
                        "convolution distance to the stable law", true, true);
    }
    if (slopes.size() >= 2) {
        const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
        const double spread = *hi - *lo;
        summary.details["slope_spread"] = spread;
        summary.pass = summary.pass && spread < 0.15;
    }
    summary.details["results"] = per_s;
    return summary;
}

// --- regularity -----------------------------------------------------------------

ExperimentSummary run_regularity(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"regularity", cfg.hash(), true, json::object()};
    const Grid1D grid = cfg.make_grid();
    if (grid.nyquist() < 100.0) {
        throw ResolutionError("regularity: dual grid too narrow to see the symbol tail",
                              grid.n_points * M_PI / 200.0);
    }
    const double epsilon = cfg.epsilons.front();
    const double s = cfg.s_values.front();
    const KernelSpec kernel = cfg.make_kernel(s);

    // log |F_hat| equals the equilibrium exponent; fitting it avoids underflow.
    std::vector<double> log_rho, exponents;
    std::vector<std::vector<double>> rows;
    const double ny = grid.nyquist();
    for (int r = 1; r <= grid.n_points / 2; ++r) {
        const double rho = r * grid.dxi();
        if (rho < ny / 10.0) continue;
        const double e = equilibrium_exponent(kernel, epsilon, rho);
        log_rho.push_back(std::log(rho));
        exponents.push_back(e);
        rows.push_back({rho, e});
    }
    const LinearFit tail_fit = fit_linear(log_rho, exponents);
    const double target = -1.0 / std::pow(epsilon, 2.0 * s);
    const bool slope_ok = std::abs(tail_fit.slope - target) <= 0.05 * std::abs(target);
    summary.details["tail_slope"] = tail_fit.slope;
    summary.details["tail_slope_target"] = target;
    summary.details["tail_slope_pass"] = slope_ok;

    // Sobolev threshold m* = 1/eps^{2s} - d/2: finite below, divergent above.
    const double m_star = -target - 0.5;
    SpectralProfile fhat = equilibrium_hat(kernel, epsilon, grid);
    json sobolev = json::array();
    bool sobolev_ok = true;
    for (double m : {m_star - 0.1, m_star + 0.1}) {
        if (m <= 0.0) continue;
        const SobolevResult res = sobolev_norm_sq(fhat, m);
        const bool expect_divergent = m > m_star;
        sobolev.push_back({{"m", m},
                           {"value", res.value},
                           {"divergent", res.divergent},
                           {"expected_divergent", expect_divergent}});
        sobolev_ok = sobolev_ok && (res.divergent == expect_divergent);
    }
    summary.details["sobolev_threshold"] = m_star;
    summary.details["sobolev"] = sobolev;
    summary.pass = slope_ok && sobolev_ok;
    maybe_write_csv(opt, cfg.name + "_regularity.csv", csv_comments("regularity", cfg),
                    {"rho", "log_fhat"}, rows, "equilibrium symbol decay", true, false);
    return summary;
}

// --- wild-verify ----------------------------------------------------------------

ExperimentSummary run_wild_verify(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"wild-verify", cfg.hash(), true, json::object()};
    const double epsilon = cfg.epsilons.front();
    const double s = cfg.s_values.front();
    const double t = cfg.times.resolve().front();
    const KernelSpec kernel = cfg.make_kernel(s);
    const InitialDatum initial = InitialDatum::gaussian(1.0, 0.0);

    WildConfig wild{kernel, epsilon, t, cfg.wild.truncation_order, cfg.wild.samples, cfg.seed};

    json probes = json::array();
    std::vector<std::vector<double>> rows;
    int failures = 0;
    double deficit = 0.0;
    for (int i = 0; i < cfg.wild.probes; ++i) {
        const double rho =
            std::pow(10.0, -1.0 + 2.0 * i / std::max(1, cfg.wild.probes - 1));
        const WildValue wv = wild_spectral(wild, initial, rho);
        const double exact = initial.hat(std::exp(-t) * rho).real() *
                             std::exp(exponent_integral(kernel, epsilon, t, rho));
        const double err = std::abs(wv.value.real() - exact);
        const bool ok = err <= 3.0 * wv.std_error + 1e-12;
        if (!ok) ++failures;
        deficit = wv.poisson_deficit;
        probes.push_back({{"rho", rho},
                          {"wild", wv.value.real()},
                          {"exact", exact},
                          {"std_error", wv.std_error},
                          {"pass", ok}});
        rows.push_back({rho, wv.value.real(), exact, wv.std_error});
        summary.pass = summary.pass && std::isfinite(err);
    }
    // A couple of 3-sigma excursions among the probes is within expectation.
    summary.pass = summary.pass && failures <= std::max(1, cfg.wild.probes / 10);
    summary.details["probes"] = probes;
    summary.details["failures"] = failures;
    summary.details["poisson_deficit"] = deficit;
    maybe_write_csv(opt, cfg.name + "_wild.csv", csv_comments("wild-verify", cfg),
                    {"rho", "wild", "exact", "std_error"}, rows,
                    "stochastic resummation vs closed formula", true, false);
    return summary;
}

// --- lyapunov --------------------------------------------------------------------

ExperimentSummary run_lyapunov(const RunConfig& cfg, const RunOptions& opt) {
    ExperimentSummary summary{"lyapunov", cfg.hash(), true, json::object()};
    const double k = cfg.weights.k;

    std::vector<double> x_grid;
    for (double x : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0, 25.0, 30.0}) {
        x_grid.push_back(x);
        if (x > 0.0) x_grid.push_back(-x);
    }
    std::sort(x_grid.begin(), x_grid.end());

    struct Cell {
        double epsilon, s;
        LyapunovFit fit;
        double m2 = 0.0;
        std::exception_ptr error;
    };
    std::vector<Cell> cells;
    for (double s : cfg.s_values) {
        for (double epsilon : cfg.epsilons) cells.push_back({epsilon, s, {}, 0.0, nullptr});
    }
    parallel_for(cells.size(), opt.jobs, [&](std::size_t i) {
        Cell& cell = cells[i];
        try {
            const KernelSpec kernel = cfg.make_kernel(cell.s);
            cell.fit = lyapunov_fit(kernel, cell.epsilon, k, x_grid);
            DualGenerator generator(kernel, cell.epsilon);
            cell.m2 = generator.truncated_second_moment(kernel.tail_radius());
        } catch (...) {
            cell.error = std::current_exception();
        }
    });

    json cell_reports = json::array();
    std::vector<double> lambdas;
    std::vector<std::vector<double>> rows;
    for (const Cell& cell : cells) {
        if (cell.error) std::rethrow_exception(cell.error);
        cell_reports.push_back({{"epsilon", cell.epsilon},
                                {"s", cell.s},
                                {"lambda", cell.fit.lambda_l},
                                {"c", cell.fit.c_l},
                                {"m2_truncated", cell.m2},
                                {"pass", cell.fit.pass}});
        lambdas.push_back(cell.fit.lambda_l);
        rows.push_back({cell.epsilon, cell.s, cell.fit.lambda_l, cell.fit.c_l});
        summary.pass = summary.pass && cell.fit.pass && std::isfinite(cell.fit.lambda_l);
    }
    const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
    summary.details["min_lambda"] = *lo;
    summary.details["max_lambda"] = *hi;
    summary.details["uniformity_ratio"] = *hi / *lo;
    summary.pass = summary.pass && (*hi / *lo < 2.0);
    summary.details["cells"] = cell_reports;
    maybe_write_csv(opt, cfg.name + "_lyapunov.csv", csv_comments("lyapunov", cfg),
                    {"epsilon", "s", "lambda", "c"}, rows, "drift condition fits", false,
                    false);
    return summary;
}

// --- defaults and dispatch -------------------------------------------------------

RunConfig default_config(const std::string& experiment) {
    RunConfig cfg;
    cfg.name = experiment;
    if (experiment == "verify-kernel") {
        cfg.s_values = {0.6, 0.75, 0.9};
        cfg.grid = {1 << 14, 200.0};
    } else if (experiment == "evolve") {
        cfg.grid = {1 << 12, 50.0};
        cfg.times.t_list = {0.5, 1.0, 2.0};
    } else if (experiment == "equilibrium") {
        cfg.grid = {1 << 14, 50.0};
    } else if (experiment == "decay-rate") {
        cfg.epsilons = {0.1, 0.5, 1.0};
        cfg.s_values = {0.6, 0.75, 0.9};
        cfg.grid = {1 << 12, 50.0};
        for (int i = 1; i <= 12; ++i) cfg.times.t_list.push_back(0.5 * i);
        cfg.weights = {0.5, 0.75, 1.0};
    } else if (experiment == "eps-limit") {
        cfg.epsilons = {0.2, 0.1, 0.05, 0.025};
        cfg.s_values = {0.75};
        cfg.grid = {1 << 12, 50.0};
        cfg.times.t_list = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
        cfg.weights = {0.25, 0.75, 1.0};
    } else if (experiment == "s-limit") {
        cfg.epsilons = {0.3};
        cfg.s_values = {0.85, 0.9, 0.95, 0.975};
        cfg.grid = {1 << 12, 50.0};
        cfg.times.t_list = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
        cfg.weights = {0.25, 0.75, 1.0};
    } else if (experiment == "gclt") {
        cfg.kernel.family = "screened-poisson";
        cfg.s_values = {0.75, 0.9, 0.99};
        cfg.grid = {1 << 13, 40.0};
    } else if (experiment == "regularity") {
        cfg.grid = {1 << 14, 50.0};
    } else if (experiment == "wild-verify") {
        cfg.epsilons = {0.5};
        cfg.times.t_list = {1.0};
        cfg.grid = {1 << 12, 50.0};
    } else if (experiment == "lyapunov") {
        cfg.epsilons = {0.1, 0.5, 1.0};
        cfg.s_values = {0.6, 0.75, 0.9};
        cfg.weights = {0.5, 0.75, 1.0};
        cfg.grid = {1 << 12, 50.0};
    } else {
        throw ConfigError("unknown experiment: " + experiment);
    }
    return cfg;
}

ExperimentSummary run_experiment(const std::string& experiment, const RunConfig& cfg,
                                 const RunOptions& opt) {
    if (experiment == "verify-kernel") return run_verify_kernel(cfg, opt);
    if (experiment == "evolve") return run_evolve(cfg, opt);
    if (experiment == "equilibrium") return run_equilibrium(cfg, opt);
    if (experiment == "decay-rate") return run_decay_rate(cfg, opt);
    if (experiment == "eps-limit") return run_eps_limit(cfg, opt);
    if (experiment == "s-limit") return run_s_limit(cfg, opt);
    if (experiment == "gclt") return run_gclt(cfg, opt);
    if (experiment == "regularity") return run_regularity(cfg, opt);
    if (experiment == "wild-verify") return run_wild_verify(cfg, opt);
    if (experiment == "lyapunov") return run_lyapunov(cfg, opt);
    throw ConfigError("unknown experiment: " + experiment);
}

void write_summary(const ExperimentSummary& summary, const RunConfig& cfg,
                   const RunOptions& opt) {
    if (!opt.write_outputs || opt.format == "csv") return;
    json doc;
    doc["experiment"] = summary.experiment;
    doc["config_hash"] = hash_string(summary.config_hash);
    doc["config"] = cfg.to_json();
    doc["results"] = summary.details;
    doc["pass"] = summary.pass;
    write_json(opt.out_dir / (cfg.name + "_summary.json"), doc);
}

}  // namespace levyfp

// sfpricer: config-driven pricing runs, convergence studies, jump reports
// and density dumps, emitted as CSV.
//
// Subcommands: price, curve, convergence, greeks, detect-jumps, density.
// Exit codes: 0 success, 2 config error, 3 reference unavailable, 4 solver
// failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfp/errors.hpp"
#include "sfp/jumps.hpp"
#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/presets.hpp"
#include "sfp/pricing.hpp"
#include "sfp/reference.hpp"
#include "sfp/series.hpp"
#include "sfp/sfp_core.hpp"

namespace {

using nlohmann::json;

// ---- config model ---------------------------------------------------------

struct RunConfig {
    sfp::ModelSpec model = sfp::BsmParams{0.2, 0.0, 0.0};
    // strike and spot have no sensible defaults: they stay NaN until a preset
    // or config provides them, and resolve() rejects a run that never did.
    sfp::Contract contract{sfp::PayoffKind::Put,
                           std::numeric_limits<double>::quiet_NaN(), 1.0, 1};
    double spot = std::numeric_limits<double>::quiet_NaN();
    sfp::CurveAxis axis = sfp::CurveAxis::Strike;
    std::vector<double> grid;     // empty -> single point
    std::vector<int> terms_list;  // nonempty after resolution
    sfp::PricingOptions options;  // terms filled from terms_list per run
    std::string reference;        // analytic | cos | sfp-high | "" (auto)
    std::string csv_path;         // empty -> stdout
    int density_samples = 801;
};

const std::map<std::string, sfp::PayoffKind>& kind_names() {
    static const std::map<std::string, sfp::PayoffKind> names = {
        {"call", sfp::PayoffKind::Call},
        {"put", sfp::PayoffKind::Put},
        {"covered-call", sfp::PayoffKind::CoveredCall},
        {"cash-or-nothing-call", sfp::PayoffKind::CashOrNothingCall},
        {"cash-or-nothing-put", sfp::PayoffKind::CashOrNothingPut},
        {"asset-or-nothing-call", sfp::PayoffKind::AssetOrNothingCall},
        {"asset-or-nothing-put", sfp::PayoffKind::AssetOrNothingPut},
        {"asymmetric-call", sfp::PayoffKind::AsymmetricCall},
        {"asymmetric-put", sfp::PayoffKind::AsymmetricPut},
        {"symmetric-call", sfp::PayoffKind::SymmetricCall},
        {"symmetric-put", sfp::PayoffKind::SymmetricPut},
    };
    return names;
}

sfp::PayoffKind parse_kind(const std::string& name) {
    const auto it = kind_names().find(name);
    if (it == kind_names().end())
        throw sfp::InvalidParameter("contract.kind: unknown payoff kind '" + name + "'");
    return it->second;
}

double need_number(const json& block, const char* owner, const char* key) {
    if (!block.contains(key) || !block.at(key).is_number())
        throw sfp::InvalidParameter(std::string(owner) + "." + key +
                                    ": required numeric field missing");
    return block.at(key).get<double>();
}

double opt_number(const json& block, const char* key, double fallback) {
    if (!block.contains(key)) return fallback;
    if (!block.at(key).is_number())
        throw sfp::InvalidParameter(std::string(key) + ": expected a number");
    return block.at(key).get<double>();
}

// [lo, hi, n] -> uniform grid
std::vector<double> parse_range(const json& value, const char* field) {
    if (!value.is_array() || value.size() != 3)
        throw sfp::InvalidParameter(std::string(field) + ": expected [lo, hi, n]");
    const double lo = value.at(0).get<double>();
    const double hi = value.at(1).get<double>();
    const int n = value.at(2).get<int>();
    if (n < 1) throw sfp::InvalidParameter(std::string(field) + ": n must be >= 1");
    if (n == 1) {
        if (lo != hi)
            throw sfp::InvalidParameter(std::string(field) + ": n=1 needs lo == hi");
        return {lo};
    }
    return sfp::uniform_grid(lo, hi, n);
}

sfp::ModelSpec parse_model(const json& block) {
    if (!block.contains("kind") || !block.at("kind").is_string())
        throw sfp::InvalidParameter("model.kind: required string field missing");
    const std::string kind = block.at("kind").get<std::string>();
    if (kind == "bsm") {
        sfp::BsmParams p{};
        p.sigma = need_number(block, "model", "sigma");
        return p;
    }
    if (kind == "vg") {
        sfp::VgParams p{};
        p.sigma = need_number(block, "model", "sigma");
        p.theta = need_number(block, "model", "theta");
        p.nu = need_number(block, "model", "nu");
        return p;
    }
    if (kind == "cgmy") {
        sfp::CgmyParams p{};
        p.C = need_number(block, "model", "C");
        p.G = need_number(block, "model", "G");
        p.M = need_number(block, "model", "M");
        p.Y = need_number(block, "model", "Y");
        return p;
    }
    if (kind == "heston") {
        sfp::HestonParams p{};
        p.y0 = need_number(block, "model", "y0");
        p.ybar = need_number(block, "model", "ybar");
        p.lambda = need_number(block, "model", "lambda");
        p.eta = need_number(block, "model", "eta");
        p.rho = need_number(block, "model", "rho");
        return p;
    }
    throw sfp::InvalidParameter("model.kind: unknown model '" + kind + "'");
}

void set_rates(sfp::ModelSpec& model, double r, double q) {
    std::visit([&](auto& p) { p.r = r; p.q = q; }, model);
}

void apply_config(RunConfig& cfg, const json& root) {
    if (!root.is_object()) throw sfp::InvalidParameter("config root must be an object");
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (key != "preset" && key != "model" && key != "market" && key != "contract" &&
            key != "method" && key != "output")
            throw sfp::InvalidParameter("unknown config block '" + key + "'");
    }

    if (root.contains("model")) cfg.model = parse_model(root.at("model"));

    if (root.contains("market")) {
        const json& market = root.at("market");
        const bool has_point = market.contains("S0");
        const bool has_range = market.contains("S0_range");
        if (has_point && has_range)
            throw sfp::InvalidParameter("market: exactly one of S0 or S0_range");
        if (has_point) {
            cfg.spot = need_number(market, "market", "S0");
            if (cfg.axis == sfp::CurveAxis::Spot) {
                cfg.grid.clear();
                cfg.axis = sfp::CurveAxis::Strike;
            }
        }
        if (has_range) {
            cfg.grid = parse_range(market.at("S0_range"), "market.S0_range");
            cfg.axis = sfp::CurveAxis::Spot;
            cfg.spot = cfg.grid.front();
        }
        set_rates(cfg.model, opt_number(market, "r", sfp::risk_free_rate(cfg.model)),
                  opt_number(market, "q", sfp::dividend_yield(cfg.model)));
        cfg.contract.maturity = opt_number(market, "T", cfg.contract.maturity);
    }

    if (root.contains("contract")) {
        const json& contract = root.at("contract");
        if (contract.contains("kind"))
            cfg.contract.kind = parse_kind(contract.at("kind").get<std::string>());
        const bool has_point = contract.contains("K");
        const bool has_range = contract.contains("K_range");
        if (has_point && has_range)
            throw sfp::InvalidParameter("contract: exactly one of K or K_range");
        if (has_point) {
            cfg.contract.strike = need_number(contract, "contract", "K");
            if (cfg.axis == sfp::CurveAxis::Strike) cfg.grid.clear();
        }
        if (has_range) {
            cfg.grid = parse_range(contract.at("K_range"), "contract.K_range");
            cfg.axis = sfp::CurveAxis::Strike;
            cfg.contract.strike = cfg.grid.front();
        }
        if (contract.contains("n")) {
            cfg.contract.power = contract.at("n").get<int>();
        }
    }

    if (root.contains("method")) {
        const json& method = root.at("method");
        if (method.contains("terms")) {
            if (!method.at("terms").is_array() || method.at("terms").empty())
                throw sfp::InvalidParameter("method.terms: expected a nonempty list");
            cfg.terms_list = method.at("terms").get<std::vector<int>>();
        }
        cfg.options.interval_multiplier =
            opt_number(method, "L", cfg.options.interval_multiplier);
        if (method.contains("padding"))
            cfg.options.padding = method.at("padding").get<double>();
        if (method.contains("jumps")) {
            const std::string mode = method.at("jumps").get<std::string>();
            if (mode == "auto")
                cfg.options.jump_policy = sfp::JumpPolicy::Auto;
            else if (mode == "endpoints")
                cfg.options.jump_policy = sfp::JumpPolicy::EndpointsOnly;
            else if (mode == "explicit")
                cfg.options.jump_policy = sfp::JumpPolicy::Explicit;
            else
                throw sfp::InvalidParameter(
                    "method.jumps: expected auto, endpoints or explicit");
        }
        if (method.contains("jump_locations"))
            cfg.options.interior_jumps =
                method.at("jump_locations").get<std::vector<double>>();
        cfg.options.spike_factor =
            opt_number(method, "spike_factor", cfg.options.spike_factor);
        if (method.contains("direct_call"))
            cfg.options.force_direct_call = method.at("direct_call").get<bool>();
        if (method.contains("density_samples"))
            cfg.density_samples = method.at("density_samples").get<int>();
    }

    if (root.contains("output")) {
        const json& output = root.at("output");
        if (output.contains("csv")) cfg.csv_path = output.at("csv").get<std::string>();
        if (output.contains("reference"))
            cfg.reference = output.at("reference").get<std::string>();
    }
}

void apply_preset(RunConfig& cfg, const std::string& name) {
    const sfp::Preset& p = sfp::preset(name);
    cfg.model = p.model;
    cfg.contract = p.contract;
    cfg.spot = p.spot;
    cfg.axis = p.axis;
    cfg.grid = p.grid_n > 0 ? sfp::uniform_grid(p.grid_lo, p.grid_hi, p.grid_n)
                            : std::vector<double>{};
    cfg.terms_list = {p.default_terms};
}

// ---- CLI plumbing ----------------------------------------------------------

struct CliArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_path;
    std::vector<int> terms;
    std::string reference;
};

RunConfig resolve(const CliArgs& args) {
    RunConfig cfg;
    bool configured = false;

    json root;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw sfp::InvalidParameter("cannot open config file " + args.config_path);
        try {
            root = json::parse(in);
        } catch (const json::parse_error& e) {
            throw sfp::InvalidParameter(std::string("config parse error: ") + e.what());
        }
    }

    std::string preset_name = args.preset_name;
    if (preset_name.empty() && root.contains("preset"))
        preset_name = root.at("preset").get<std::string>();
    if (!preset_name.empty()) {
        apply_preset(cfg, preset_name);
        configured = true;
    }
    if (!root.is_null()) {
        apply_config(cfg, root);
        configured = true;
    }
    if (!configured)
        throw sfp::InvalidParameter("no configuration: pass --preset and/or --config");

    if (!args.terms.empty()) cfg.terms_list = args.terms;
    if (cfg.terms_list.empty()) cfg.terms_list = {64};
    for (int u : cfg.terms_list)
        if (u < 8) throw sfp::InvalidParameter("method.terms: every U must be >= 8");
    if (!args.reference.empty()) cfg.reference = args.reference;
    if (!args.out_path.empty()) cfg.csv_path = args.out_path;

    if (std::isnan(cfg.contract.strike))
        throw sfp::InvalidParameter(
            "contract.K: required field missing (set K or K_range, or use a preset)");
    if (std::isnan(cfg.spot))
        throw sfp::InvalidParameter(
            "market.S0: required field missing (set S0 or S0_range, or use a preset)");
    sfp::validate(cfg.model);
    sfp::validate(cfg.contract);
    if (cfg.spot <= 0.0) throw sfp::InvalidParameter("market.S0 must be > 0");
    for (double g : cfg.grid)
        if (g <= 0.0) throw sfp::InvalidParameter("grid values must be > 0");
    return cfg;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_seconds(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.csv_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(cfg.csv_path, std::ios::binary);
    if (!out) throw sfp::InvalidParameter("cannot open output file " + cfg.csv_path);
    out << body;
}

// ---- reference values ------------------------------------------------------

std::string pick_reference(const RunConfig& cfg) {
    if (!cfg.reference.empty()) return cfg.reference;
    const bool quoted_kind = cfg.contract.kind == sfp::PayoffKind::Call ||
                             cfg.contract.kind == sfp::PayoffKind::Put ||
                             cfg.contract.kind == sfp::PayoffKind::CashOrNothingCall ||
                             cfg.contract.kind == sfp::PayoffKind::CashOrNothingPut;
    if (std::holds_alternative<sfp::BsmParams>(cfg.model) && quoted_kind) return "analytic";
    if (quoted_kind) return "cos";
    return "sfp-high";
}

constexpr int kCosReferenceTerms = 1 << 14;
constexpr int kSfpReferenceTerms = 512;

// Reference prices over the grid (or the single configured point).
std::vector<double> reference_values(const RunConfig& cfg, const std::string& method,
                                     const std::vector<double>& grid,
                                     const sfp::TruncationInterval& interval) {
    std::vector<double> out;
    out.reserve(grid.size());
    if (method == "analytic") {
        const auto* bsm = std::get_if<sfp::BsmParams>(&cfg.model);
        if (bsm == nullptr)
            throw sfp::UnsupportedOperation("analytic reference requires the BSM model");
        for (double g : grid) {
            sfp::Contract c = cfg.contract;
            double spot = cfg.spot;
            (cfg.axis == sfp::CurveAxis::Strike ? c.strike : spot) = g;
            out.push_back(sfp::bsm_analytic(*bsm, c, spot).price);
        }
        return out;
    }
    if (method == "cos") {
        for (double g : grid) {
            sfp::Contract c = cfg.contract;
            double spot = cfg.spot;
            (cfg.axis == sfp::CurveAxis::Strike ? c.strike : spot) = g;
            out.push_back(sfp::cos_price(cfg.model, c, spot, interval, kCosReferenceTerms));
        }
        return out;
    }
    if (method == "sfp-high") {
        sfp::PricingOptions opts = cfg.options;
        opts.terms = kSfpReferenceTerms;
        const sfp::CurveResult curve =
            sfp::price_curve(cfg.model, cfg.contract, cfg.spot, cfg.axis, grid, opts);
        return curve.values;
    }
    throw sfp::InvalidParameter("output.reference: expected analytic, cos or sfp-high");
}

std::vector<double> point_or_grid(const RunConfig& cfg) {
    if (!cfg.grid.empty()) return cfg.grid;
    return {cfg.axis == sfp::CurveAxis::Strike ? cfg.contract.strike : cfg.spot};
}

// ---- subcommands -----------------------------------------------------------

int cmd_price(const RunConfig& cfg) {
    sfp::PricingOptions opts = cfg.options;
    opts.terms = cfg.terms_list.front();
    const sfp::PriceResult res = sfp::price(cfg.model, cfg.contract, cfg.spot, opts);
    const sfp::GreeksResult greeks = sfp::greeks(cfg.model, cfg.contract, cfg.spot, opts);

    std::string body = "value,delta,gamma,vega,terms,condition,residual,near_pole\n";
    body += fmt(res.value) + "," + fmt(greeks.delta) + "," + fmt(greeks.gamma) + ",";
    if (greeks.vega) body += fmt(*greeks.vega);
    body += "," + std::to_string(res.terms_used) + "," + fmt(res.diagnostics.condition) +
            "," + fmt(res.diagnostics.residual) + "," + (res.near_pole ? "1" : "0") + "\n";
    emit(cfg, body);
    return 0;
}

int cmd_greeks(const RunConfig& cfg) {
    sfp::PricingOptions opts = cfg.options;
    opts.terms = cfg.terms_list.front();
    const sfp::GreeksResult greeks = sfp::greeks(cfg.model, cfg.contract, cfg.spot, opts);
    std::string body = "delta,gamma,vega\n";
    body += fmt(greeks.delta) + "," + fmt(greeks.gamma) + ",";
    if (greeks.vega) body += fmt(*greeks.vega);
    body += "\n";
    emit(cfg, body);
    return 0;
}

int cmd_curve(const RunConfig& cfg, bool with_reference) {
    sfp::PricingOptions opts = cfg.options;
    opts.terms = cfg.terms_list.front();
    const std::vector<double> grid = point_or_grid(cfg);
    const sfp::CurveResult curve =
        sfp::price_curve(cfg.model, cfg.contract, cfg.spot, cfg.axis, grid, opts);

    const char* label = cfg.axis == sfp::CurveAxis::Strike ? "strike" : "spot";
    std::string body;
    if (with_reference) {
        const std::string method = pick_reference(cfg);
        const std::vector<double> ref =
            reference_values(cfg, method, grid, curve.interval);
        body += std::string("# reference=") + method + "\n";
        body += std::string(label) + ",value,reference,abs_error\n";
        for (size_t i = 0; i < grid.size(); ++i)
            body += fmt(grid[i]) + "," + fmt(curve.values[i]) + "," + fmt(ref[i]) + "," +
                    fmt(std::abs(curve.values[i] - ref[i])) + "\n";
    } else {
        body += std::string(label) + ",value\n";
        for (size_t i = 0; i < grid.size(); ++i)
            body += fmt(grid[i]) + "," + fmt(curve.values[i]) + "\n";
    }
    emit(cfg, body);
    return 0;
}

int cmd_convergence(const RunConfig& cfg) {
    const std::vector<double> grid = point_or_grid(cfg);
    const std::string method = pick_reference(cfg);

    std::vector<double> ref;
    std::string body = "# reference=" + method + "\n";
    body += "U,r_inf,r_2,seconds\n";
    for (int u : cfg.terms_list) {
        sfp::PricingOptions opts = cfg.options;
        opts.terms = u;
        const auto start = std::chrono::steady_clock::now();
        const sfp::CurveResult curve =
            sfp::price_curve(cfg.model, cfg.contract, cfg.spot, cfg.axis, grid, opts);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        if (ref.empty()) ref = reference_values(cfg, method, grid, curve.interval);
        const sfp::ErrorReport report =
            sfp::error_report(curve.values, ref, grid, elapsed.count());
        body += std::to_string(u) + "," + fmt(report.r_inf) + "," + fmt(report.r_2) +
                "," + fmt_seconds(report.wall_seconds) + "\n";
    }
    emit(cfg, body);
    return 0;
}

int cmd_detect_jumps(const RunConfig& cfg) {
    // Scout the density-sized window: moneyness widening only dilutes the
    // spike statistic's baseline, and jump locations are physical points that
    // do not depend on the window.
    const bool heston = sfp::has_variance_state(cfg.model);
    const double multiplier = cfg.options.interval_multiplier > 0.0
                                  ? cfg.options.interval_multiplier
                                  : (heston ? 12.0 : 10.0);
    const double padding =
        cfg.options.padding.value_or(cfg.contract.maturity < 1e-4 ? 0.1 : 0.5);
    const sfp::TruncationInterval interval = sfp::truncation_interval(
        cfg.model, cfg.contract.maturity, 0.0, multiplier, padding);
    const int terms = std::max(cfg.terms_list.front(), 256);
    const sfp::JumpReport report = sfp::detect_jumps(
        cfg.model, cfg.contract.maturity, interval, terms, cfg.options.spike_factor);

    std::string body = std::string("# smooth=") + (report.smooth ? "1" : "0") + "\n";
    body += "location,magnitude\n";
    for (size_t i = 0; i < report.locations.size(); ++i)
        body += fmt(report.locations[i]) + "," + fmt(report.spike_magnitudes[i]) + "\n";
    emit(cfg, body);
    return 0;
}

int cmd_density(const RunConfig& cfg) {
    const bool heston = sfp::has_variance_state(cfg.model);
    const double multiplier = cfg.options.interval_multiplier > 0.0
                                  ? cfg.options.interval_multiplier
                                  : (heston ? 12.0 : 10.0);
    const double tiny = cfg.contract.maturity < 1e-4 ? 0.1 : 0.5;
    const sfp::TruncationInterval scout = sfp::truncation_interval(
        cfg.model, cfg.contract.maturity, 0.0, multiplier, tiny);
    const int terms = cfg.terms_list.front();

    std::vector<double> interior;
    if (cfg.options.jump_policy == sfp::JumpPolicy::Explicit) {
        interior = cfg.options.interior_jumps;
    } else if (cfg.options.jump_policy == sfp::JumpPolicy::Auto) {
        const sfp::JumpReport report =
            sfp::detect_jumps(cfg.model, cfg.contract.maturity, scout,
                              std::max(terms, 256), cfg.options.spike_factor);
        interior = report.locations;
    }
    const double padding = cfg.options.padding.value_or(
        cfg.contract.maturity < 1e-4 ? 0.1 : (interior.empty() ? 0.0 : 0.5));
    const sfp::TruncationInterval interval = sfp::truncation_interval(
        cfg.model, cfg.contract.maturity, 0.0, multiplier, padding);

    const sfp::SeriesCoefficients coeffs =
        sfp::density_coefficients(cfg.model, cfg.contract.maturity, interval, terms);
    std::vector<std::complex<double>> singular = {{-1.0, 0.0}};
    for (double zeta : interior) {
        const double angle = 2.0 * M_PI * zeta / interval.width();
        singular.push_back(std::polar(1.0, angle));
    }
    const sfp::DegreePlan plan =
        sfp::allocate_degrees(terms, static_cast<int>(singular.size()));
    const sfp::SfpApproximant approximant = sfp::solve_sfp(coeffs, plan, singular);

    const int n = std::max(cfg.density_samples, 2);
    std::string body = "y,density\n";
    for (int i = 0; i < n; ++i) {
        const double y = interval.c + interval.width() * i / (n - 1);
        body += fmt(y) + "," + fmt(sfp::evaluate(approximant, y).value) + "\n";
    }
    emit(cfg, body);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-Pade option pricer"};
    app.require_subcommand(1);

    CliArgs args;
    std::string command;
    for (const char* name :
         {"price", "curve", "convergence", "greeks", "detect-jumps", "density"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", args.config_path, "JSON config file");
        sub->add_option("--preset", args.preset_name, "named parameter set");
        sub->add_option("--out", args.out_path, "output CSV path (default stdout)");
        sub->add_option("--terms", args.terms, "term budgets U")->delimiter(',');
        sub->add_option("--reference", args.reference, "reference method")
            ->check(CLI::IsMember({"analytic", "cos", "sfp-high"}));
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        const RunConfig cfg = resolve(args);
        if (command == "price") return cmd_price(cfg);
        if (command == "curve") return cmd_curve(cfg, !cfg.reference.empty());
        if (command == "convergence") return cmd_convergence(cfg);
        if (command == "greeks") return cmd_greeks(cfg);
        if (command == "detect-jumps") return cmd_detect_jumps(cfg);
        if (command == "density") return cmd_density(cfg);
        std::cerr << "config error: no subcommand\n";
        return 2;
    } catch (const sfp::SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 4;
    } catch (const sfp::UnsupportedOperation& e) {
        std::cerr << "reference error: " << e.what() << "\n";
        return 3;
    } catch (const sfp::InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

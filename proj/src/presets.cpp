#include "sfp/presets.hpp"

#include <sstream>

namespace sfp {

namespace {

std::map<std::string, Preset> build() {
    std::map<std::string, Preset> out;

    // Diffusion benchmarks: a dense put curve, two long maturities and a
    // near-expiry curve whose density is a spike.
    {
        Preset p;
        p.model = BsmParams{0.15, 0.03, 0.0};
        p.contract = {PayoffKind::Put, 100.0, 1.0};
        p.spot = 100.0;
        p.axis = CurveAxis::Strike;
        p.grid_lo = 1.0; p.grid_hi = 200.0; p.grid_n = 250;
        out["bsm-para1"] = p;
    }
    {
        Preset p;
        p.model = BsmParams{0.25, 0.10, 0.0};
        p.contract = {PayoffKind::Call, 120.0, 50.0};
        p.spot = 100.0;
        p.default_terms = 32;
        out["bsm-para2-t50"] = p;
        p.contract.maturity = 100.0;
        out["bsm-para2-t100"] = p;
    }
    {
        Preset p;
        p.model = BsmParams{0.20, 0.06, 0.0};
        p.contract = {PayoffKind::Call, 100.0, 1e-6};
        p.spot = 100.0;
        p.axis = CurveAxis::Spot;
        p.grid_lo = 80.0; p.grid_hi = 120.0; p.grid_n = 250;
        out["bsm-para3"] = p;
    }

    // Variance-gamma: short maturity with a density cusp, and a smooth
    // one-year spot curve.
    {
        Preset p;
        p.model = VgParams{0.12, -0.14, 0.2, 0.10, 0.0};
        p.contract = {PayoffKind::Call, 100.0, 0.1};
        p.spot = 100.0;
        p.axis = CurveAxis::Strike;
        p.grid_lo = 80.0; p.grid_hi = 120.0; p.grid_n = 250;
        p.default_terms = 128;
        out["vg-para1"] = p;
    }
    {
        Preset p;
        p.model = VgParams{0.1213, -0.1436, 0.1686, 0.03, 0.01};
        p.contract = {PayoffKind::Call, 1.0, 1.0};
        p.spot = 1.0;
        p.axis = CurveAxis::Spot;
        p.grid_lo = 0.5; p.grid_hi = 2.0; p.grid_n = 250;
        out["vg-para2"] = p;
    }

    // Tempered-stable fine-structure sweep.
    {
        Preset p;
        p.model = CgmyParams{1.0, 5.0, 5.0, 0.5, 0.10, 0.0};
        p.contract = {PayoffKind::Call, 100.0, 1.0};
        p.spot = 100.0;
        p.default_terms = 32;
        out["cgmy-para1-y05"] = p;
        std::get<CgmyParams>(p.model).Y = 1.5;
        out["cgmy-para1-y15"] = p;
        std::get<CgmyParams>(p.model).Y = 1.98;
        p.contract.kind = PayoffKind::Put;
        p.axis = CurveAxis::Strike;
        p.grid_lo = 80.0; p.grid_hi = 120.0; p.grid_n = 250;
        p.default_terms = 64;
        out["cgmy-para1-y198"] = p;
    }

    // Stochastic volatility across maturities (Feller condition violated).
    {
        Preset p;
        p.model = HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0};
        p.contract = {PayoffKind::Call, 100.0, 1.0};
        p.spot = 100.0;
        p.default_terms = 128;
        out["heston-para1-t1"] = p;
        p.contract.maturity = 10.0;
        out["heston-para1-t10"] = p;
        p.contract.maturity = 30.0;
        p.default_terms = 64;
        out["heston-para1-t30"] = p;
        p.contract.maturity = 45.0;
        out["heston-para1-t45"] = p;
    }

    return out;
}

} // namespace

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset> all = build();
    return all;
}

const Preset& preset(const std::string& name) {
    const auto& all = presets();
    const auto it = all.find(name);
    if (it == all.end()) {
        std::ostringstream msg;
        msg << "unknown preset '" << name << "'; known presets:";
        for (const auto& [key, value] : all) msg << ' ' << key;
        throw InvalidParameter(msg.str());
    }
    return it->second;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 1) throw InvalidParameter("grid needs at least one point");
    if (n == 1) return {lo};
    if (!(hi > lo)) throw InvalidParameter("grid upper bound must exceed the lower bound");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return out;
}

} // namespace sfp

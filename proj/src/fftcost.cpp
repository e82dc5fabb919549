#include "wreath/fftcost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wreath/reps.hpp"
#include "wreath/words.hpp"

namespace wreath::fftcost {

namespace {

std::string fmt_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

CostReport build_report(const RSpec& R, const CostParams& p, std::uint64_t irrep_cap) {
    CostReport report{R, reps::group_order(R), naive_cost(R), 0.0, 0.0, 0.0, {}};
    const std::size_t k = R.height();
    if (k == 1) {
        const double n = R.component(0);
        report.k_term = p.big_o_constant * n * std::log2(std::max(n, 2.0));
        report.bound = report.k_term;
    } else {
        const RSpec base = R.parent();
        const double r = R.top();
        const double t_base = build_report(base, p, irrep_cap).bound;
        const double base_order = reps::group_order(base).to_double();
        // T(K) for K = base^{r_k} by the row-column rule, then |G|/|K| = r_k
        const double t_k = r * std::pow(base_order, r - 1.0) * t_base;
        report.k_term = r * t_k;
        report.bound = report.k_term;

        std::vector<BigNat> class_dims;
        for (const labels::LabelTree& t : labels::enumerate_labels(base, irrep_cap))
            class_dims.push_back(labels::dimension(t, base));
        std::vector<std::uint32_t> alphabet(class_dims.size());
        for (std::uint32_t i = 0; i < alphabet.size(); ++i) alphabet[i] = i;

        words::for_each_orbit_representative<std::uint32_t>(
            alphabet, R.top(),
            [&](const words::Word<std::uint32_t>& w) {
                OrbitTerm term;
                term.word = w;
                const std::uint64_t period = words::period(w);
                const std::uint64_t stab = R.top() / period;
                term.index_G_over_H = period;
                term.m_eta = stab;
                term.delta_size = p.delta_policy == DeltaPolicy::stabilizer ? stab : 0;
                term.d_eta = BigNat(1);
                for (std::uint32_t cls : w) term.d_eta *= class_dims[cls];

                const double d = term.d_eta.to_double();
                const double d_alpha = std::pow(d, p.alpha);
                const double induce = static_cast<double>(term.m_eta) *
                                      static_cast<double>(period * period) * d_alpha;
                const double extend =
                    static_cast<double>(term.delta_size) *
                    (r * d_alpha +
                     d * d * p.big_o_constant * r * std::log2(static_cast<double>(stab)));
                term.term_value = induce + extend;
                report.bound += term.term_value;
                report.per_orbit_breakdown.push_back(std::move(term));
            },
            std::numeric_limits<std::uint64_t>::max());
    }
    report.reduced_complexity = report.bound / report.group_order.to_double();
    return report;
}

}  // namespace

void validate(const CostParams& p) {
    if (p.alpha < 2.0) throw std::domain_error("cost params: alpha must be >= 2");
    if (!(p.big_o_constant > 0.0))
        throw std::domain_error("cost params: big_o_constant must be positive");
}

BigNat naive_cost(const RSpec& R) {
    const BigNat order = reps::group_order(R);
    return order * order;
}

double fft_bound(const RSpec& R, const CostParams& p, std::uint64_t irrep_cap) {
    validate(p);
    return build_report(R, p, irrep_cap).bound;
}

CostReport cost_report(const RSpec& R, const CostParams& p, std::uint64_t irrep_cap) {
    validate(p);
    return build_report(R, p, irrep_cap);
}

std::string to_json(const CostReport& r) {
    std::string out = "{\"rspec\":[";
    for (std::size_t i = 0; i < r.rspec.height(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.rspec.component(i));
    }
    out += "],\"group_order\":\"" + r.group_order.str() + "\"";
    out += ",\"naive_cost\":\"" + r.naive_cost.str() + "\"";
    out += ",\"bound\":" + fmt_g6(r.bound);
    out += ",\"reduced_complexity\":" + fmt_g6(r.reduced_complexity);
    out += ",\"units\":\"scalar operations (model)\"";
    out += ",\"k_term\":" + fmt_g6(r.k_term);
    out += ",\"per_orbit_breakdown\":[";
    for (std::size_t i = 0; i < r.per_orbit_breakdown.size(); ++i) {
        const OrbitTerm& t = r.per_orbit_breakdown[i];
        if (i) out += ',';
        out += "{\"word\":[";
        for (std::size_t j = 0; j < t.word.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(t.word[j]);
        }
        out += "],\"d_eta\":\"" + t.d_eta.str() + "\"";
        out += ",\"m_eta\":" + std::to_string(t.m_eta);
        out += ",\"index_G_over_H\":" + std::to_string(t.index_G_over_H);
        out += ",\"delta_size\":" + std::to_string(t.delta_size);
        out += ",\"term_value\":" + fmt_g6(t.term_value) + "}";
    }
    out += "]}";
    return out;
}

}  // namespace wreath::fftcost

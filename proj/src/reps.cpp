#include "wreath/reps.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "wreath/arith.hpp"
#include "wreath/group.hpp"

namespace wreath::reps {

namespace {

using boost::multiprecision::cpp_int;

// Signed accumulation of the double sum, exact division at each level.
BigNat moebius_recursion(const RSpec& R) {
    if (R.height() == 1) return BigNat(R.component(0));
    const BigNat prev = moebius_recursion(R.parent());
    const std::uint64_t r = R.top();
    cpp_int total = 0;
    for (const auto& [d, c] : arith::divisor_chain_pairs(r)) {
        const int mu = arith::moebius(c / d);
        if (mu == 0) continue;
        cpp_int term = prev.pow(r / c).raw() * cpp_int(d) * cpp_int(d);
        total += mu > 0 ? term : -term;
    }
    if (total < 0) throw std::logic_error("count recursion: negative interior sum");
    return BigNat(cpp_int(total)).div_exact(BigNat(r));
}

}  // namespace

BigNat group_order(const RSpec& R) {
    BigNat order(R.component(0));
    for (std::size_t i = 1; i < R.height(); ++i) {
        const std::uint64_t r = R.component(i);
        order = order.pow(r) * BigNat(r);
    }
    return order;
}

BigNat count_irreps(const RSpec& R) { return moebius_recursion(R); }

BigNat count_trees(const RSpec& R) { return moebius_recursion(R); }

std::map<BigNat, BigNat> dims_multiset(const RSpec& R, std::uint64_t irrep_cap) {
    std::map<BigNat, BigNat> dims;
    for (const labels::LabelTree& t : labels::enumerate_labels(R, irrep_cap))
        dims[labels::dimension(t, R)] += BigNat(1);
    return dims;
}

bool completeness_pass(const CompletenessReport& r) {
    if (r.irrep_count_recursion != r.irrep_count_enumerated) return false;
    if (r.conjugacy_class_count && *r.conjugacy_class_count != r.irrep_count_recursion)
        return false;
    return r.sum_dim_squares == r.group_order;
}

CompletenessReport verify_completeness(const RSpec& R, bool include_conjugacy,
                                       std::uint64_t irrep_cap, std::uint64_t conjugacy_cap) {
    CompletenessReport rep{R,
                           group_order(R),
                           count_irreps(R),
                           BigNat(0),
                           BigNat(0),
                           std::nullopt,
                           false};
    BigNat enumerated(0), sum_sq(0);
    for (const labels::LabelTree& t : labels::enumerate_labels(R, irrep_cap)) {
        enumerated += BigNat(1);
        const BigNat d = labels::dimension(t, R);
        sum_sq += d * d;
    }
    rep.irrep_count_enumerated = enumerated;
    rep.sum_dim_squares = sum_sq;
    if (include_conjugacy)
        rep.conjugacy_class_count = groups::conjugacy_class_count(R, conjugacy_cap);
    rep.pass = completeness_pass(rep);
    return rep;
}

std::string to_json(const CompletenessReport& r) {
    std::string out = "{\"rspec\":[";
    for (std::size_t i = 0; i < r.rspec.height(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.rspec.component(i));
    }
    out += "],\"group_order\":\"" + r.group_order.str() + "\"";
    out += ",\"irrep_count_recursion\":\"" + r.irrep_count_recursion.str() + "\"";
    out += ",\"irrep_count_enumerated\":\"" + r.irrep_count_enumerated.str() + "\"";
    out += ",\"sum_dim_squares\":\"" + r.sum_dim_squares.str() + "\"";
    if (r.conjugacy_class_count)
        out += ",\"conjugacy_class_count\":\"" + r.conjugacy_class_count->str() + "\"";
    out += std::string(",\"pass\":") + (r.pass ? "true" : "false") + "}";
    return out;
}

}  // namespace wreath::reps

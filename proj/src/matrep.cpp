#include "wreath/matrep.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wreath/errors.hpp"
#include "wreath/reps.hpp"
#include "wreath/words.hpp"

namespace wreath::matrep {

namespace {

std::complex<double> root_of_unity(std::uint64_t numer, std::uint64_t denom) {
    // reduce the exact integer phase before touching floating point
    numer %= denom;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numer) /
                               static_cast<double>(denom));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

}  // namespace

struct IrrepModel::Node {
    std::uint32_t radix = 1;  // r at this level
    std::uint32_t chi = 0;    // root character exponent j
    bool leaf = true;

    std::vector<std::shared_ptr<const Node>> classes;  // one model per distinct child
    std::vector<std::uint32_t> word;                   // position -> class id
    std::uint32_t period = 1;
    std::uint32_t stab = 1;
    std::vector<Eigen::Index> pos_dims;  // child dimension per position
    std::vector<Eigen::Index> strides;   // row-major multi-index strides
    Eigen::Index tensor_dim = 1;
    Eigen::Index dim = 1;

    static std::shared_ptr<const Node> build(const RSpec& R, const labels::LabelTree& t,
                                             std::size_t height) {
        auto n = std::make_shared<Node>();
        n->radix = R.component(height - 1);
        n->chi = t.value;
        if (height == 1) return n;

        n->leaf = false;
        std::map<std::string, std::uint32_t> ids;
        for (const labels::LabelTree& c : t.children) {
            const std::string key = labels::serialize(c);
            auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(n->classes.size()));
            if (fresh) n->classes.push_back(build(R, c, height - 1));
            n->word.push_back(it->second);
        }
        n->period = static_cast<std::uint32_t>(words::period(n->word));
        n->stab = n->radix / n->period;

        n->pos_dims.resize(n->radix);
        n->strides.resize(n->radix);
        for (std::uint32_t i = 0; i < n->radix; ++i) n->pos_dims[i] = n->classes[n->word[i]]->dim;
        Eigen::Index stride = 1;
        for (std::uint32_t i = n->radix; i-- > 0;) {
            n->strides[i] = stride;
            stride *= n->pos_dims[i];
        }
        n->tensor_dim = stride;
        n->dim = static_cast<Eigen::Index>(n->period) * n->tensor_dim;
        return n;
    }

    ComplexMatrix evaluate(const groups::GroupElement& g) const {
        if (leaf)
            return ComplexMatrix::Constant(
                1, 1, root_of_unity(static_cast<std::uint64_t>(chi) * g.shift, radix));

        const std::uint32_t r = radix;
        const std::uint32_t m = g.shift;
        ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
        for (std::uint32_t a = 0; a < period; ++a) {
            // the unique coset column with shift^{-a} g shift^b inside the
            // inertia group, and the power e of the extension generator
            const std::uint32_t b = (a + period - m % period) % period;
            const std::uint32_t c = (m + r - a + b) % r;
            const std::uint32_t e = c / period;

            ComplexMatrix block = ComplexMatrix::Identity(1, 1);
            for (std::uint32_t i = 0; i < r; ++i)
                block = kron(block, classes[word[i]]->evaluate(g.parts[(i + r - a) % r]));

            const std::complex<double> tau =
                root_of_unity(static_cast<std::uint64_t>(chi) * e, stab);
            const std::uint32_t rot = (e * period) % r;
            ComplexMatrix permuted(tensor_dim, tensor_dim);
            for (Eigen::Index col = 0; col < tensor_dim; ++col) {
                // column of the factor-rotation operator P^e: digits shift by e*p
                Eigen::Index src = 0;
                for (std::uint32_t i = 0; i < r; ++i) {
                    const std::uint32_t from = (i + rot) % r;
                    const Eigen::Index digit = (col / strides[from]) % pos_dims[from];
                    src += digit * strides[i];
                }
                permuted.col(col) = block.col(src) * tau;
            }
            rho.block(static_cast<Eigen::Index>(a) * tensor_dim,
                      static_cast<Eigen::Index>(b) * tensor_dim, tensor_dim, tensor_dim) =
                permuted;
        }
        return rho;
    }
};

IrrepModel::IrrepModel(const RSpec& R, const labels::LabelTree& label)
    : rspec_(R), label_(labels::canonicalize(label, R)) {
    root_ = Node::build(rspec_, label_, rspec_.height());
}

Eigen::Index IrrepModel::dim() const { return root_->dim; }

ComplexMatrix IrrepModel::matrix(const groups::GroupElement& g) const {
    groups::check_shape(g, rspec_);
    return root_->evaluate(g);
}

std::complex<double> IrrepModel::character(const groups::GroupElement& g) const {
    return matrix(g).trace();
}

std::vector<labels::LabelTree> restriction_profile(const IrrepModel& m) {
    if (m.rspec().height() < 2)
        throw std::domain_error("restriction_profile: height-1 model has no base subgroup");
    const std::vector<labels::LabelTree>& children = m.label().children;
    const std::uint32_t p = m.root_->period;
    std::vector<labels::LabelTree> profile;
    profile.reserve(p);
    for (std::uint32_t a = 0; a < p; ++a)
        profile.push_back(labels::LabelTree{0, words::rotate(children, a)});
    return profile;
}

namespace {

std::vector<IrrepModel> all_models(const RSpec& R, std::uint64_t order_cap, const char* who) {
    const BigNat order = reps::group_order(R);
    if (order > BigNat(order_cap))
        throw capacity_error(std::string(who) + ": group order " + order.str() +
                             " exceeds cap of " + std::to_string(order_cap));
    std::vector<IrrepModel> models;
    for (const labels::LabelTree& t : labels::enumerate_labels(R)) models.emplace_back(R, t);
    return models;
}

}  // namespace

FourierCoefficients dft(const RSpec& R, const std::map<std::uint64_t, std::complex<double>>& f,
                        std::uint64_t order_cap) {
    const std::vector<IrrepModel> models = all_models(R, order_cap, "dft");
    const std::vector<groups::GroupElement> elements = groups::enumerate_elements(R, order_cap);

    std::string missing;
    int missing_count = 0;
    for (std::uint64_t i = 0; i < elements.size(); ++i) {
        if (f.contains(i)) continue;
        if (missing_count < 8)
            missing += (missing_count ? ", " : "") + groups::element_to_json(elements[i]);
        ++missing_count;
    }
    if (missing_count > 0)
        throw std::domain_error("dft: function value missing for " +
                                std::to_string(missing_count) + " element(s): " + missing +
                                (missing_count > 8 ? ", ..." : ""));
    for (const auto& [rank, value] : f)
        if (rank >= elements.size())
            throw std::domain_error("dft: rank " + std::to_string(rank) + " out of range");

    FourierCoefficients out;
    for (const IrrepModel& m : models) {
        ComplexMatrix acc = ComplexMatrix::Zero(m.dim(), m.dim());
        for (std::uint64_t i = 0; i < elements.size(); ++i)
            acc += f.at(i) * m.matrix(elements[i]);
        out.labels.push_back(m.label());
        out.coefficients.push_back(std::move(acc));
    }
    return out;
}

std::vector<std::complex<double>> idft(const RSpec& R, const FourierCoefficients& c,
                                       std::uint64_t order_cap) {
    const std::vector<IrrepModel> models = all_models(R, order_cap, "idft");
    if (c.labels.size() != models.size() || c.coefficients.size() != models.size())
        throw shape_error("idft: expected one coefficient per enumerated label");
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (c.labels[i] != models[i].label())
            throw shape_error("idft: label mismatch at position " + std::to_string(i));
        if (c.coefficients[i].rows() != models[i].dim() ||
            c.coefficients[i].cols() != models[i].dim())
            throw shape_error("idft: coefficient matrix has wrong shape at position " +
                              std::to_string(i));
    }

    const std::vector<groups::GroupElement> elements = groups::enumerate_elements(R, order_cap);
    const double order = static_cast<double>(elements.size());
    std::vector<std::complex<double>> f(elements.size());
    for (std::uint64_t i = 0; i < elements.size(); ++i) {
        const groups::GroupElement ginv = groups::inverse(R, elements[i]);
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < models.size(); ++j)
            acc += static_cast<double>(models[j].dim()) *
                   (c.coefficients[j] * models[j].matrix(ginv)).trace();
        f[i] = acc / order;
    }
    return f;
}

}  // namespace wreath::matrep

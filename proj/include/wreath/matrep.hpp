#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "wreath/group.hpp"
#include "wreath/labeltree.hpp"
#include "wreath/rspec.hpp"

namespace wreath::matrep {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::uint64_t kDefaultDftCap = 2000;

/// Explicit unitary matrix model of the irreducible indexed by a canonical
/// label. Height 1 is the character n -> e^{2 pi i j n / r1}. Above that the
/// model is induced from the inertia subgroup along coset representatives
/// shift^0..shift^{p-1}: the inner representation is the tensor product of
/// the children's models (equivalent children share one canonical model),
/// extended by the tensor-factor rotation operator P (rotation by the word
/// period p, P^s = I) times the root character e^{2 pi i j / s}.
class IrrepModel {
public:
    IrrepModel(const RSpec& R, const labels::LabelTree& label);

    const RSpec& rspec() const { return rspec_; }
    const labels::LabelTree& label() const { return label_; }
    Eigen::Index dim() const;

    // rho(g); dim x dim unitary. Shape mismatch with the RSpec throws.
    ComplexMatrix matrix(const groups::GroupElement& g) const;
    std::complex<double> character(const groups::GroupElement& g) const;

private:
    struct Node;
    RSpec rspec_;
    labels::LabelTree label_;
    std::shared_ptr<const Node> root_;
    friend std::vector<labels::LabelTree> restriction_profile(const IrrepModel&);
};

inline ComplexMatrix rep_matrix(const IrrepModel& m, const groups::GroupElement& g) {
    return m.matrix(g);
}
inline std::complex<double> character(const IrrepModel& m, const groups::GroupElement& g) {
    return m.character(g);
}

// The p rotated children-tuples whose product characters sum to the
// restriction of m to the base subgroup {top shift = 0}. Each tuple is
// returned as the height-k label with root value 0 and rotated children.
// Height-1 models have no base subgroup: domain error.
std::vector<labels::LabelTree> restriction_profile(const IrrepModel& m);

struct FourierCoefficients {
    std::vector<labels::LabelTree> labels;   // enumeration order
    std::vector<ComplexMatrix> coefficients; // aligned with labels
};

// f-hat(rho) = sum_g f(g) rho(g) for every enumerated label, summed in
// ascending element-rank order. f maps element rank -> value and must cover
// the whole group; absent elements are listed in the thrown domain error.
FourierCoefficients dft(const RSpec& R,
                        const std::map<std::uint64_t, std::complex<double>>& f_by_rank,
                        std::uint64_t order_cap = kDefaultDftCap);

// f(g) = (1/|G|) sum_rho dim(rho) tr(c(rho) rho(g^{-1})), indexed by rank.
std::vector<std::complex<double>> idft(const RSpec& R, const FourierCoefficients& c,
                                       std::uint64_t order_cap = kDefaultDftCap);

}  // namespace wreath::matrep

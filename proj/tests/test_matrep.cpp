#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "wreath/errors.hpp"
#include "wreath/matrep.hpp"
#include "wreath/reps.hpp"

using namespace wreath;
using matrep::ComplexMatrix;
using matrep::IrrepModel;

namespace {

std::vector<IrrepModel> models_of(const RSpec& R) {
    std::vector<IrrepModel> out;
    for (const auto& t : labels::enumerate_labels(R)) out.emplace_back(R, t);
    return out;
}

double unitarity_defect(const ComplexMatrix& m) {
    return (m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

// deterministic complex noise in the unit square
std::complex<double> noise(std::mt19937_64& rng) {
    const auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
    return {u() * 2.0 - 1.0, u() * 2.0 - 1.0};
}

}  // namespace

TEST_CASE("identity maps to the identity matrix; dims match the label dimension") {
    for (const RSpec& R : {RSpec({2, 2}), RSpec({2, 3}), RSpec({3, 2}), RSpec({2, 2, 2})}) {
        const groups::GroupElement e = groups::identity(R);
        for (const auto& m : models_of(R)) {
            CHECK(BigNat(static_cast<std::uint64_t>(m.dim())) == labels::dimension(m.label(), R));
            const ComplexMatrix at_e = m.matrix(e);
            CHECK((at_e - ComplexMatrix::Identity(m.dim(), m.dim())).cwiseAbs().maxCoeff() <
                  1e-12);
            CHECK(std::abs(m.character(e) - std::complex<double>(m.dim())) < 1e-12);
        }
    }
}

TEST_CASE("the all-zero label is the trivial representation") {
    const RSpec R({2, 2, 2});
    const IrrepModel triv(R, labels::enumerate_labels(R).front());
    REQUIRE(triv.dim() == 1);
    for (const auto& g : groups::enumerate_elements(R))
        CHECK(std::abs(triv.matrix(g)(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("W(2,2) spin model is an exhaustive homomorphism") {
    const RSpec R({2, 2});
    const IrrepModel spin(R, labels::LabelTree{0, {{0, {}}, {1, {}}}});
    REQUIRE(spin.dim() == 2);
    const auto all = groups::enumerate_elements(R);
    for (const auto& g : all)
        for (const auto& h : all) {
            const ComplexMatrix lhs = spin.matrix(groups::multiply(R, g, h));
            const ComplexMatrix rhs = spin.matrix(g) * spin.matrix(h);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
    // top shift generator has a traceless induced matrix
    const groups::GroupElement top{1, {{0, {}}, {0, {}}}};
    CHECK(std::abs(spin.character(top)) < 1e-12);
}

TEST_CASE("homomorphism and unitarity across small towers") {
    // (2,4) exercises words with period and stabilizer both nontrivial,
    // i.e. induction blocks carrying nontrivial extension phases
    for (const RSpec& R : {RSpec({2, 2}), RSpec({3, 2}), RSpec({2, 3}), RSpec({2, 4})}) {
        const auto all = groups::enumerate_elements(R);
        for (const auto& m : models_of(R)) {
            for (const auto& g : all) CHECK(unitarity_defect(m.matrix(g)) < 1e-9);
            for (const auto& g : all)
                for (const auto& h : all)
                    CHECK((m.matrix(groups::multiply(R, g, h)) - m.matrix(g) * m.matrix(h))
                              .cwiseAbs()
                              .maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("the mixed period-2 stabilizer-2 model of W(2,4) matches the hand table") {
    // children word (0,1,0,1): period 2, stabilizer 2, dim 2; the top shift
    // induces [[0, (-1)^j],[1, 0]] and its square is (-1)^j I
    const RSpec R({2, 4});
    for (std::uint32_t j = 0; j < 2; ++j) {
        const IrrepModel m(R, labels::LabelTree{j, {{0, {}}, {1, {}}, {0, {}}, {1, {}}}});
        REQUIRE(m.dim() == 2);
        groups::GroupElement top{1, {{0, {}}, {0, {}}, {0, {}}, {0, {}}}};
        const ComplexMatrix got = m.matrix(top);
        const double sgn = j == 0 ? 1.0 : -1.0;
        CHECK(std::abs(got(0, 0)) < 1e-12);
        CHECK(std::abs(got(1, 1)) < 1e-12);
        CHECK(std::abs(got(0, 1) - sgn) < 1e-12);
        CHECK(std::abs(got(1, 0) - 1.0) < 1e-12);
        const ComplexMatrix sq = got * got;
        CHECK((sq - sgn * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("characters are class functions with unit norm, pairwise orthogonal") {
    for (const RSpec& R : {RSpec({2, 2}), RSpec({3, 2}), RSpec({2, 4})}) {
        const auto all = groups::enumerate_elements(R);
        const auto models = models_of(R);
        std::vector<std::vector<std::complex<double>>> chars;
        for (const auto& m : models) {
            std::vector<std::complex<double>> chi;
            for (const auto& g : all) chi.push_back(m.character(g));
            chars.push_back(std::move(chi));
        }
        // constancy on conjugacy classes
        for (std::size_t mi = 0; mi < models.size(); ++mi)
            for (std::size_t gi = 0; gi < all.size(); ++gi)
                for (const auto& h : all) {
                    const auto conj = groups::multiply(
                        R, groups::multiply(R, h, all[gi]), groups::inverse(R, h));
                    const auto rank = groups::element_rank(R, conj);
                    CHECK(std::abs(chars[mi][gi] - chars[mi][rank]) < 1e-9);
                }
        // <chi_a, chi_b> = [a == b]
        for (std::size_t a = 0; a < models.size(); ++a)
            for (std::size_t b = 0; b < models.size(); ++b) {
                std::complex<double> inner = 0.0;
                for (std::size_t gi = 0; gi < all.size(); ++gi)
                    inner += chars[a][gi] * std::conj(chars[b][gi]);
                inner /= static_cast<double>(all.size());
                CHECK(std::abs(inner - (a == b ? 1.0 : 0.0)) < 1e-6);
            }
    }
}

TEST_CASE("restriction profile lists the rotated children tuples") {
    const RSpec R({2, 2});
    const IrrepModel spin(R, labels::LabelTree{0, {{0, {}}, {1, {}}}});
    const auto profile = restriction_profile(spin);
    REQUIRE(profile.size() == 2);
    CHECK(labels::serialize(profile[0]) == R"({"v":0,"c":[{"v":0},{"v":1}]})");
    CHECK(labels::serialize(profile[1]) == R"({"v":0,"c":[{"v":1},{"v":0}]})");

    const IrrepModel constant(R, labels::LabelTree{1, {{0, {}}, {0, {}}}});
    CHECK(restriction_profile(constant).size() == 1);

    const RSpec R23({2, 3});
    for (const auto& m : models_of(R23))
        if (m.dim() == 3) CHECK(restriction_profile(m).size() == 3);

    CHECK_THROWS_AS(restriction_profile(IrrepModel(RSpec({3}), labels::LabelTree{1, {}})),
                    std::domain_error);
}

TEST_CASE("restricted characters equal the sum of rotated product characters") {
    for (const RSpec& R : {RSpec({2, 2}), RSpec({2, 3})}) {
        const RSpec base = R.parent();
        for (const auto& m : models_of(R)) {
            const auto profile = restriction_profile(m);
            std::vector<std::vector<IrrepModel>> tuple_models;
            for (const auto& tuple : profile) {
                std::vector<IrrepModel> row;
                for (const auto& child : tuple.children) row.emplace_back(base, child);
                tuple_models.push_back(std::move(row));
            }
            for (const auto& g : groups::enumerate_elements(R)) {
                if (g.shift != 0) continue;
                std::complex<double> expect = 0.0;
                for (const auto& row : tuple_models) {
                    std::complex<double> prod = 1.0;
                    for (std::size_t i = 0; i < row.size(); ++i)
                        prod *= row[i].character(g.parts[i]);
                    expect += prod;
                }
                CHECK(std::abs(m.character(g) - expect) < 1e-9);
            }
        }
    }
}

TEST_CASE("dft of the delta at identity is the identity in every coefficient") {
    const RSpec R({2, 2});
    std::map<std::uint64_t, std::complex<double>> f;
    for (std::uint64_t i = 0; i < 8; ++i) f[i] = (i == 0) ? 1.0 : 0.0;
    const auto coeffs = matrep::dft(R, f);
    REQUIRE(coeffs.labels.size() == 5);
    for (const auto& c : coeffs.coefficients)
        CHECK((c - ComplexMatrix::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dft of the constant function is |G| at the trivial label and zero elsewhere") {
    const RSpec R({2, 2});
    std::map<std::uint64_t, std::complex<double>> f;
    for (std::uint64_t i = 0; i < 8; ++i) f[i] = 1.0;
    const auto coeffs = matrep::dft(R, f);
    for (std::size_t j = 0; j < coeffs.labels.size(); ++j) {
        if (coeffs.labels[j] == labels::enumerate_labels(R).front()) {
            REQUIRE(coeffs.coefficients[j].rows() == 1);
            CHECK(std::abs(coeffs.coefficients[j](0, 0) - 8.0) < 1e-12);
        } else {
            CHECK(coeffs.coefficients[j].cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("dft round trip on W(3,2)") {
    const RSpec R({3, 2});
    std::mt19937_64 rng(20240917);
    std::map<std::uint64_t, std::complex<double>> f;
    for (std::uint64_t i = 0; i < 18; ++i) f[i] = noise(rng);
    const auto back = matrep::idft(R, matrep::dft(R, f));
    double max_err = 0.0;
    for (const auto& [rank, value] : f) max_err = std::max(max_err, std::abs(back[rank] - value));
    CHECK(max_err < 1e-8);
}

TEST_CASE("idft of zero coefficients is the zero function; delta round-trips") {
    const RSpec R({2, 2});
    const auto enumerated = labels::enumerate_labels(R);
    matrep::FourierCoefficients zero;
    for (const auto& t : enumerated) {
        const auto d = *labels::dimension(t, R).to_u64();
        zero.labels.push_back(t);
        zero.coefficients.push_back(
            ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    }
    for (const auto& v : matrep::idft(R, zero)) CHECK(std::abs(v) < 1e-15);

    std::map<std::uint64_t, std::complex<double>> delta;
    for (std::uint64_t i = 0; i < 8; ++i) delta[i] = (i == 0) ? 1.0 : 0.0;
    const auto back = matrep::idft(R, matrep::dft(R, delta));
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(std::abs(back[i] - (i == 0 ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("dft after idft recovers random coefficients") {
    const RSpec R({3, 2});
    std::mt19937_64 rng(7777);
    matrep::FourierCoefficients c;
    for (const auto& t : labels::enumerate_labels(R)) {
        const auto d = static_cast<Eigen::Index>(*labels::dimension(t, R).to_u64());
        ComplexMatrix m(d, d);
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) m(i, j) = noise(rng);
        c.labels.push_back(t);
        c.coefficients.push_back(std::move(m));
    }
    const auto f = matrep::idft(R, c);
    std::map<std::uint64_t, std::complex<double>> f_map;
    for (std::uint64_t i = 0; i < f.size(); ++i) f_map[i] = f[i];
    const auto c2 = matrep::dft(R, f_map);
    for (std::size_t j = 0; j < c.coefficients.size(); ++j)
        CHECK((c.coefficients[j] - c2.coefficients[j]).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("Parseval on W(2,2,2)") {
    const RSpec R({2, 2, 2});
    std::mt19937_64 rng(424242);
    std::map<std::uint64_t, std::complex<double>> f;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < 128; ++i) {
        f[i] = noise(rng);
        sum_sq += std::norm(f[i]);
    }
    const auto coeffs = matrep::dft(R, f);
    double rhs = 0.0;
    for (std::size_t j = 0; j < coeffs.labels.size(); ++j)
        rhs += labels::dimension(coeffs.labels[j], R).to_double() *
               coeffs.coefficients[j].squaredNorm();
    rhs /= 128.0;
    CHECK(std::abs(sum_sq - rhs) / sum_sq < 1e-8);
}

TEST_CASE("dft failure modes") {
    const RSpec R({2, 2});
    std::map<std::uint64_t, std::complex<double>> partial{{0, 1.0}, {3, 2.0}};
    bool threw = false;
    try {
        matrep::dft(R, partial);
    } catch (const std::domain_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("missing for 6") != std::string::npos);
        CHECK(std::string(e.what()).find(R"({"p":[{"z":0},{"z":1}],"z":0})") != std::string::npos);
    }
    CHECK(threw);
    CHECK_THROWS_AS(matrep::dft(RSpec({2, 2, 3}), partial, 100), capacity_error);

    matrep::FourierCoefficients bad;
    CHECK_THROWS_AS(matrep::idft(R, bad), shape_error);
}

TEST_CASE("rep_matrix rejects mismatched elements") {
    const IrrepModel m(RSpec({2, 2}), labels::LabelTree{0, {{0, {}}, {0, {}}}});
    CHECK_THROWS_AS(m.matrix(groups::GroupElement{0, {}}), shape_error);
}

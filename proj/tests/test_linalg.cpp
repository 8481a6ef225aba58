#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "coronaspec/eigensolver.hpp"
#include "coronaspec/generators.hpp"
#include "coronaspec/graph_matrices.hpp"
#include "coronaspec/spectrum.hpp"
#include "test_support.hpp"

using namespace coronaspec;
using testsupport::from_sym;
using testsupport::gauss_inverse;
using testsupport::multiply;

namespace {

/// Determinant via the library eigensolver (symmetric input only);
/// test-only oracle for the block-determinant identity.
double sym_determinant(const DenseSymMatrix& m) {
    double det = 1.0;
    for (double v : symmetric_eigenvalues(m).values) det *= v;
    return det;
}

DenseSymMatrix submatrix(const DenseSymMatrix& m, int row0, int col0, int size) {
    REQUIRE(row0 == col0);  // symmetric blocks only
    DenseSymMatrix out(size);
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) out.set(i, j, m(row0 + i, col0 + j));
    return out;
}

}  // namespace

TEST_CASE("normalized_laplacian entries") {
    const auto lk2 = normalized_laplacian(complete(2));
    CHECK(lk2(0, 0) == 1.0);
    CHECK(lk2(1, 1) == 1.0);
    CHECK(lk2(0, 1) == -1.0);

    const auto lc3 = normalized_laplacian(cycle(3));
    for (int i = 0; i < 3; ++i) CHECK(lc3(i, i) == 1.0);
    CHECK(lc3(0, 1) == -0.5);
    CHECK(lc3(0, 2) == -0.5);
    CHECK(lc3(1, 2) == -0.5);

    // A single vertex has no degree to normalize by.
    CHECK_THROWS_WITH(normalized_laplacian(complete(1)),
                      Catch::Matchers::ContainsSubstring("isolated vertex"));
}

TEST_CASE("hadamard product") {
    const auto lk2 = normalized_laplacian(complete(2));
    const auto sq = hadamard(lk2, lk2);
    CHECK(sq(0, 0) == 1.0);
    CHECK(sq(0, 1) == 1.0);
    CHECK(sq(1, 1) == 1.0);

    // A . I = diag(A).
    std::mt19937 rng(3);
    const auto a = testsupport::random_symmetric(6, rng);
    DenseSymMatrix eye(6);
    for (int i = 0; i < 6; ++i) eye.set(i, i, 1.0);
    const auto masked = hadamard(a, eye);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(masked(i, j) == (i == j ? a(i, i) : 0.0));

    // Commutativity on random symmetric pairs.
    const auto b = testsupport::random_symmetric(6, rng);
    CHECK(hadamard(a, b).max_abs_difference(hadamard(b, a)) == 0.0);

    CHECK_THROWS_AS(hadamard(a, DenseSymMatrix(5)), std::invalid_argument);
}

TEST_CASE("DenseSymMatrix limits and symmetry") {
    CHECK_THROWS_WITH(DenseSymMatrix(2001), Catch::Matchers::ContainsSubstring("dense limit"));
    DenseSymMatrix m(3);
    m.set(0, 2, -4.5);
    CHECK(m(2, 0) == -4.5);
}

TEST_CASE("symmetric_eigenvalues on small exact cases") {
    DenseSymMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(1, 1, 2.0);
    m.set(0, 1, 1.0);
    const auto eig = symmetric_eigenvalues(m);
    REQUIRE(eig.size() == 2);
    CHECK_THAT(eig.values[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(eig.values[1], Catch::Matchers::WithinAbs(3.0, 1e-12));

    // Circulant oracle: eigenvalues of the C4 normalized Laplacian are
    // 1 - cos(2 pi k / 4) = {0, 1, 1, 2}.
    const auto c4 = symmetric_eigenvalues(normalized_laplacian(cycle(4)));
    const auto expected = SpectrumMultiset::from_values({0.0, 1.0, 1.0, 2.0});
    CHECK(c4.max_abs_difference(expected) <= 1e-12);
}

TEST_CASE("petersen normalized Laplacian spectrum") {
    // Adjacency spectrum {3, 1^5, (-2)^4} and 3-regularity give
    // L = I - A/3 with spectrum {0, (2/3)^5, (5/3)^4}.
    std::vector<double> expected{0.0};
    for (int i = 0; i < 5; ++i) expected.push_back(2.0 / 3.0);
    for (int i = 0; i < 4; ++i) expected.push_back(5.0 / 3.0);
    const auto actual = symmetric_eigenvalues(normalized_laplacian(petersen()));
    CHECK(actual.max_abs_difference(SpectrumMultiset::from_values(std::move(expected))) <= 1e-10);
}

TEST_CASE("cycle spectra match the circulant formula to 1e-10") {
    for (int n = 3; n <= 12; ++n) {
        std::vector<double> expected;
        for (int k = 0; k < n; ++k)
            expected.push_back(1.0 - std::cos(2.0 * std::numbers::pi * k / n));
        const auto actual = symmetric_eigenvalues(normalized_laplacian(cycle(n)));
        CHECK(actual.max_abs_difference(SpectrumMultiset::from_values(std::move(expected))) <=
              1e-10);
    }
}

TEST_CASE("normalized Laplacian spectra stay in [0, 2] and sum to the trace") {
    std::mt19937 rng(17);
    for (const auto& g :
         {cycle(7), complete(5), petersen(), hypercube(3), subdivision(petersen())}) {
        const auto eig = symmetric_eigenvalues(normalized_laplacian(g));
        REQUIRE(eig.size() == static_cast<std::size_t>(g.vertex_count()));
        CHECK(eig.values.front() >= -1e-9);
        CHECK(eig.values.back() <= 2.0 + 1e-9);
        double sum = 0.0;
        for (double v : eig.values) sum += v;
        CHECK_THAT(sum, Catch::Matchers::WithinAbs(g.vertex_count(), 1e-9));
    }
}

TEST_CASE("kernel multiplicity equals the number of connected components") {
    auto near_zero_count = [](const SpectrumMultiset& s) {
        int count = 0;
        for (double v : s.values)
            if (std::abs(v) <= 1e-9) ++count;
        return count;
    };
    CHECK(near_zero_count(symmetric_eigenvalues(normalized_laplacian(cycle(4)))) == 1);
    const auto two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(near_zero_count(symmetric_eigenvalues(normalized_laplacian(two_k2))) == 2);
    const auto three_parts = disjoint_union(disjoint_union(cycle(3), cycle(4)), complete(2));
    CHECK(near_zero_count(symmetric_eigenvalues(normalized_laplacian(three_parts))) == 3);
}

TEST_CASE("line-graph adjacency spectrum via the regular shift identity") {
    // For an r-regular base, the line graph's adjacency spectrum is
    // {2(r-1) - r mu} over the normalized Laplacian spectrum, plus -2
    // repeated m - n times.
    for (const auto& g : {cycle(5), complete(4), petersen()}) {
        const int r = check_regular(g).degree;
        std::vector<double> expected;
        for (double mu : symmetric_eigenvalues(normalized_laplacian(g)).values)
            expected.push_back(2.0 * (r - 1) - r * mu);
        for (int i = 0; i < g.edge_count() - g.vertex_count(); ++i) expected.push_back(-2.0);
        const auto actual = symmetric_eigenvalues(adjacency_matrix(line_graph(g)));
        CHECK(actual.max_abs_difference(SpectrumMultiset::from_values(std::move(expected))) <=
              1e-8);
    }
}

TEST_CASE("block determinant factors through the Schur complement") {
    std::mt19937 rng(23);
    for (const auto [total, split] : {std::pair{6, 2}, {8, 3}, {9, 4}}) {
        const auto m = testsupport::random_symmetric(total, rng, /*diagonal_boost=*/6.0);
        const int qsize = total - split;

        const auto m1 = submatrix(m, 0, 0, split);
        const auto m4 = submatrix(m, split, split, qsize);
        testsupport::Mat m2 = testsupport::zeros(static_cast<std::size_t>(split), static_cast<std::size_t>(qsize));
        for (int i = 0; i < split; ++i)
            for (int j = 0; j < qsize; ++j) m2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, split + j);

        // Schur complement M1 - M2 M4^{-1} M2^T, symmetrized against
        // roundoff before the eigensolve.
        const auto correction = multiply(multiply(m2, gauss_inverse(from_sym(m4))), testsupport::transpose(m2));
        DenseSymMatrix schur(split);
        for (int i = 0; i < split; ++i)
            for (int j = i; j < split; ++j) {
                const double sym = 0.5 * (correction[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                                          correction[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
                schur.set(i, j, m1(i, j) - sym);
            }

        const double whole = sym_determinant(m);
        const double factored = sym_determinant(m4) * sym_determinant(schur);
        CHECK_THAT(factored, Catch::Matchers::WithinRel(whole, 1e-8));
    }
}

TEST_CASE("SpectrumMultiset comparison") {
    const auto a = SpectrumMultiset::from_values({2.0, 0.0, 1.0});
    CHECK(a.values == std::vector<double>{0.0, 1.0, 2.0});

    const auto b = SpectrumMultiset::from_values({0.0, 1.0 + 5e-9, 2.0});
    CHECK(a.matches(b));
    CHECK_FALSE(a.matches(b, 1e-12));

    const auto shorter = SpectrumMultiset::from_values({0.0, 1.0});
    CHECK(a.max_abs_difference(shorter) == std::numeric_limits<double>::infinity());
    CHECK_FALSE(a.matches(shorter));
}

TEST_CASE("eigensolver rejects nothing it should accept: random stress") {
    // Random symmetric matrices converge and reproduce the trace and
    // Frobenius norm through the spectrum.
    std::mt19937 rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        const int order = 30 + 10 * trial;
        const auto m = testsupport::random_symmetric(order, rng);
        const auto eig = symmetric_eigenvalues(m);
        REQUIRE(eig.size() == static_cast<std::size_t>(order));
        double trace = 0.0, sum_sq = 0.0;
        for (int i = 0; i < order; ++i) trace += m(i, i);
        double eig_sum = 0.0;
        for (double v : eig.values) {
            eig_sum += v;
            sum_sq += v * v;
        }
        CHECK_THAT(eig_sum, Catch::Matchers::WithinAbs(trace, 1e-9));
        CHECK_THAT(std::sqrt(sum_sq), Catch::Matchers::WithinRel(m.frobenius_norm(), 1e-10));
    }
}

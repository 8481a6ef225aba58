#pragma once

#include <cmath>
#include <stdexcept>

#include "coronaspec/dense_matrix.hpp"
#include "coronaspec/spectrum.hpp"

namespace coronaspec {

namespace detail {
inline double offdiagonal_norm(const DenseSymMatrix& a) {
    double sum = 0.0;
    for (int p = 0; p < a.order(); ++p)
        for (int q = p + 1; q < a.order(); ++q) sum += a(p, q) * a(p, q);
    return std::sqrt(2.0 * sum);
}
}  // namespace detail

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Converged when the off-diagonal Frobenius norm falls below
/// 1e-12 x the (rotation-invariant) Frobenius norm of the matrix; capped at
/// 100 sweeps, which cyclic Jacobi never needs at these dense sizes, so
/// hitting the cap is reported as an internal failure.
inline SpectrumMultiset symmetric_eigenvalues(const DenseSymMatrix& matrix) {
    constexpr double kRelTol = 1e-12;
    constexpr int kMaxSweeps = 100;

    const int k = matrix.order();
    if (k == 0) return SpectrumMultiset{};

    DenseSymMatrix a = matrix;  // rotated in place
    double* entries = a.data();
    auto at = [&](int i, int j) -> double& {
        return entries[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)];
    };

    const double off_target = kRelTol * a.frobenius_norm();
    // Entries this small can be skipped without stalling convergence: the
    // norm of everything skipped in a sweep stays under off_target / 2.
    const double skip_threshold = off_target / (2.0 * k);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (detail::offdiagonal_norm(a) <= off_target) {
            std::vector<double> diag(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) diag[static_cast<std::size_t>(i)] = at(i, i);
            return SpectrumMultiset::from_values(std::move(diag));
        }
        for (int p = 0; p < k; ++p) {
            for (int q = p + 1; q < k; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= skip_threshold) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int r = 0; r < k; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    at(r, p) = nrp;
                    at(p, r) = nrp;
                    at(r, q) = nrq;
                    at(q, r) = nrq;
                }
            }
        }
    }
    throw std::runtime_error(
        "symmetric_eigenvalues: no convergence within the sweep budget (internal error)");
}

}  // namespace coronaspec

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace coronaspec {

/// Sorted multiset of real eigenvalues with a comparison tolerance.
///
/// Multiset comparison = sort both sides, require equal cardinality, take
/// the max elementwise |difference|. For eigenvalue multisets with
/// multiplicities this is exactly matching under a global perturbation
/// bound, so no greedy pairing is needed.
struct SpectrumMultiset {
    std::vector<double> values;  // non-decreasing
    double tol = 1e-8;

    static SpectrumMultiset from_values(std::vector<double> v, double tolerance = 1e-8) {
        std::sort(v.begin(), v.end());
        return SpectrumMultiset{std::move(v), tolerance};
    }

    std::size_t size() const { return values.size(); }

    /// Max elementwise |difference|; +infinity when the cardinalities differ.
    double max_abs_difference(const SpectrumMultiset& other) const {
        if (values.size() != other.values.size())
            return std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            worst = std::max(worst, std::abs(values[i] - other.values[i]));
        return worst;
    }

    bool matches(const SpectrumMultiset& other, double tolerance) const {
        return max_abs_difference(other) <= tolerance;
    }

    bool matches(const SpectrumMultiset& other) const {
        return matches(other, std::max(tol, other.tol));
    }
};

}  // namespace coronaspec

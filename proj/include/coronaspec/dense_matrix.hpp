#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coronaspec {

/// Dense symmetric real matrix. set() mirrors (i,j) and (j,i), so instances
/// are exactly symmetric by construction. Storage is dense on purpose; the
/// hard order cap keeps accidental large inputs from degrading into
/// hour-long eigensolves.
class DenseSymMatrix {
public:
    static constexpr int kMaxOrder = 2000;

    explicit DenseSymMatrix(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("DenseSymMatrix: negative order");
        if (order > kMaxOrder)
            throw std::invalid_argument("DenseSymMatrix: order " + std::to_string(order) +
                                        " exceeds dense limit " + std::to_string(kMaxOrder));
        entries_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
    }

    int order() const { return order_; }

    double operator()(int i, int j) const {
        assert(i >= 0 && i < order_ && j >= 0 && j < order_);
        return entries_[static_cast<std::size_t>(i) * order_ + static_cast<std::size_t>(j)];
    }

    void set(int i, int j, double value) {
        assert(i >= 0 && i < order_ && j >= 0 && j < order_);
        entries_[static_cast<std::size_t>(i) * order_ + static_cast<std::size_t>(j)] = value;
        entries_[static_cast<std::size_t>(j) * order_ + static_cast<std::size_t>(i)] = value;
    }

    double* data() { return entries_.data(); }
    const double* data() const { return entries_.data(); }

    double frobenius_norm() const {
        double sum = 0.0;
        for (double x : entries_) sum += x * x;
        return std::sqrt(sum);
    }

    double max_abs_difference(const DenseSymMatrix& other) const {
        if (order_ != other.order_)
            throw std::invalid_argument("DenseSymMatrix: order mismatch " + std::to_string(order_) +
                                        " vs " + std::to_string(other.order_));
        double worst = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
        return worst;
    }

private:
    int order_ = 0;
    std::vector<double> entries_;
};

/// Entrywise (Hadamard) product of two symmetric matrices of equal order.
inline DenseSymMatrix hadamard(const DenseSymMatrix& a, const DenseSymMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("hadamard: order mismatch " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    DenseSymMatrix out(a.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i; j < a.order(); ++j) out.set(i, j, a(i, j) * b(i, j));
    return out;
}

}  // namespace coronaspec

#pragma once

#include <cmath>
#include <vector>

#include "nlbound/errors.hpp"

namespace nlbound {

// Dense real symmetric matrix; set() mirrors, so storage is exactly
// symmetric by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
        if (order < 1) raise(errc::invalid_argument, "matrix order must be positive");
    }

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    double off_diagonal_norm() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                double x = (*this)(i, j);
                s += 2.0 * x * x;
            }
        return std::sqrt(s);
    }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

}  // namespace nlbound

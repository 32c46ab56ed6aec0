#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "levyfv/errors.hpp"

namespace levyfv {

/// Cell-averaged state on a uniform periodic lattice of n^d cells with
/// spacing dx. Values are stored flat, axis 0 fastest.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(int dim, int n, double dx, double origin = 0.0)
        : dim_(dim), n_(n), dx_(dx), origin_(origin), v_(size_of(dim, n), 0.0) {
        if (dim < 1 || dim > 2) throw ShapeMismatch("grid dimension must be 1 or 2");
        if (n < 2) throw ShapeMismatch("grid needs at least 2 cells per axis");
        if (!(dx > 0.0)) throw ShapeMismatch("cell width must be positive");
    }

    static std::size_t size_of(int dim, int n) {
        std::size_t s = 1;
        for (int i = 0; i < dim; ++i) s *= static_cast<std::size_t>(n);
        return s;
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double dx() const { return dx_; }
    double origin() const { return origin_; }
    std::size_t size() const { return v_.size(); }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    int wrap(int i) const {
        const int m = i % n_;
        return m < 0 ? m + n_ : m;
    }

    /// Flat index of the (periodically wrapped) multi-index.
    std::size_t index(int i0, int i1 = 0) const {
        if (dim_ == 1) return static_cast<std::size_t>(wrap(i0));
        return static_cast<std::size_t>(wrap(i0)) +
               static_cast<std::size_t>(n_) * static_cast<std::size_t>(wrap(i1));
    }

    double at(int i0, int i1 = 0) const { return v_[index(i0, i1)]; }
    double& at(int i0, int i1 = 0) { return v_[index(i0, i1)]; }

    /// Center coordinate of cell i along one axis.
    double center(int i) const { return origin_ + (i + 0.5) * dx_; }

    bool same_shape(const GridFunction& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && dx_ == o.dx_;
    }

private:
    int dim_ = 1;
    int n_ = 2;
    double dx_ = 1.0;
    double origin_ = 0.0;
    std::vector<double> v_;
};

}  // namespace levyfv

#ifndef GLD_LATTICE_HPP
#define GLD_LATTICE_HPP

#include "gld/tensor.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gld {

struct AnalyticVelocity;

/// Uniform lattice on [0,a1] (x [0,a2]). Axes beyond dim have one node.
struct Grid {
    int dim = 1;
    std::array<double, 2> extent{1.0, 0.0};
    std::array<int, 2> divisions{1, 0};
    std::array<double, 2> spacing{1.0, 0.0};

    int nodes(int axis) const { return axis < dim ? divisions[axis] + 1 : 1; }
    std::size_t size() const { return static_cast<std::size_t>(nodes(0)) * nodes(1); }
    // i runs fastest
    std::size_t index(int i, int j = 0) const { return static_cast<std::size_t>(j) * nodes(0) + i; }
    double coord(int axis, int i) const { return i * spacing[axis]; }
    Point node(int i, int j = 0) const { return {coord(0, i), dim > 1 ? coord(1, j) : 0.0}; }
    Point node_at(std::size_t idx) const {
        const int n0 = nodes(0);
        return node(static_cast<int>(idx % n0), static_cast<int>(idx / n0));
    }
    bool contains(const Point& y) const;
    double mesh_ratio() const;
};

Grid build_grid(int dim, std::array<double, 2> extents, std::array<int, 2> divisions, int p);

/// One time level of a symmetric tensor unknown, stored as three planes.
class SymTensorField {
public:
    SymTensorField() = default;
    explicit SymTensorField(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return c11_.size(); }

    Sym2 at(std::size_t idx) const { return {c11_[idx], c12_[idx], c22_[idx]}; }
    void set(std::size_t idx, const Sym2& v) {
        c11_[idx] = v.s11;
        c12_[idx] = v.s12;
        c22_[idx] = v.s22;
    }
    Sym2 get(int i, int j = 0) const { return at(grid_.index(i, j)); }
    void put(int i, int j, const Sym2& v) { set(grid_.index(i, j), v); }

    const std::vector<double>& plane(int c) const { return c == 0 ? c11_ : (c == 1 ? c12_ : c22_); }
    bool all_finite() const;

private:
    Grid grid_;
    std::vector<double> c11_, c12_, c22_;
};

/// floor((s-alpha)/delta0) on (alpha,beta), 0 below, N0 at or above beta.
int index_indicator(double s, double alpha, double beta, int N0);

struct TimeStepReport {
    double bound = 0.0;  // dt * sampled sup |grad u|
    bool satisfied = true;
    std::string message;
};

/// Advisory check of dt * |u|_{W^1,inf} <= 1/8. Never throws on a violation.
TimeStepReport validate_time_step(const AnalyticVelocity& velocity, double dt, double T,
                                  const Grid& grid, int samples);

}  // namespace gld

#endif  // GLD_LATTICE_HPP

#ifndef GLD_INTERP_HPP
#define GLD_INTERP_HPP

#include "gld/lattice.hpp"

namespace gld {

double eta1(int i, double delta, double s);
double eta2(int i, double delta, double s);

/// Nodes and weights of the cell containing y; 2 (p=1) or 3 (p=2) per axis.
struct Stencil {
    int n = 0;
    std::array<int, 2> first{0, 0};
    std::array<std::array<double, 3>, 2> w{};
};

Stencil stencil(const Grid& grid, const Point& y, int p);

/// Lagrange interpolation of order p at y. Throws PointOutsideDomain.
Sym2 interpolate(const SymTensorField& field, const Point& y, int p);

// unchecked variant for the scheme kernels, y must lie in the closed domain
Sym2 interpolate_unchecked(const SymTensorField& field, const Point& y, int p);

}  // namespace gld

#endif  // GLD_INTERP_HPP

#include "gld/interp.hpp"

#include "gld/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gld {

double eta1(int i, double delta, double s) {
    const double r = s / delta;
    if (s >= (i - 1) * delta && s <= i * delta) return r - i + 1;
    if (s >= i * delta && s <= (i + 1) * delta) return i + 1 - r;
    return 0.0;
}

double eta2(int i, double delta, double s) {
    const double r = s / delta;
    if (i % 2 == 0) {
        if (s >= (i - 2) * delta && s < i * delta) return (r - i + 1) * (0.5 * r - 0.5 * i + 1);
        if (s >= i * delta && s <= (i + 2) * delta) return (i + 1 - r) * (0.5 * i + 1 - 0.5 * r);
        return 0.0;
    }
    if (s >= (i - 1) * delta && s <= (i + 1) * delta) return (r - i + 1) * (i + 1 - r);
    return 0.0;
}

Stencil stencil(const Grid& grid, const Point& y, int p) {
    Stencil st;
    st.n = p + 1;
    for (int a = 0; a < 2; ++a) {
        auto& w = st.w[a];
        if (a >= grid.dim) {
            st.first[a] = 0;
            w = {1.0, 0.0, 0.0};
            continue;
        }
        const int N = grid.divisions[a];
        const double h = grid.spacing[a];
        if (p == 1) {
            const int i0 = std::min(index_indicator(y[a], 0.0, grid.extent[a], N), N - 1);
            const double r = y[a] / h - i0;
            st.first[a] = i0;
            w = {1.0 - r, r, 0.0};
        } else {
            const int M = N / 2;
            const int k0 = std::min(index_indicator(y[a], 0.0, grid.extent[a], M), M - 1);
            const double r = y[a] / h - 2 * k0;
            st.first[a] = 2 * k0;
            w = {0.5 * (r - 1.0) * (r - 2.0), r * (2.0 - r), 0.5 * r * (r - 1.0)};
        }
    }
    return st;
}

Sym2 interpolate_unchecked(const SymTensorField& field, const Point& y, int p) {
    const Grid& g = field.grid();
    const Stencil st = stencil(g, y, p);
    const int nj = g.dim > 1 ? st.n : 1;
    Sym2 out;
    for (int b = 0; b < nj; ++b) {
        const int j = st.first[1] + b;
        const double wy = st.w[1][b];
        Sym2 row;
        for (int a = 0; a < st.n; ++a) {
            const Sym2 v = field.get(st.first[0] + a, j);
            const double wx = st.w[0][a];
            row.s11 += wx * v.s11;
            row.s12 += wx * v.s12;
            row.s22 += wx * v.s22;
        }
        out.s11 += wy * row.s11;
        out.s12 += wy * row.s12;
        out.s22 += wy * row.s22;
    }
    return out;
}

Sym2 interpolate(const SymTensorField& field, const Point& y, int p) {
    if (p != 1 && p != 2) {
        throw Error(Errc::InvalidCombination, "interpolation order must be 1 or 2");
    }
    const Grid& g = field.grid();
    if (!g.contains(y)) {
        std::ostringstream os;
        os << "point (" << y[0] << ", " << y[1] << ") is outside the closed domain";
        throw Error(Errc::PointOutsideDomain, os.str());
    }
    if (p == 2) {
        for (int a = 0; a < g.dim; ++a) {
            if (g.divisions[a] % 2 != 0) {
                throw Error(Errc::OddDivisionForQuadratic, "p=2 needs even divisions");
            }
        }
    }
    return interpolate_unchecked(field, y, p);
}

}  // namespace gld

#include "gld/lattice.hpp"

#include "gld/errors.hpp"
#include "gld/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gld {

bool Grid::contains(const Point& y) const {
    for (int a = 0; a < dim; ++a) {
        if (!(y[a] >= 0.0 && y[a] <= extent[a])) return false;
    }
    return true;
}

double Grid::mesh_ratio() const {
    if (dim == 1) return 1.0;
    const double hmax = std::max(spacing[0], spacing[1]);
    const double hmin = std::min(spacing[0], spacing[1]);
    return hmax / hmin;
}

Grid build_grid(int dim, std::array<double, 2> extents, std::array<int, 2> divisions, int p) {
    if (dim != 1 && dim != 2) {
        throw Error(Errc::IncompatibleGrid, "dim must be 1 or 2");
    }
    if (p != 1 && p != 2) {
        throw Error(Errc::InvalidCombination, "interpolation order must be 1 or 2");
    }
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        if (!(extents[a] > 0.0)) {
            throw Error(Errc::NonPositiveExtent, "extent on axis " + std::to_string(a) + " must be > 0");
        }
        if (divisions[a] < 2) {
            throw Error(Errc::IncompatibleGrid, "need at least 2 divisions per axis");
        }
        if (p == 2 && divisions[a] % 2 != 0) {
            throw Error(Errc::OddDivisionForQuadratic,
                        "N=" + std::to_string(divisions[a]) + " is odd, p=2 needs an even count");
        }
        g.extent[a] = extents[a];
        g.divisions[a] = divisions[a];
        g.spacing[a] = extents[a] / divisions[a];
    }
    if (dim == 1) {
        g.extent[1] = 0.0;
        g.divisions[1] = 0;
        g.spacing[1] = 0.0;
    }
    return g;
}

SymTensorField::SymTensorField(const Grid& grid)
    : grid_(grid), c11_(grid.size(), 0.0), c12_(grid.size(), 0.0), c22_(grid.size(), 0.0) {}

bool SymTensorField::all_finite() const {
    for (const auto* v : {&c11_, &c12_, &c22_}) {
        for (double x : *v) {
            if (!std::isfinite(x)) return false;
        }
    }
    return true;
}

int index_indicator(double s, double alpha, double beta, int N0) {
    if (!(alpha < beta)) {
        throw Error(Errc::DegenerateInterval, "index_indicator needs alpha < beta");
    }
    if (N0 < 1) {
        throw Error(Errc::NonPositiveInput, "index_indicator needs N0 >= 1");
    }
    if (s <= alpha) return 0;
    // within one ulp of beta counts as beta
    if (s >= beta || std::nextafter(s, std::numeric_limits<double>::infinity()) >= beta) return N0;

    const double d0 = (beta - alpha) / N0;
    int i = static_cast<int>(std::floor((s - alpha) / d0));
    i = std::clamp(i, 0, N0 - 1);
    // repair the bracket i*d0 + alpha <= s < (i+1)*d0 + alpha after rounding
    while (i > 0 && i * d0 + alpha > s) --i;
    while (i < N0 - 1 && (i + 1) * d0 + alpha <= s) ++i;
    return i;
}

TimeStepReport validate_time_step(const AnalyticVelocity& velocity, double dt, double T,
                                  const Grid& grid, int samples) {
    TimeStepReport r;
    if (!(dt > 0.0) || samples < 1) {
        r.satisfied = false;
        r.message = "warning: dt must be positive and samples >= 1";
        return r;
    }
    double sup = 0.0;
    const int ny = grid.dim > 1 ? samples : 0;
    for (int it = 0; it <= samples; ++it) {
        const double t = T * it / samples;
        for (int j = 0; j <= ny; ++j) {
            for (int i = 0; i <= samples; ++i) {
                Point x{grid.extent[0] * i / samples, grid.dim > 1 ? grid.extent[1] * j / samples : 0.0};
                const Mat2 G = velocity.grad(x, t);
                const double row1 = std::abs(G.a11) + std::abs(G.a12);
                const double row2 = std::abs(G.a21) + std::abs(G.a22);
                sup = std::max({sup, row1, row2});
            }
        }
    }
    r.bound = dt * sup;
    r.satisfied = r.bound <= 0.125;
    if (!r.satisfied) {
        std::ostringstream os;
        os << "warning: dt*|grad u| = " << r.bound << " exceeds 1/8 (advisory)";
        r.message = os.str();
    }
    return r;
}

}  // namespace gld

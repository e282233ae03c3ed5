// Serial reference step. Written independently of the kernels in scheme.cpp:
// full d x d matrices, basis-function sums, no OpenMP. Tests compare the two.

#include "gld/errors.hpp"
#include "gld/interp.hpp"
#include "gld/scheme.hpp"

#include <algorithm>
#include <cmath>

namespace gld::reference {

namespace {

using M = std::array<std::array<double, 2>, 2>;

M full(const Sym2& s) { return {{{s.s11, s.s12}, {s.s12, s.s22}}}; }

Sym2 upper(const M& m) { return {m[0][0], m[0][1], m[1][1]}; }

M add(const M& a, double k, const M& b) {
    M r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + k * b[i][j];
    return r;
}

M scale(double k, const M& a) { return add(M{}, k, a); }

// L Z L^T with all four entries computed
M congruence(const M& L, const M& Z, int d) {
    M LZ{}, r{};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) LZ[i][j] += L[i][k] * Z[k][j];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) r[i][j] += LZ[i][k] * L[j][k];
    return r;
}

double basis(int p, int i, double h, double s) { return p == 1 ? eta1(i, h, s) : eta2(i, h, s); }

// sum over the containing cell of v_node * eta_i(y1) eta_j(y2)
M interp_sum(const SymTensorField& f, const Point& y, int p) {
    const Grid& g = f.grid();
    int lo[2] = {0, 0}, cnt[2] = {1, 1};
    Point yc = y;
    for (int a = 0; a < g.dim; ++a) {
        const int N = g.divisions[a];
        if (p == 1) {
            lo[a] = std::min(index_indicator(y[a], 0.0, g.extent[a], N), N - 1);
        } else {
            lo[a] = 2 * std::min(index_indicator(y[a], 0.0, g.extent[a], N / 2), N / 2 - 1);
        }
        cnt[a] = p + 1;
        yc[a] = std::clamp(y[a], lo[a] * g.spacing[a], (lo[a] + p) * g.spacing[a]);
    }
    M r{};
    for (int j = lo[1]; j < lo[1] + cnt[1]; ++j) {
        const double wy = g.dim > 1 ? basis(p, j, g.spacing[1], yc[1]) : 1.0;
        for (int i = lo[0]; i < lo[0] + cnt[0]; ++i) {
            const double w = basis(p, i, g.spacing[0], yc[0]) * wy;
            r = add(r, w, full(f.get(i, j)));
        }
    }
    return r;
}

bool inside(const Grid& g, const Point& y) {
    for (int a = 0; a < g.dim; ++a)
        if (y[a] < 0.0 || y[a] > g.extent[a]) return false;
    return true;
}

Point nearest(const Grid& g, const Point& y) {
    Point q{0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) {
        const double c = std::min(std::max(y[a], 0.0), g.extent[a]);
        q[a] = std::round(c / g.spacing[a]) * g.spacing[a];
    }
    return q;
}

}  // namespace

SymTensorField step(const SymTensorField& zeta_nm1, const SymTensorField* zeta_nm2,
                    const ProblemData& pb, const SchemeConfig& cfg, double t) {
    const Grid& g = zeta_nm1.grid();
    const int d = g.dim;
    const double dt = cfg.dt;
    SymTensorField out(g);

    for (int j = 0; j < g.nodes(1); ++j) {
        for (int i = 0; i < g.nodes(0); ++i) {
            const Point x = g.node(i, j);
            const Point u = pb.velocity.eval(x, t);
            const Mat2 Gm = pb.velocity.grad(x, t);
            const M G{{{Gm.a11, Gm.a12}, {Gm.a21, Gm.a22}}};
            M I{};
            for (int a = 0; a < d; ++a) I[a][a] = 1.0;

            Point y1{x[0] - dt * u[0], x[1] - dt * u[1]};
            Point y2{x[0] - 2.0 * dt * u[0], x[1] - 2.0 * dt * u[1]};
            const bool e1 = !inside(g, y1);
            const bool e2 = zeta_nm2 != nullptr && !inside(g, y2);
            if ((e1 || e2) && !pb.zeta_in) {
                throw Error(Errc::MissingInflowData, "reference step: upwind point left the domain");
            }
            if ((e1 || e2) && cfg.inflow == InflowPolicy::DirichletExact) {
                out.put(i, j, pb.zeta_in(x, t));
                continue;
            }

            const M Z = e1 ? full(pb.zeta_in(nearest(g, y1), t - dt)) : interp_sum(zeta_nm1, y1, cfg.p);
            const M B1 = congruence(add(I, dt, G), Z, d);
            M F = full(pb.source(x, t));
            if (d == 1) F[0][1] = F[1][0] = F[1][1] = 0.0;

            M B2{};
            if (zeta_nm2) {
                const M Zt = e2 ? full(pb.zeta_in(nearest(g, y2), t - 2.0 * dt))
                                : interp_sum(*zeta_nm2, y2, cfg.p);
                B2 = congruence(add(I, 2.0 * dt, G), Zt, d);
            }

            M r{};
            if (cfg.model.kind == ModelKind::PureUCTD) {
                if (!zeta_nm2) {
                    r = add(B1, dt, F);
                } else {
                    r = add(add(scale(4.0 / 3.0, B1), -1.0 / 3.0, B2), 2.0 * dt / 3.0, F);
                }
            } else {
                const double Wi = cfg.model.Wi, beta = cfg.model.beta;
                M D{};
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) D[a][b] = 0.5 * (G[a][b] + G[b][a]);
                const M rhs = add(F, 2.0 * (1.0 - beta), D);
                if (!zeta_nm2) {
                    r = scale(1.0 / (1.0 + Wi / dt), add(rhs, Wi / dt, B1));
                } else {
                    const M mem = add(scale(4.0, B1), -1.0, B2);
                    r = scale(1.0 / (1.0 + 3.0 * Wi / (2.0 * dt)), add(rhs, Wi / (2.0 * dt), mem));
                }
            }
            out.put(i, j, upper(r));
        }
    }

    if (cfg.neumann_outflow) {
        // axis 0 faces first, then axis 1, so corners see the updated column
        for (int a = 0; a < d; ++a) {
            const int N = g.divisions[a];
            const int span = a == 0 ? g.nodes(1) : g.nodes(0);
            for (int m = 0; m < span; ++m) {
                const int i0 = a == 0 ? 0 : m, j0 = a == 0 ? m : 0;
                const int iN = a == 0 ? N : m, jN = a == 0 ? m : N;
                if (pb.velocity.eval(g.node(i0, j0), t)[a] < 0.0)
                    out.put(i0, j0, out.get(a == 0 ? 1 : m, a == 0 ? m : 1));
                if (pb.velocity.eval(g.node(iN, jN), t)[a] > 0.0)
                    out.put(iN, jN, out.get(a == 0 ? N - 1 : m, a == 0 ? m : N - 1));
            }
        }
    }
    return out;
}

}  // namespace gld::reference

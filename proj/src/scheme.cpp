#include "gld/scheme.hpp"

#include "gld/errors.hpp"
#include "gld/interp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <omp.h>

namespace gld {

int time_steps(double T, double dt) {
    if (!(dt > 0.0)) throw Error(Errc::NonPositiveInput, "dt must be > 0");
    const double q = T / dt;
    const double r = std::round(q);
    if (q == r || std::nextafter(q, r) == r) return static_cast<int>(r);
    return static_cast<int>(std::floor(q));
}

int worker_count(int requested) {
    int n = requested > 0 ? requested : omp_get_max_threads();
    if (const char* env = std::getenv("GLD_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(n, 1);
}

SymTensorField sample_field(const Grid& grid, const std::function<Sym2(const Point&)>& f) {
    SymTensorField out(grid);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) out.set(idx, f(grid.node_at(idx)));
    return out;
}

namespace {

/// Closest lattice point to y, used by the clamped policy.
Point closest_node(const Grid& g, const Point& y) {
    Point q{0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) {
        const double c = std::clamp(y[a], 0.0, g.extent[a]);
        const int i = static_cast<int>(std::lround(c / g.spacing[a]));
        q[a] = g.coord(a, std::clamp(i, 0, g.divisions[a]));
    }
    return q;
}

struct StepInput {
    const SymTensorField* nm1 = nullptr;
    const SymTensorField* nm2 = nullptr;  // null on the first step
    const ProblemData* problem = nullptr;
    const SchemeConfig* config = nullptr;
    double t = 0.0;
};

/// Explicit update at one node. Sets missing when zeta_in was needed but absent.
Sym2 node_update(const Grid& g, std::size_t idx, const StepInput& in, bool& missing) {
    const SchemeConfig& cfg = *in.config;
    const ProblemData& pb = *in.problem;
    const double dt = cfg.dt;
    const double t = in.t;
    const Point x = g.node_at(idx);
    const Point u = pb.velocity.eval(x, t);
    const Mat2 G = pb.velocity.grad(x, t);

    const Point y1 = upwind_point(x, u, dt, 1);
    const bool out1 = !g.contains(y1);
    Point y2{};
    bool out2 = false;
    if (in.nm2) {
        y2 = upwind_point(x, u, dt, 2);
        out2 = !g.contains(y2);
    }
    if ((out1 || out2) && !pb.zeta_in) {
        missing = true;
        return {};
    }
    if ((out1 || out2) && cfg.inflow == InflowPolicy::DirichletExact) {
        return pb.zeta_in(x, t);
    }

    const Sym2 Z = out1 ? pb.zeta_in(closest_node(g, y1), t - dt) : interpolate_unchecked(*in.nm1, y1, cfg.p);
    const Sym2 A1 = conjugate(deformation_matrix(G, dt, 1), Z);
    const Sym2 F = pb.source(x, t);

    Sym2 A2;
    if (in.nm2) {
        const Sym2 Zt = out2 ? pb.zeta_in(closest_node(g, y2), t - 2.0 * dt)
                             : interpolate_unchecked(*in.nm2, y2, cfg.p);
        A2 = conjugate(deformation_matrix(G, dt, 2), Zt);
    }

    if (cfg.model.kind == ModelKind::PureUCTD) {
        if (!in.nm2) return A1 + dt * F;
        return (4.0 / 3.0) * A1 - (1.0 / 3.0) * A2 + (2.0 * dt / 3.0) * F;
    }

    // Oldroyd-B: zeta + Wi*A_h(zeta) = 2(1-beta)D + F, solved for zeta^n
    const double Wi = cfg.model.Wi;
    const Sym2 rhs = 2.0 * (1.0 - cfg.model.beta) * sym_part(G) + F;
    if (!in.nm2) return (1.0 / (1.0 + Wi / dt)) * (rhs + (Wi / dt) * A1);
    return (1.0 / (1.0 + 1.5 * Wi / dt)) * (rhs + (Wi / (2.0 * dt)) * (4.0 * A1 - A2));
}

void neumann_outflow(SymTensorField& f, const AnalyticVelocity& v, double t) {
    const Grid& g = f.grid();
    const int n0 = g.nodes(0), n1 = g.nodes(1);
    for (int a = 0; a < g.dim; ++a) {
        const int N = g.divisions[a];
        const int other = a == 0 ? n1 : n0;
        for (int m = 0; m < other; ++m) {
            for (int side = 0; side < 2; ++side) {
                const int k = side == 0 ? 0 : N;
                const int inner = side == 0 ? 1 : N - 1;
                const int i = a == 0 ? k : m, j = a == 0 ? m : k;
                const int ii = a == 0 ? inner : m, jj = a == 0 ? m : inner;
                const double un = v.eval(g.node(i, j), t)[a] * (side == 0 ? -1.0 : 1.0);
                if (un > 0.0) f.put(i, j, f.get(ii, jj));
            }
        }
    }
}

void check_setup(const ProblemData& pb, const SchemeConfig& cfg, const Grid& g) {
    if (cfg.p != 1 && cfg.p != 2) throw Error(Errc::InvalidCombination, "p must be 1 or 2");
    if (!(cfg.dt > 0.0)) throw Error(Errc::NonPositiveInput, "dt must be > 0");
    if (cfg.p == 2) {
        for (int a = 0; a < g.dim; ++a) {
            if (g.divisions[a] % 2 != 0) {
                throw Error(Errc::IncompatibleGrid, "p=2 needs an even number of divisions");
            }
        }
    }
    if (pb.velocity.dim != g.dim) {
        throw Error(Errc::IncompatibleGrid, "velocity dimension does not match the grid");
    }
    if (!pb.velocity.eval || !pb.velocity.grad || !pb.source) {
        throw Error(Errc::MissingValue, "problem needs velocity, grad and source");
    }
    if (cfg.model.kind == ModelKind::OldroydB &&
        !(cfg.model.Wi > 0.0 && cfg.model.beta > 0.0 && cfg.model.beta < 1.0)) {
        throw Error(Errc::InvalidCombination, "Oldroyd-B needs Wi > 0 and 0 < beta < 1");
    }
}

SymTensorField advance(const StepInput& in) {
    const Grid& g = in.nm1->grid();
    check_setup(*in.problem, *in.config, g);
    if (in.config->exec == ExecPolicy::SerialReference) {
        return reference::step(*in.nm1, in.nm2, *in.problem, *in.config, in.t);
    }
    SymTensorField out(g);
    std::atomic<bool> missing{false};
    const auto n = static_cast<std::ptrdiff_t>(g.size());
    const int workers = worker_count(in.config->threads);

#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        bool miss = false;
        const Sym2 v = node_update(g, static_cast<std::size_t>(idx), in, miss);
        if (miss) missing.store(true, std::memory_order_relaxed);
        out.set(static_cast<std::size_t>(idx), v);
    }

    if (missing.load()) {
        std::ostringstream os;
        os << "an upwind point left the domain at t=" << in.t << " and no inflow data is set";
        throw Error(Errc::MissingInflowData, os.str());
    }
    if (in.config->neumann_outflow) neumann_outflow(out, in.problem->velocity, in.t);
    return out;
}

}  // namespace

AhResult apply_Ah(const SymTensorField& zeta_n, const SymTensorField& zeta_nm1,
                  const SymTensorField* zeta_nm2, const AnalyticVelocity& velocity, double t_n,
                  double dt, int p, InflowPolicy policy, const TensorFn& zeta_in) {
    const Grid& g = zeta_n.grid();
    AhResult r{SymTensorField(g), std::vector<unsigned char>(g.size(), 0)};
    const bool clamp = policy == InflowPolicy::Clamped && static_cast<bool>(zeta_in);
    const auto n = static_cast<std::ptrdiff_t>(g.size());

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const Point x = g.node_at(idx);
        const Point u = velocity.eval(x, t_n);
        const Mat2 G = velocity.grad(x, t_n);
        const Point y1 = upwind_point(x, u, dt, 1);
        const bool out1 = !g.contains(y1);
        const Point y2 = upwind_point(x, u, dt, 2);
        const bool out2 = zeta_nm2 && !g.contains(y2);
        r.reachable[idx] = (out1 || out2) ? 0 : 1;
        if ((out1 || out2) && !clamp) continue;

        const Sym2 Z = out1 ? zeta_in(closest_node(g, y1), t_n - dt) : interpolate_unchecked(zeta_nm1, y1, p);
        const Sym2 A1 = conjugate(deformation_matrix(G, dt, 1), Z);
        if (!zeta_nm2) {
            r.value.set(idx, (1.0 / dt) * (zeta_n.at(idx) - A1));
            continue;
        }
        const Sym2 Zt = out2 ? zeta_in(closest_node(g, y2), t_n - 2.0 * dt)
                             : interpolate_unchecked(*zeta_nm2, y2, p);
        const Sym2 A2 = conjugate(deformation_matrix(G, dt, 2), Zt);
        r.value.set(idx, (0.5 / dt) * (3.0 * zeta_n.at(idx) - 4.0 * A1 + A2));
    }
    return r;
}

SymTensorField model_first_step(const SymTensorField& zeta0, const ProblemData& problem,
                                const SchemeConfig& config) {
    StepInput in{&zeta0, nullptr, &problem, &config, config.dt};
    return advance(in);
}

SymTensorField model_general_step(const SymTensorField& zeta_nm1, const SymTensorField& zeta_nm2,
                                  const ProblemData& problem, const SchemeConfig& config,
                                  double t_n) {
    StepInput in{&zeta_nm1, &zeta_nm2, &problem, &config, t_n};
    return advance(in);
}

namespace {

SolveResult run(const ProblemData& problem, const SchemeConfig& config, const Grid& grid,
                const StepObserver& observer, bool keep_series) {
    check_setup(problem, config, grid);
    if (!problem.zeta0) throw Error(Errc::MissingValue, "problem needs initial data");
    const int NT = time_steps(config.T, config.dt);
    if (NT < 2) throw Error(Errc::InvalidCombination, "T must allow at least two steps");

    SolveResult res;
    SymTensorField prev2 = sample_field(grid, problem.zeta0);
    if (observer) observer(0, 0.0, prev2);
    if (keep_series) res.series.push_back(prev2);

    SymTensorField prev = model_first_step(prev2, problem, config);
    if (observer) observer(1, config.dt, prev);
    if (keep_series) res.series.push_back(prev);

    for (int n = 2; n <= NT; ++n) {
        const double t = n * config.dt;
        SymTensorField next = model_general_step(prev, prev2, problem, config, t);
        if (observer) observer(n, t, next);
        if (keep_series) res.series.push_back(next);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    res.last = std::move(prev);
    res.steps = NT;
    return res;
}

}  // namespace

SolveResult solve_model(const ProblemData& problem, const SchemeConfig& config, const Grid& grid,
                        const StepObserver& observer, bool keep_series) {
    if (config.model.kind != ModelKind::PureUCTD) {
        throw Error(Errc::InvalidCombination, "solve_model expects the pure convected model");
    }
    return run(problem, config, grid, observer, keep_series);
}

SolveResult solve_oldroyd_b(const ProblemData& problem, const SchemeConfig& config,
                            const Grid& grid, const StepObserver& observer, bool keep_series) {
    if (config.model.kind != ModelKind::OldroydB) {
        throw Error(Errc::InvalidCombination, "solve_oldroyd_b expects an Oldroyd-B model");
    }
    return run(problem, config, grid, observer, keep_series);
}

void write_snapshot(const SymTensorField& field, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open snapshot file " + path);
    const Grid& g = field.grid();
    char buf[256];
    if (g.dim == 1) {
        os << "i,x,z11\n";
        for (int i = 0; i < g.nodes(0); ++i) {
            std::snprintf(buf, sizeof buf, "%d,%.16e,%.16e\n", i, g.coord(0, i), field.get(i).s11);
            os << buf;
        }
        return;
    }
    os << "i,j,x,y,z11,z12,z22\n";
    for (int j = 0; j < g.nodes(1); ++j) {
        for (int i = 0; i < g.nodes(0); ++i) {
            const Sym2 v = field.get(i, j);
            std::snprintf(buf, sizeof buf, "%d,%d,%.16e,%.16e,%.16e,%.16e,%.16e\n", i, j,
                          g.coord(0, i), g.coord(1, j), v.s11, v.s12, v.s22);
            os << buf;
        }
    }
}

}  // namespace gld

#ifndef GLD_SCHEME_HPP
#define GLD_SCHEME_HPP

#include "gld/kinematics.hpp"
#include "gld/lattice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gld {

enum class ModelKind { PureUCTD, OldroydB };

struct Model {
    ModelKind kind = ModelKind::PureUCTD;
    double Wi = 0.0;
    double beta = 0.0;
};

/// What a node does when an upwind point leaves the closed domain.
enum class InflowPolicy {
    DirichletExact,  // node takes zeta_in(node, t^n)
    Clamped,         // upwind value replaced by zeta_in at the closest lattice point
};

enum class ExecPolicy { Parallel, SerialReference };

struct SchemeConfig {
    int p = 1;
    double dt = 0.0;
    double T = 1.0;
    Model model;
    InflowPolicy inflow = InflowPolicy::DirichletExact;
    bool neumann_outflow = false;  // outflow nodes copy their inward neighbour
    ExecPolicy exec = ExecPolicy::Parallel;
    int threads = 0;  // 0: GLD_THREADS or the OpenMP default
};

/// floor(T/dt), snapping to the nearest integer when within one ulp of it.
int time_steps(double T, double dt);

/// Worker count for the parallel kernels, capped by GLD_THREADS.
int worker_count(int requested);

struct ProblemData {
    AnalyticVelocity velocity;
    TensorFn source;
    TensorFn zeta_in;  // may be empty when no upwind point ever exits
    std::function<Sym2(const Point&)> zeta0;
    TensorFn exact;  // optional
};

struct AhResult {
    SymTensorField value;
    std::vector<unsigned char> reachable;  // 1 when every upwind point stayed inside
};

/// Discrete GLD operator at t_n. zeta_nm2 == nullptr selects the first-step branch.
/// Exterior upwind points are resolved through zeta_in only under the clamped policy;
/// otherwise the node is marked unreachable and its value is zero.
AhResult apply_Ah(const SymTensorField& zeta_n, const SymTensorField& zeta_nm1,
                  const SymTensorField* zeta_nm2, const AnalyticVelocity& velocity, double t_n,
                  double dt, int p, InflowPolicy policy, const TensorFn& zeta_in = {});

SymTensorField model_first_step(const SymTensorField& zeta0, const ProblemData& problem,
                                const SchemeConfig& config);
SymTensorField model_general_step(const SymTensorField& zeta_nm1, const SymTensorField& zeta_nm2,
                                  const ProblemData& problem, const SchemeConfig& config,
                                  double t_n);

using StepObserver = std::function<void(int n, double t, const SymTensorField& field)>;

struct SolveResult {
    SymTensorField last;
    int steps = 0;
    std::vector<SymTensorField> series;  // n = 0..N_T, only when requested
};

SolveResult solve_model(const ProblemData& problem, const SchemeConfig& config, const Grid& grid,
                        const StepObserver& observer = {}, bool keep_series = false);
SolveResult solve_oldroyd_b(const ProblemData& problem, const SchemeConfig& config,
                            const Grid& grid, const StepObserver& observer = {},
                            bool keep_series = false);

SymTensorField sample_field(const Grid& grid, const std::function<Sym2(const Point&)>& f);

/// One row per node: i [j] x [y] z11 [z12 z22].
void write_snapshot(const SymTensorField& field, const std::string& path);

namespace reference {

// Straight-line serial implementation with full 2x2 matrices and interpolation
// summed over every lattice basis function. Slow; used to cross-check the kernels.
SymTensorField step(const SymTensorField& zeta_nm1, const SymTensorField* zeta_nm2,
                    const ProblemData& problem, const SchemeConfig& config, double t_n);

}  // namespace reference

}  // namespace gld

#endif  // GLD_SCHEME_HPP

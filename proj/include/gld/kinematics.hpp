#ifndef GLD_KINEMATICS_HPP
#define GLD_KINEMATICS_HPP

#include "gld/tensor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gld {

using VectorFn = std::function<Point(const Point&, double)>;
using MatrixFn = std::function<Mat2(const Point&, double)>;

/// Closed-form velocity. grad(i,k) = du_i/dx_k.
struct AnalyticVelocity {
    std::string name;
    int dim = 1;
    VectorFn eval;
    MatrixFn grad;
    VectorFn material_accel;  // Du/Dt, optional
};

/// Registry lookup; throws UnknownExample.
AnalyticVelocity velocity_field(const std::string& name);
std::vector<std::string> velocity_names();
/// Extension point. Replaces an entry with the same name.
void register_velocity(const AnalyticVelocity& v);

AnalyticVelocity zero_velocity(int dim);

Point upwind_point(const Point& x, const Point& u, double dt, int k);
Mat2 deformation_matrix(const Mat2& grad_u, double dt, int k);

/// X(x,t;s) by fixed-step RK4.
Point flow_map_oracle(const Point& x, double t, double s, const AnalyticVelocity& velocity,
                      int substeps);

/// L(x,t;t1,t2): dL/ds = grad u(X(x,t;s),s) L, L(t1) = I, by fixed-step RK4.
Mat2 deformation_oracle(const Point& x, double t, double t1, double t2,
                        const AnalyticVelocity& velocity, int substeps);

using TensorFn = std::function<Sym2(const Point&, double)>;
using TensorGradFn = std::function<std::array<Sym2, 2>(const Point&, double)>;

/// Tensor field with exact time and space partials.
struct AnalyticTensor {
    TensorFn value;
    TensorFn dt;
    TensorGradFn grad;  // [axis] -> d zeta / d x_axis
};

/// dz/dt + (u.grad)z - (grad u) z - z (grad u)^T
Sym2 uctd_analytic(const AnalyticVelocity& velocity, const AnalyticTensor& zeta,
                   const Point& x, double t);

}  // namespace gld

#endif  // GLD_KINEMATICS_HPP

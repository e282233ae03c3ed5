#include "gld/kinematics.hpp"

#include "gld/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace gld {

namespace {

using std::cos;
using std::exp;
using std::sin;
constexpr double pi = std::numbers::pi;

AnalyticVelocity make(std::string name, int dim, VectorFn u, MatrixFn g, VectorFn a) {
    return AnalyticVelocity{std::move(name), dim, std::move(u), std::move(g), std::move(a)};
}

std::map<std::string, AnalyticVelocity> builtin() {
    std::map<std::string, AnalyticVelocity> m;
    auto add = [&m](AnalyticVelocity v) { m.emplace(v.name, std::move(v)); };

    add(zero_velocity(1));
    add(zero_velocity(2));

    add(make("ex1d-i", 1,
             [](const Point&, double t) { return Point{t, 0.0}; },
             [](const Point&, double) { return Mat2{}; },
             [](const Point&, double) { return Point{1.0, 0.0}; }));
    add(make("ex1d-ii", 1,
             [](const Point& x, double t) { return Point{x[0] + t, 0.0}; },
             [](const Point&, double) { return Mat2{1.0, 0.0, 0.0, 0.0}; },
             [](const Point& x, double t) { return Point{1.0 + x[0] + t, 0.0}; }));
    add(make("ex1d-iii", 1,
             [](const Point& x, double t) { return Point{sin(x[0] + t), 0.0}; },
             [](const Point& x, double t) { return Mat2{cos(x[0] + t), 0.0, 0.0, 0.0}; },
             [](const Point& x, double t) {
                 const double c = cos(x[0] + t);
                 return Point{c + sin(x[0] + t) * c, 0.0};
             }));

    add(make("ex2d-i", 2,
             [](const Point&, double t) { return Point{t, t}; },
             [](const Point&, double) { return Mat2{}; },
             [](const Point&, double) { return Point{1.0, 1.0}; }));
    add(make("ex2d-ii", 2,
             [](const Point& x, double t) { return Point{x[0] + t, x[1] + t}; },
             [](const Point&, double) { return identity(); },
             [](const Point& x, double t) { return Point{1.0 + x[0] + t, 1.0 + x[1] + t}; }));
    add(make("ex2d-iii", 2,
             [](const Point& x, double t) {
                 const double s = sin(x[0] + x[1] + t);
                 return Point{s, s};
             },
             [](const Point& x, double t) {
                 const double c = cos(x[0] + x[1] + t);
                 return Mat2{c, c, c, c};
             },
             [](const Point& x, double t) {
                 const double s = sin(x[0] + x[1] + t), c = cos(x[0] + x[1] + t);
                 const double a = c * (1.0 + 2.0 * s);
                 return Point{a, a};
             }));

    add(make("venkatesan", 2,
             [](const Point& x, double t) {
                 const double e = exp(-0.1 * t);
                 return Point{e * sin(pi * x[0]), -pi * e * x[1] * cos(pi * x[0])};
             },
             [](const Point& x, double t) {
                 const double e = exp(-0.1 * t);
                 const double c = cos(pi * x[0]), s = sin(pi * x[0]);
                 return Mat2{pi * e * c, 0.0, pi * pi * e * x[1] * s, -pi * e * c};
             },
             [](const Point& x, double t) {
                 const double e = exp(-0.1 * t);
                 const double c = cos(pi * x[0]), s = sin(pi * x[0]);
                 const double u1 = e * s, u2 = -pi * e * x[1] * c;
                 const double a1 = -0.1 * u1 + pi * e * c * u1;
                 const double a2 = -0.1 * u2 + pi * pi * e * x[1] * s * u1 - pi * e * c * u2;
                 return Point{a1, a2};
             }));
    return m;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, AnalyticVelocity>& registry() {
    static std::map<std::string, AnalyticVelocity> r = builtin();
    return r;
}

}  // namespace

AnalyticVelocity zero_velocity(int dim) {
    return make(dim == 1 ? "zero-1d" : "zero-2d", dim,
                [](const Point&, double) { return Point{0.0, 0.0}; },
                [](const Point&, double) { return Mat2{}; },
                [](const Point&, double) { return Point{0.0, 0.0}; });
}

AnalyticVelocity velocity_field(const std::string& name) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw Error(Errc::UnknownExample, "no velocity field named '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> velocity_names() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    std::vector<std::string> out;
    for (const auto& kv : registry()) out.push_back(kv.first);
    return out;
}

void register_velocity(const AnalyticVelocity& v) {
    if (v.name.empty() || !v.eval || !v.grad) {
        throw Error(Errc::MissingValue, "a velocity needs a name, eval and grad");
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    registry()[v.name] = v;
}

Point upwind_point(const Point& x, const Point& u, double dt, int k) {
    return {x[0] - k * dt * u[0], x[1] - k * dt * u[1]};
}

Mat2 deformation_matrix(const Mat2& g, double dt, int k) {
    const double s = k * dt;
    return {1.0 + s * g.a11, s * g.a12, s * g.a21, 1.0 + s * g.a22};
}

namespace {

Point axpy(const Point& x, double a, const Point& y) { return {x[0] + a * y[0], x[1] + a * y[1]}; }

Mat2 mul(const Mat2& A, const Mat2& B) {
    return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
            A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
}

Mat2 axpy(const Mat2& X, double a, const Mat2& Y) {
    return {X.a11 + a * Y.a11, X.a12 + a * Y.a12, X.a21 + a * Y.a21, X.a22 + a * Y.a22};
}

}  // namespace

Point flow_map_oracle(const Point& x, double t, double s, const AnalyticVelocity& v, int substeps) {
    if (substeps < 1) throw Error(Errc::NonPositiveInput, "substeps must be >= 1");
    const double h = (s - t) / substeps;
    Point X = x;
    for (int k = 0; k < substeps; ++k) {
        const double tk = t + k * h;
        const Point k1 = v.eval(X, tk);
        const Point k2 = v.eval(axpy(X, 0.5 * h, k1), tk + 0.5 * h);
        const Point k3 = v.eval(axpy(X, 0.5 * h, k2), tk + 0.5 * h);
        const Point k4 = v.eval(axpy(X, h, k3), tk + h);
        for (int a = 0; a < 2; ++a) X[a] += h / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
    }
    return X;
}

Mat2 deformation_oracle(const Point& x, double t, double t1, double t2, const AnalyticVelocity& v,
                        int substeps) {
    if (substeps < 1) throw Error(Errc::NonPositiveInput, "substeps must be >= 1");
    Point X = flow_map_oracle(x, t, t1, v, substeps);
    Mat2 L = identity();
    const double h = (t2 - t1) / substeps;
    // 1D fields carry a dummy second axis; keep L22 = 1 there
    for (int k = 0; k < substeps; ++k) {
        const double sk = t1 + k * h;
        const Point u1 = v.eval(X, sk);
        const Mat2 l1 = mul(v.grad(X, sk), L);
        const Point X2 = axpy(X, 0.5 * h, u1);
        const Mat2 L2 = axpy(L, 0.5 * h, l1);
        const Point u2 = v.eval(X2, sk + 0.5 * h);
        const Mat2 l2 = mul(v.grad(X2, sk + 0.5 * h), L2);
        const Point X3 = axpy(X, 0.5 * h, u2);
        const Mat2 L3 = axpy(L, 0.5 * h, l2);
        const Point u3 = v.eval(X3, sk + 0.5 * h);
        const Mat2 l3 = mul(v.grad(X3, sk + 0.5 * h), L3);
        const Point X4 = axpy(X, h, u3);
        const Mat2 L4 = axpy(L, h, l3);
        const Point u4 = v.eval(X4, sk + h);
        const Mat2 l4 = mul(v.grad(X4, sk + h), L4);
        for (int a = 0; a < 2; ++a) X[a] += h / 6.0 * (u1[a] + 2.0 * u2[a] + 2.0 * u3[a] + u4[a]);
        const Mat2 incr = axpy(axpy(axpy(l1, 2.0, l2), 2.0, l3), 1.0, l4);
        L = axpy(L, h / 6.0, incr);
    }
    return L;
}

Sym2 uctd_analytic(const AnalyticVelocity& v, const AnalyticTensor& zeta, const Point& x, double t) {
    const Point u = v.eval(x, t);
    const Mat2 G = v.grad(x, t);
    const Sym2 z = zeta.value(x, t);
    const Sym2 zt = zeta.dt(x, t);
    const auto gz = zeta.grad(x, t);

    const double gz11 = G.a11 * z.s11 + G.a12 * z.s12;
    const double gz12 = G.a11 * z.s12 + G.a12 * z.s22;
    const double gz21 = G.a21 * z.s11 + G.a22 * z.s12;
    const double gz22 = G.a21 * z.s12 + G.a22 * z.s22;

    Sym2 r = zt + u[0] * gz[0];
    if (v.dim > 1) r = r + u[1] * gz[1];
    return r - Sym2{2.0 * gz11, gz12 + gz21, 2.0 * gz22};
}

}  // namespace gld

#include "gld/errors.hpp"
#include "gld/verification.hpp"

#include <cmath>
#include <numbers>

namespace gld {

namespace {

using std::cos;
using std::exp;
using std::sin;
constexpr double pi = std::numbers::pi;

AnalyticTensor exact_1d() {
    AnalyticTensor z;
    z.value = [](const Point& x, double t) { return Sym2{sin(x[0] + t) + 2.0, 0.0, 0.0}; };
    z.dt = [](const Point& x, double t) { return Sym2{cos(x[0] + t), 0.0, 0.0}; };
    z.grad = [](const Point& x, double t) {
        return std::array<Sym2, 2>{Sym2{cos(x[0] + t), 0.0, 0.0}, Sym2{}};
    };
    return z;
}

// sign = +1: [[sin+2, sin], [sin, sin+2]], sign = -1: [[sin+2, sin], [sin, -sin+2]]
AnalyticTensor exact_2d(double sign) {
    AnalyticTensor z;
    z.value = [sign](const Point& x, double t) {
        const double s = sin(x[0] + x[1] + t);
        return Sym2{s + 2.0, s, sign * s + 2.0};
    };
    z.dt = [sign](const Point& x, double t) {
        const double c = cos(x[0] + x[1] + t);
        return Sym2{c, c, sign * c};
    };
    z.grad = [sign](const Point& x, double t) {
        const double c = cos(x[0] + x[1] + t);
        return std::array<Sym2, 2>{Sym2{c, c, sign * c}, Sym2{c, c, sign * c}};
    };
    return z;
}

AnalyticTensor exact_venkatesan() {
    AnalyticTensor z;
    z.value = [](const Point& x, double t) {
        const double e = exp(-0.1 * t);
        return Sym2{e * sin(pi * x[0]), -pi * e * x[1] * cos(pi * x[0]),
                    e * sin(pi * x[0]) * cos(pi * x[1])};
    };
    z.dt = [](const Point& x, double t) {
        const double e = -0.1 * exp(-0.1 * t);
        return Sym2{e * sin(pi * x[0]), -pi * e * x[1] * cos(pi * x[0]),
                    e * sin(pi * x[0]) * cos(pi * x[1])};
    };
    z.grad = [](const Point& x, double t) {
        const double e = exp(-0.1 * t);
        const double S = sin(pi * x[0]), C = cos(pi * x[0]);
        const double S2 = sin(pi * x[1]), C2 = cos(pi * x[1]);
        return std::array<Sym2, 2>{Sym2{pi * e * C, pi * pi * e * x[1] * S, pi * e * C * C2},
                                   Sym2{0.0, -pi * e * C, -pi * e * S * S2}};
    };
    return z;
}

void attach_source(ManufacturedProblem& mp) {
    const AnalyticVelocity v = mp.velocity;
    const AnalyticTensor z = mp.exact;
    if (mp.model.kind == ModelKind::PureUCTD) {
        mp.source = [v, z](const Point& x, double t) { return uctd_analytic(v, z, x, t); };
        return;
    }
    const double Wi = mp.model.Wi, beta = mp.model.beta;
    mp.source = [v, z, Wi, beta](const Point& x, double t) {
        const Sym2 D = sym_part(v.grad(x, t));
        return z.value(x, t) + Wi * uctd_analytic(v, z, x, t) - 2.0 * (1.0 - beta) * D;
    };
}

}  // namespace

ProblemData ManufacturedProblem::data() const {
    ProblemData d;
    d.velocity = velocity;
    d.source = source;
    d.zeta_in = exact.value;
    d.exact = exact.value;
    auto value = exact.value;
    d.zeta0 = [value](const Point& x) { return value(x, 0.0); };
    return d;
}

std::vector<std::string> problem_names() {
    return {"ex1d-i", "ex1d-ii", "ex1d-iii", "ex2d-i", "ex2d-ii", "ex2d-iii", "oldb2d", "venkatesan"};
}

ManufacturedProblem manufactured_problem(const std::string& name, std::optional<double> Wi,
                                         std::optional<double> beta) {
    ManufacturedProblem mp;
    mp.name = name;
    if (name == "ex1d-i" || name == "ex1d-ii" || name == "ex1d-iii") {
        mp.dim = 1;
        mp.extent = {1.0, 0.0};
        mp.velocity = velocity_field(name);
        mp.exact = exact_1d();
    } else if (name == "ex2d-i" || name == "ex2d-ii" || name == "ex2d-iii") {
        mp.dim = 2;
        mp.extent = {1.0, 1.0};
        mp.velocity = velocity_field(name);
        mp.exact = exact_2d(1.0);
    } else if (name == "oldb2d") {
        mp.dim = 2;
        mp.extent = {1.0, 1.0};
        mp.velocity = velocity_field("ex2d-iii");
        mp.exact = exact_2d(-1.0);
        mp.model = {ModelKind::OldroydB, Wi.value_or(0.025), beta.value_or(1.0 / 9.0)};
    } else if (name == "venkatesan") {
        mp.dim = 2;
        mp.extent = {1.0, 1.0};
        mp.T = 0.5;
        mp.velocity = velocity_field("venkatesan");
        mp.exact = exact_venkatesan();
        mp.model = {ModelKind::OldroydB, Wi.value_or(0.25), beta.value_or(0.75)};
    } else {
        throw Error(Errc::UnknownExample, "no manufactured problem named '" + name + "'");
    }
    if (mp.model.kind == ModelKind::OldroydB &&
        !(mp.model.Wi > 0.0 && mp.model.beta > 0.0 && mp.model.beta < 1.0)) {
        throw Error(Errc::InvalidCombination, "Oldroyd-B needs Wi > 0 and 0 < beta < 1");
    }
    attach_source(mp);
    return mp;
}

Sym2 equation_residual_fd(const ManufacturedProblem& mp, const Point& x, double t, double step) {
    const auto& z = mp.exact.value;
    const double k = 0.5 / step;
    AnalyticTensor fd;
    fd.value = z;
    fd.dt = [&](const Point& y, double s) { return k * (z(y, s + step) - z(y, s - step)); };
    fd.grad = [&](const Point& y, double s) {
        std::array<Sym2, 2> g{};
        for (int a = 0; a < mp.dim; ++a) {
            Point yp = y, ym = y;
            yp[a] += step;
            ym[a] -= step;
            g[a] = k * (z(yp, s) - z(ym, s));
        }
        return g;
    };
    const Sym2 uc = uctd_analytic(mp.velocity, fd, x, t);
    const Sym2 F = mp.source(x, t);
    if (mp.model.kind == ModelKind::PureUCTD) return uc - F;
    const Sym2 D = sym_part(mp.velocity.grad(x, t));
    return z(x, t) + mp.model.Wi * uc - 2.0 * (1.0 - mp.model.beta) * D - F;
}

}  // namespace gld

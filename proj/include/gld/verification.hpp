#ifndef GLD_VERIFICATION_HPP
#define GLD_VERIFICATION_HPP

#include "gld/scheme.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gld {

struct ManufacturedProblem {
    std::string name;
    int dim = 1;
    std::array<double, 2> extent{1.0, 0.0};
    double T = 1.0;
    Model model;
    AnalyticVelocity velocity;
    AnalyticTensor exact;
    TensorFn source;

    int components() const { return dim == 1 ? 1 : 3; }
    ProblemData data() const;
};

/// Registry: ex1d-i, ex1d-ii, ex1d-iii, ex2d-i, ex2d-ii, ex2d-iii, oldb2d, venkatesan.
ManufacturedProblem manufactured_problem(const std::string& name,
                                         std::optional<double> Wi = std::nullopt,
                                         std::optional<double> beta = std::nullopt);
std::vector<std::string> problem_names();

/// Residual of the governing equation for F against the exact solution,
/// using central differences of the exact tensor. Used by the audit.
Sym2 equation_residual_fd(const ManufacturedProblem& problem, const Point& x, double t, double step);

using Errors = std::array<double, 3>;

/// Running max over n >= 1 of the nodal error, fed step by step.
class ErrorAccumulator {
public:
    ErrorAccumulator(const Grid& grid, TensorFn exact);
    void observe(int n, double t, const SymTensorField& field);
    const Errors& value() const { return E_; }

private:
    Grid grid_;
    TensorFn exact_;
    std::vector<Point> nodes_;
    Errors E_{0.0, 0.0, 0.0};
};

/// series[n] holds the field at t = n*dt; n = 0 is excluded from the norm.
Errors error_linf_linf(const std::vector<SymTensorField>& series, const TensorFn& exact, double dt);

double slope(double E_coarse, double E_fine, double dt_coarse, double dt_fine);

enum class DtRule { SqrtH, LinearH };  // dt = c sqrt(h) or dt = c h

struct StudyScheme {
    SchemeConfig base;  // p, policies, execution; dt and T are filled per run
    DtRule rule = DtRule::SqrtH;
    double c = 0.0;

    double dt_for(double h) const;
    std::string tag(const Model& model) const;
};

/// Default dt constants for an example: c for p=1, c' for p=2.
StudyScheme default_scheme(const ManufacturedProblem& problem, int p);
std::vector<int> default_N_list(const ManufacturedProblem& problem);

struct ConvergenceRow {
    int N = 0;
    double dt = 0.0;
    Errors E{0.0, 0.0, 0.0};
    std::optional<Errors> slope;
    std::string failure;  // non-empty when the row's run threw
};

struct ConvergenceTable {
    std::string scheme_tag;
    double c = 0.0;
    std::optional<double> Wi, beta;
    int components = 1;
    std::vector<ConvergenceRow> rows;
};

/// One solve on a uniform N x N grid with h = extent/N, returning E.
Errors run_single(const ManufacturedProblem& problem, const StudyScheme& scheme, int N,
                  double dt, const StepObserver& extra = {});

ConvergenceTable run_convergence_study(const ManufacturedProblem& problem,
                                       const StudyScheme& scheme, const std::vector<int>& N_list);

struct StabilityRow {
    int k = 0;
    double dt = 0.0;
    Errors E{0.0, 0.0, 0.0};
};

struct StabilityTable {
    std::string scheme_tag;
    double h = 0.0;
    int components = 1;
    std::vector<StabilityRow> rows;
};

StabilityTable run_stability_study(const ManufacturedProblem& problem, const StudyScheme& scheme,
                                   double h, int k_max);

struct TruncationRow {
    int N = 0;
    double dt = 0.0;
    double residual = 0.0;
    std::optional<double> slope;
};

/// max over n >= 2 and reachable nodes of |A_h(exact) - uctd(exact)|.
double truncation_residual(const ManufacturedProblem& problem, int p, int N, double dt);
std::vector<TruncationRow> run_truncation_study(const ManufacturedProblem& problem,
                                                const StudyScheme& scheme,
                                                const std::vector<int>& N_list);

std::string format_sci(double v);
std::string csv_field(const std::string& s);
std::string to_csv(const ConvergenceTable& table);
std::string to_markdown(const ConvergenceTable& table);
std::string to_csv(const StabilityTable& table);
std::string to_markdown(const StabilityTable& table);
std::string to_csv(const std::vector<TruncationRow>& rows);
std::string to_markdown(const std::vector<TruncationRow>& rows);

}  // namespace gld

#endif  // GLD_VERIFICATION_HPP

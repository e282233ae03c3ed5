#include "gld/verification.hpp"

#include "gld/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gld {

ErrorAccumulator::ErrorAccumulator(const Grid& grid, TensorFn exact)
    : grid_(grid), exact_(std::move(exact)) {
    if (!exact_) throw Error(Errc::MissingExact, "error norm needs an exact solution");
    nodes_.reserve(grid_.size());
    for (std::size_t idx = 0; idx < grid_.size(); ++idx) nodes_.push_back(grid_.node_at(idx));
}

void ErrorAccumulator::observe(int n, double t, const SymTensorField& field) {
    if (n < 1) return;  // the initial level is not part of the norm
    for (std::size_t idx = 0; idx < nodes_.size(); ++idx) {
        const Sym2 e = field.at(idx) - exact_(nodes_[idx], t);
        E_[0] = std::max(E_[0], std::abs(e.s11));
        E_[1] = std::max(E_[1], std::abs(e.s12));
        E_[2] = std::max(E_[2], std::abs(e.s22));
    }
}

Errors error_linf_linf(const std::vector<SymTensorField>& series, const TensorFn& exact, double dt) {
    if (!exact) throw Error(Errc::MissingExact, "error norm needs an exact solution");
    if (series.empty()) return {0.0, 0.0, 0.0};
    ErrorAccumulator acc(series.front().grid(), exact);
    for (std::size_t n = 1; n < series.size(); ++n) acc.observe(static_cast<int>(n), n * dt, series[n]);
    return acc.value();
}

double slope(double E_coarse, double E_fine, double dt_coarse, double dt_fine) {
    if (!(E_coarse > 0.0 && E_fine > 0.0 && dt_coarse > 0.0 && dt_fine > 0.0)) {
        throw Error(Errc::NonPositiveInput, "slope needs positive errors and steps");
    }
    if (!(dt_coarse > dt_fine)) {
        throw Error(Errc::NonPositiveInput, "slope needs dt_coarse > dt_fine");
    }
    return std::log(E_coarse / E_fine) / std::log(dt_coarse / dt_fine);
}

double StudyScheme::dt_for(double h) const {
    return rule == DtRule::SqrtH ? c * std::sqrt(h) : c * h;
}

std::string StudyScheme::tag(const Model& model) const {
    std::string t = base.p == 1 ? "S1" : "S2";
    if (model.kind == ModelKind::OldroydB) t += "'";
    return t;
}

StudyScheme default_scheme(const ManufacturedProblem& mp, int p) {
    StudyScheme s;
    s.base.p = p;
    s.rule = p == 1 ? DtRule::SqrtH : DtRule::LinearH;
    const bool oldb = mp.name == "oldb2d" || mp.name == "venkatesan";
    if (p == 1) {
        s.c = (mp.dim == 2 && !oldb) ? 1.0 / 20.0 : 1.0 / 50.0;
    } else if (mp.dim == 1) {
        s.c = 1.0;
    } else if (mp.name == "oldb2d") {
        s.c = 1.0 / 5.0;
    } else {
        s.c = 1.0 / 10.0;
    }
    return s;
}

std::vector<int> default_N_list(const ManufacturedProblem& mp) {
    if (mp.dim == 1) return {10, 20, 40, 80, 160, 320};
    return {10, 20, 40, 80};
}

namespace {

Grid grid_for(const ManufacturedProblem& mp, int N, int p) {
    return build_grid(mp.dim, mp.extent, {N, N}, p);
}

}  // namespace

Errors run_single(const ManufacturedProblem& mp, const StudyScheme& scheme, int N, double dt,
                  const StepObserver& extra) {
    const Grid g = grid_for(mp, N, scheme.base.p);
    SchemeConfig cfg = scheme.base;
    cfg.dt = dt;
    cfg.T = mp.T;
    cfg.model = mp.model;
    const ProblemData data = mp.data();
    ErrorAccumulator acc(g, data.exact);
    auto obs = [&](int n, double t, const SymTensorField& f) {
        acc.observe(n, t, f);
        if (extra) extra(n, t, f);
    };
    if (mp.model.kind == ModelKind::PureUCTD) {
        solve_model(data, cfg, g, obs);
    } else {
        solve_oldroyd_b(data, cfg, g, obs);
    }
    return acc.value();
}

ConvergenceTable run_convergence_study(const ManufacturedProblem& mp, const StudyScheme& scheme,
                                       const std::vector<int>& N_list) {
    for (std::size_t k = 1; k < N_list.size(); ++k) {
        if (N_list[k] <= N_list[k - 1]) {
            throw Error(Errc::InvalidCombination, "N list must be strictly increasing");
        }
    }
    ConvergenceTable table;
    table.scheme_tag = scheme.tag(mp.model);
    table.c = scheme.c;
    table.components = mp.components();
    if (mp.model.kind == ModelKind::OldroydB) {
        table.Wi = mp.model.Wi;
        table.beta = mp.model.beta;
    }
    for (int N : N_list) {
        ConvergenceRow row;
        row.N = N;
        row.dt = scheme.dt_for(mp.extent[0] / N);
        try {
            row.E = run_single(mp, scheme, N, row.dt);
        } catch (const std::exception& e) {
            row.failure = e.what();
            row.E = {NAN, NAN, NAN};
        }
        if (!table.rows.empty() && row.failure.empty() && table.rows.back().failure.empty()) {
            const ConvergenceRow& prev = table.rows.back();
            Errors s{NAN, NAN, NAN};
            for (int c = 0; c < table.components; ++c) {
                if (prev.E[c] > 0.0 && row.E[c] > 0.0) s[c] = slope(prev.E[c], row.E[c], prev.dt, row.dt);
            }
            row.slope = s;
        }
        table.rows.push_back(row);
    }
    return table;
}

StabilityTable run_stability_study(const ManufacturedProblem& mp, const StudyScheme& scheme,
                                   double h, int k_max) {
    if (k_max < 1) throw Error(Errc::NonPositiveInput, "k_max must be >= 1");
    if (!(h > 0.0)) throw Error(Errc::NonPositiveInput, "h must be > 0");
    const int N = static_cast<int>(std::lround(mp.extent[0] / h));
    if (N < 2 || std::abs(N * h - mp.extent[0]) > 1e-12 * mp.extent[0]) {
        throw Error(Errc::IncompatibleGrid, "h does not divide the domain into whole cells");
    }
    StabilityTable table;
    table.scheme_tag = scheme.tag(mp.model);
    table.h = h;
    table.components = mp.components();
    const double base = scheme.dt_for(mp.extent[0] / N);
    for (int k = 0; k <= k_max; ++k) {
        StabilityRow row;
        row.k = k;
        row.dt = std::ldexp(base, -k);
        row.E = run_single(mp, scheme, N, row.dt);
        table.rows.push_back(row);
    }
    return table;
}

double truncation_residual(const ManufacturedProblem& mp, int p, int N, double dt) {
    const Grid g = grid_for(mp, N, p);
    const int NT = time_steps(mp.T, dt);
    const auto& z = mp.exact.value;
    auto level = [&](double t) {
        return sample_field(g, [&](const Point& x) { return z(x, t); });
    };
    SymTensorField nm2 = level(0.0), nm1 = level(dt);
    double worst = 0.0;
    for (int n = 2; n <= NT; ++n) {
        const double t = n * dt;
        SymTensorField cur = level(t);
        const AhResult r = apply_Ah(cur, nm1, &nm2, mp.velocity, t, dt, p, InflowPolicy::DirichletExact);
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            if (!r.reachable[idx]) continue;
            const Sym2 d = r.value.at(idx) - uctd_analytic(mp.velocity, mp.exact, g.node_at(idx), t);
            for (int c = 0; c < mp.components(); ++c) worst = std::max(worst, std::abs(d[c]));
        }
        nm2 = std::move(nm1);
        nm1 = std::move(cur);
    }
    return worst;
}

std::vector<TruncationRow> run_truncation_study(const ManufacturedProblem& mp,
                                                const StudyScheme& scheme,
                                                const std::vector<int>& N_list) {
    std::vector<TruncationRow> rows;
    for (int N : N_list) {
        TruncationRow r;
        r.N = N;
        r.dt = scheme.dt_for(mp.extent[0] / N);
        r.residual = truncation_residual(mp, scheme.base.p, N, r.dt);
        if (!rows.empty() && rows.back().residual > 0.0 && r.residual > 0.0) {
            r.slope = slope(rows.back().residual, r.residual, rows.back().dt, r.dt);
        }
        rows.push_back(r);
    }
    return rows;
}

// ---- formatting ----

std::string format_sci(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string join_csv(const Rows& rows) {
    std::string out;
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) out += ',';
            out += csv_field(r[k]);
        }
        out += "\r\n";
    }
    return out;
}

std::string join_markdown(const Rows& rows) {
    std::vector<std::size_t> w(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        os << '|';
        for (std::size_t k = 0; k < r.size(); ++k) {
            os << ' ' << std::string(w[k] - r[k].size(), ' ') << r[k] << " |";
        }
        os << '\n';
    };
    line(rows.front());
    os << '|';
    for (std::size_t k = 0; k < w.size(); ++k) os << std::string(w[k] + 1, '-') << ":|";
    os << '\n';
    for (std::size_t i = 1; i < rows.size(); ++i) line(rows[i]);
    return os.str();
}

std::string fixed2(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* comp_name[3] = {"11", "12", "22"};

Rows convergence_rows(const ConvergenceTable& t, bool csv) {
    Rows rows;
    std::vector<std::string> head{"N", "dt"};
    for (int c = 0; c < t.components; ++c) head.push_back(std::string("E") + comp_name[c]);
    for (int c = 0; c < t.components; ++c) head.push_back(std::string("slope") + comp_name[c]);
    rows.push_back(head);
    for (const auto& r : t.rows) {
        std::vector<std::string> line{std::to_string(r.N), format_sci(r.dt)};
        for (int c = 0; c < t.components; ++c) line.push_back(format_sci(r.E[c]));
        for (int c = 0; c < t.components; ++c) {
            if (!r.slope) line.push_back(csv ? "" : "-");
            else line.push_back(csv ? format_sci((*r.slope)[c]) : fixed2((*r.slope)[c]));
        }
        rows.push_back(line);
    }
    return rows;
}

Rows stability_rows(const StabilityTable& t) {
    Rows rows;
    std::vector<std::string> head{"k", "dt"};
    for (int c = 0; c < t.components; ++c) head.push_back(std::string("E") + comp_name[c]);
    rows.push_back(head);
    for (const auto& r : t.rows) {
        std::vector<std::string> line{std::to_string(r.k), format_sci(r.dt)};
        for (int c = 0; c < t.components; ++c) line.push_back(format_sci(r.E[c]));
        rows.push_back(line);
    }
    return rows;
}

Rows truncation_rows(const std::vector<TruncationRow>& rs, bool csv) {
    Rows rows{{"N", "dt", "residual", "slope"}};
    for (const auto& r : rs) {
        std::string s = r.slope ? (csv ? format_sci(*r.slope) : fixed2(*r.slope)) : (csv ? "" : "-");
        rows.push_back({std::to_string(r.N), format_sci(r.dt), format_sci(r.residual), s});
    }
    return rows;
}

}  // namespace

std::string to_csv(const ConvergenceTable& t) { return join_csv(convergence_rows(t, true)); }
std::string to_markdown(const ConvergenceTable& t) { return join_markdown(convergence_rows(t, false)); }
std::string to_csv(const StabilityTable& t) { return join_csv(stability_rows(t)); }
std::string to_markdown(const StabilityTable& t) { return join_markdown(stability_rows(t)); }
std::string to_csv(const std::vector<TruncationRow>& r) { return join_csv(truncation_rows(r, true)); }
std::string to_markdown(const std::vector<TruncationRow>& r) { return join_markdown(truncation_rows(r, false)); }

}  // namespace gld

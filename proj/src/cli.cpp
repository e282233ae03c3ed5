#include "gld/cli.hpp"

#include "gld/errors.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gld {

double parse_number(const std::string& text) {
    auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw Error(Errc::MissingValue, "cannot read a number from '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return to_double(text);
    const double num = to_double(text.substr(0, slash));
    const double den = to_double(text.substr(slash + 1));
    if (den == 0.0) throw Error(Errc::MissingValue, "zero denominator in '" + text + "'");
    return num / den;  // one correctly rounded division
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(Errc::MissingValue, "--N: cannot read an integer from '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw Error(Errc::MissingValue, "--N needs at least one value");
    return out;
}

}  // namespace

RunSpec parse_args(const std::vector<std::string>& args) {
    CLI::App app{"semi-Lagrangian upper-convected derivative solver"};
    app.set_help_flag("--help");
    app.require_subcommand(1);
    std::string example, scheme, c_text, cprime_text, N_text, h_text, Wi_text, beta_text;
    std::string boundary = "dirichlet", format = "markdown", output, prefix = "snapshot";
    int p = 0, kmax = 6, snapshot = 0;
    bool neumann = false;

    std::vector<CLI::App*> subs;
    for (const char* name : {"solve", "converge", "stability", "truncation"}) {
        CLI::App* s = app.add_subcommand(name);
        s->set_help_flag("--help");  // -h is taken by --h
        s->add_option("--example", example, "problem name");
        s->add_option("--scheme", scheme, "s1, s2, s1p or s2p");
        s->add_option("--p", p, "interpolation order");
        s->add_option("--c", c_text, "dt = c sqrt(h) constant (p=1)");
        s->add_option("--cprime", cprime_text, "dt = c' h constant (p=2)");
        s->add_option("--N", N_text, "division count(s), comma separated");
        s->add_option("--h", h_text, "fixed mesh size for stability, e.g. 1/40");
        s->add_option("--kmax", kmax, "number of dt halvings");
        s->add_option("--Wi", Wi_text, "Weissenberg number");
        s->add_option("--beta", beta_text, "viscosity ratio");
        s->add_option("--boundary", boundary, "dirichlet or clamped");
        s->add_flag("--neumann-outflow", neumann, "copy inward neighbour at outflow nodes");
        s->add_option("--output", output, "write the table to this path");
        s->add_option("--format", format, "csv or markdown");
        s->add_option("--snapshot", snapshot, "write a field snapshot every K steps (solve)");
        s->add_option("--snapshot-prefix", prefix, "snapshot file prefix");
        subs.push_back(s);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw Error(Errc::MissingValue, std::string(e.get_name()) + ": " + e.what());
    }

    RunSpec spec;
    const Command cmds[4] = {Command::Solve, Command::Converge, Command::Stability, Command::Truncation};
    for (int k = 0; k < 4; ++k)
        if (subs[k]->parsed()) spec.command = cmds[k];

    if (example.empty()) throw Error(Errc::MissingValue, "--example is required");
    spec.example = example;
    if (!Wi_text.empty()) spec.Wi = parse_number(Wi_text);
    if (!beta_text.empty()) spec.beta = parse_number(beta_text);
    const ManufacturedProblem mp = manufactured_problem(example, spec.Wi, spec.beta);
    const bool oldb = mp.model.kind == ModelKind::OldroydB;
    if (!oldb && (spec.Wi || spec.beta)) {
        throw Error(Errc::InvalidCombination, "--Wi/--beta only apply to Oldroyd-B examples");
    }

    int scheme_p = 0;
    if (!scheme.empty()) {
        if (scheme == "s1" || scheme == "s2") {
            if (oldb) throw Error(Errc::InvalidCombination, "--scheme " + scheme + " is for the pure model; use " + scheme + "p");
        } else if (scheme == "s1p" || scheme == "s2p") {
            if (!oldb) throw Error(Errc::InvalidCombination, "--scheme " + scheme + " needs an Oldroyd-B example");
        } else {
            throw Error(Errc::InvalidCombination, "--scheme must be s1, s2, s1p or s2p");
        }
        scheme_p = scheme[1] - '0';
    }
    if (p != 0 && p != 1 && p != 2) throw Error(Errc::InvalidCombination, "--p must be 1 or 2");
    if (p != 0 && scheme_p != 0 && p != scheme_p) {
        throw Error(Errc::InvalidCombination, "--p disagrees with --scheme");
    }
    spec.p = p != 0 ? p : (scheme_p != 0 ? scheme_p : 1);
    spec.rule = spec.p == 1 ? DtRule::SqrtH : DtRule::LinearH;
    spec.c = default_scheme(mp, spec.p).c;
    if (!c_text.empty()) {
        if (spec.p != 1) throw Error(Errc::InvalidCombination, "--c applies to p=1; use --cprime");
        spec.c = parse_number(c_text);
    }
    if (!cprime_text.empty()) {
        if (spec.p != 2) throw Error(Errc::InvalidCombination, "--cprime applies to p=2; use --c");
        spec.c = parse_number(cprime_text);
    }
    if (!(spec.c > 0.0)) throw Error(Errc::InvalidCombination, "dt constant must be > 0");

    if (!N_text.empty()) {
        spec.N_list = parse_int_list(N_text);
    } else {
        spec.N_list = spec.command == Command::Solve ? std::vector<int>{10} : default_N_list(mp);
    }
    if (spec.command == Command::Solve && spec.N_list.size() != 1) {
        throw Error(Errc::InvalidCombination, "solve takes a single --N");
    }
    for (int N : spec.N_list) {
        if (N < 2) throw Error(Errc::InvalidCombination, "--N values must be >= 2");
        if (spec.p == 2 && N % 2 != 0) {
            throw Error(Errc::InvalidCombination, "--N " + std::to_string(N) + " is odd, p=2 needs even N");
        }
    }

    if (!h_text.empty()) spec.h = parse_number(h_text);
    if (spec.command == Command::Stability) {
        const double Nh = mp.extent[0] / spec.h;
        const long N = std::lround(Nh);
        if (!(spec.h > 0.0) || N < 2 || std::abs(Nh - N) > 1e-9) {
            throw Error(Errc::InvalidCombination, "--h must divide the domain into whole cells");
        }
        if (spec.p == 2 && N % 2 != 0) throw Error(Errc::InvalidCombination, "--h gives odd N with p=2");
        if (kmax < 1) throw Error(Errc::InvalidCombination, "--kmax must be >= 1");
    }
    spec.kmax = kmax;

    if (boundary == "dirichlet") spec.inflow = InflowPolicy::DirichletExact;
    else if (boundary == "clamped") spec.inflow = InflowPolicy::Clamped;
    else throw Error(Errc::InvalidCombination, "--boundary must be dirichlet or clamped");
    spec.neumann_outflow = neumann;

    if (format == "csv") spec.format = Format::Csv;
    else if (format == "markdown") spec.format = Format::Markdown;
    else throw Error(Errc::InvalidCombination, "--format must be csv or markdown");
    spec.output = output;
    if (snapshot < 0) throw Error(Errc::InvalidCombination, "--snapshot must be >= 0");
    spec.snapshot = snapshot;
    spec.snapshot_prefix = prefix;
    return spec;
}

RunSpec parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return parse_args(args);
}

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    std::string text;
    int status = 0;
    std::string where = spec.example;
    try {
        const ManufacturedProblem mp = manufactured_problem(spec.example, spec.Wi, spec.beta);
        StudyScheme scheme = default_scheme(mp, spec.p);
        scheme.c = spec.c;
        scheme.base.inflow = spec.inflow;
        scheme.base.neumann_outflow = spec.neumann_outflow;
        const bool csv = spec.format == Format::Csv;

        switch (spec.command) {
            case Command::Solve: {
                const int N = spec.N_list.front();
                where += ", N=" + std::to_string(N);
                const double dt = scheme.dt_for(mp.extent[0] / N);
                const Grid g = build_grid(mp.dim, mp.extent, {N, N}, spec.p);
                const TimeStepReport rep = validate_time_step(mp.velocity, dt, mp.T, g, 16);
                if (!rep.satisfied) err << rep.message << '\n';
                StepObserver snap;
                if (spec.snapshot > 0) {
                    snap = [&](int n, double, const SymTensorField& f) {
                        if (n % spec.snapshot == 0) {
                            write_snapshot(f, spec.snapshot_prefix + "_" + std::to_string(n) + ".csv");
                        }
                    };
                }
                ConvergenceTable t;
                t.scheme_tag = scheme.tag(mp.model);
                t.c = scheme.c;
                t.components = mp.components();
                ConvergenceRow row;
                row.N = N;
                row.dt = dt;
                row.E = run_single(mp, scheme, N, dt, snap);
                t.rows.push_back(row);
                text = csv ? to_csv(t) : to_markdown(t);
                break;
            }
            case Command::Converge: {
                const ConvergenceTable t = run_convergence_study(mp, scheme, spec.N_list);
                for (const auto& r : t.rows) {
                    if (!r.failure.empty()) {
                        err << "error: " << spec.example << ", N=" << r.N << ": " << r.failure << '\n';
                        status = 1;
                    }
                }
                text = csv ? to_csv(t) : to_markdown(t);
                break;
            }
            case Command::Stability: {
                const StabilityTable t = run_stability_study(mp, scheme, spec.h, spec.kmax);
                text = csv ? to_csv(t) : to_markdown(t);
                break;
            }
            case Command::Truncation: {
                const auto rows = run_truncation_study(mp, scheme, spec.N_list);
                text = csv ? to_csv(rows) : to_markdown(rows);
                break;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << where << ": " << e.what() << '\n';
        return 2;
    }

    out << text;
    if (!spec.output.empty()) {
        std::ofstream f(spec.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << spec.output << '\n';
            return 2;
        }
        f << text;
    }
    return status;
}

}  // namespace gld

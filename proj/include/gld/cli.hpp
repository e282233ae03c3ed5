#ifndef GLD_CLI_HPP
#define GLD_CLI_HPP

#include "gld/verification.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gld {

enum class Command { Solve, Converge, Stability, Truncation };
enum class Format { Csv, Markdown };

struct RunSpec {
    Command command = Command::Solve;
    std::string example;
    int p = 1;
    DtRule rule = DtRule::SqrtH;
    double c = 0.0;
    std::vector<int> N_list;
    double h = 1.0 / 40.0;
    int kmax = 6;
    std::optional<double> Wi, beta;
    InflowPolicy inflow = InflowPolicy::DirichletExact;
    bool neumann_outflow = false;
    std::string output;  // empty: stdout only
    Format format = Format::Markdown;
    int snapshot = 0;    // every K steps, 0 disables
    std::string snapshot_prefix = "snapshot";
};

/// Exact a/b or decimal parsing. Throws MissingValue on garbage.
double parse_number(const std::string& text);

RunSpec parse_args(int argc, const char* const* argv);
RunSpec parse_args(const std::vector<std::string>& args);  // args[0] is the command

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace gld

#endif  // GLD_CLI_HPP

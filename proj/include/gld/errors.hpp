#ifndef GLD_ERRORS_HPP
#define GLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gld {

enum class Errc {
    UnknownExample,
    InvalidCombination,
    MissingValue,
    OddDivisionForQuadratic,
    NonPositiveExtent,
    DegenerateInterval,
    PointOutsideDomain,
    IncompatibleGrid,
    MissingInflowData,
    MissingExact,
    NonPositiveInput,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace gld

#endif  // GLD_ERRORS_HPP

#include "gld/errors.hpp"

namespace gld {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::UnknownExample: return "UnknownExample";
        case Errc::InvalidCombination: return "InvalidCombination";
        case Errc::MissingValue: return "MissingValue";
        case Errc::OddDivisionForQuadratic: return "OddDivisionForQuadratic";
        case Errc::NonPositiveExtent: return "NonPositiveExtent";
        case Errc::DegenerateInterval: return "DegenerateInterval";
        case Errc::PointOutsideDomain: return "PointOutsideDomain";
        case Errc::IncompatibleGrid: return "IncompatibleGrid";
        case Errc::MissingInflowData: return "MissingInflowData";
        case Errc::MissingExact: return "MissingExact";
        case Errc::NonPositiveInput: return "NonPositiveInput";
    }
    return "Unknown";
}

}  // namespace gld

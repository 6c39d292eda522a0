#include "dioforge/error.hpp"

namespace dioforge {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::zero_denominator: return "ZeroDenominator";
        case Errc::negative_radicand: return "NegativeRadicand";
        case Errc::factorization_incomplete: return "FactorizationIncomplete";
        case Errc::singular_curve: return "SingularCurve";
        case Errc::point_off_curve: return "PointOffCurve";
        case Errc::not_on_twist: return "NotOnTwist";
        case Errc::map_undefined: return "MapUndefined";
        case Errc::excluded_parameter: return "ExcludedParameter";
        case Errc::degenerate_multiple: return "DegenerateMultiple";
        case Errc::degenerate_q: return "DegenerateQ";
        case Errc::degenerate_seed: return "DegenerateSeed";
        case Errc::torsion_seed: return "TorsionSeed";
        case Errc::malformed_tuple: return "MalformedTuple";
        case Errc::parse_error: return "ParseError";
        case Errc::bad_fixture: return "BadFixture";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace dioforge

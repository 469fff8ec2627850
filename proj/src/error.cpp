#include "lognet/error.hpp"

namespace lognet {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::EfficiencyOutOfRange: return "EfficiencyOutOfRange";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateArc: return "DuplicateArc";
        case Errc::ConflictingArc: return "ConflictingArc";
        case Errc::InvalidLabel: return "InvalidLabel";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::ParseError: return "ParseError";
        case Errc::NonPositiveOutput: return "NonPositiveOutput";
        case Errc::GainNotAllowed: return "GainNotAllowed";
        case Errc::EmptyChain: return "EmptyChain";
        case Errc::BadBase: return "BadBase";
        case Errc::NegativeLossiness: return "NegativeLossiness";
        case Errc::WrongArity: return "WrongArity";
        case Errc::CommissionOutOfRange: return "CommissionOutOfRange";
        case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::NotConnected: return "NotConnected";
        case Errc::SomePairUnreachable: return "SomePairUnreachable";
    }
    return "Unknown";
}

}  // namespace lognet

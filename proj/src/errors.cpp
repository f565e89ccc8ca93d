#include "ect/errors.hpp"

namespace ect {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotASquare: return "NotASquare";
        case Errc::ZeroSeries: return "ZeroSeries";
        case Errc::TowerDepthExceeded: return "TowerDepthExceeded";
        case Errc::SingularCurve: return "SingularCurve";
        case Errc::DegenerateLambda: return "DegenerateLambda";
        case Errc::PointNotOnCurve: return "PointNotOnCurve";
        case Errc::ZeroTwist: return "ZeroTwist";
        case Errc::RootsNotInTower: return "RootsNotInTower";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::PrecisionLoss: return "PrecisionLoss";
        case Errc::AmbiguousTolerance: return "AmbiguousTolerance";
        case Errc::KernelElement: return "KernelElement";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::NotIntegralModel: return "NotIntegralModel";
        case Errc::RamifiedTwist: return "RamifiedTwist";
        case Errc::AdditiveReduction: return "AdditiveReduction";
        case Errc::NotOnIdentityComponent: return "NotOnIdentityComponent";
        case Errc::IdentityPoint: return "IdentityPoint";
        case Errc::MultiplierNotFound: return "MultiplierNotFound";
        case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

int errc_exit_code(Errc c) noexcept {
    switch (c) {
        case Errc::BudgetExceeded:
        case Errc::PrecisionLoss:
        case Errc::TowerDepthExceeded:
        case Errc::MultiplierNotFound:
            return 3;
        default:
            return 2;
    }
}

}  // namespace ect

#include "lognet/weights.hpp"

#include <cmath>
#include <string>

namespace lognet {

namespace {

void require_base(double base) {
    if (!(base > 1.0) || !std::isfinite(base))
        throw Error(Errc::BadBase, "logarithm base must be finite and > 1, got " + std::to_string(base));
}

}  // namespace

bool is_valid_efficiency(double value) noexcept { return value > 0.0 && value <= 1.0; }

Efficiency::Efficiency(double value) : value_(value) {
    if (!is_valid_efficiency(value))
        throw Error(Errc::EfficiencyOutOfRange,
                    "efficiency must lie in (0, 1], got " + std::to_string(value));
}

Efficiency link_efficiency(double service_in, double service_out) {
    if (!(service_in > 0.0))
        throw Error(Errc::NonPositiveOutput, "input service volume must be positive");
    if (!(service_out > 0.0))
        throw Error(Errc::NonPositiveOutput, "output service volume must be positive");
    if (service_out > service_in)
        throw Error(Errc::GainNotAllowed, "a link cannot deliver more service than it receives");
    return Efficiency(service_out / service_in);
}

Efficiency chain_efficiency(std::span<const Efficiency> links) {
    if (links.empty()) throw Error(Errc::EmptyChain, "chain has no links");
    double product = 1.0;
    for (Efficiency e : links) product *= e.value();
    // Underflow of very long chains lands on 0, outside the domain.
    return Efficiency(product);
}

Lossiness to_lossiness(Efficiency eta, double base) {
    require_base(base);
    // -0.0 for eta == 1 would print oddly.
    double t = eta.value() == 1.0 ? 0.0 : -std::log(eta.value()) / std::log(base);
    return {t, base};
}

Efficiency from_lossiness(Lossiness t) {
    require_base(t.base);
    if (!(t.value >= 0.0))
        throw Error(Errc::NegativeLossiness, "lossiness must be >= 0");
    return Efficiency(std::pow(t.base, -t.value));
}

double bsc_endpoint_accuracy(std::span<const Efficiency> etas) {
    if (etas.size() != 2)
        throw Error(Errc::WrongArity,
                    "end-to-end accuracy is defined for exactly two links, got " +
                        std::to_string(etas.size()));
    double a = etas[0].value();
    double b = etas[1].value();
    return a * b + (1.0 - a) * (1.0 - b);
}

Efficiency commission_to_efficiency(double percent) {
    if (!(percent >= 0.0 && percent < 100.0))
        throw Error(Errc::CommissionOutOfRange, "commission must lie in [0, 100), got " +
                                                    std::to_string(percent));
    return Efficiency(1.0 - percent / 100.0);
}

}  // namespace lognet

#pragma once

#include <span>

#include "lognet/error.hpp"

namespace lognet {

inline constexpr double kDefaultBase = 2.0;

/// Share of service that survives a link or chain, in (0, 1].
class Efficiency {
public:
    /// Throws Errc::EfficiencyOutOfRange unless 0 < value <= 1.
    explicit Efficiency(double value);

    static Efficiency lossless() noexcept { return Efficiency(1.0, Unchecked{}); }

    double value() const noexcept { return value_; }

    friend bool operator==(Efficiency, Efficiency) = default;
    friend auto operator<=>(Efficiency, Efficiency) = default;

private:
    struct Unchecked {};
    Efficiency(double value, Unchecked) noexcept : value_(value) {}

    double value_;
};

/// Additive counterpart of an efficiency: -log_base(eta).
struct Lossiness {
    double value = 0.0;
    double base = kDefaultBase;
};

bool is_valid_efficiency(double value) noexcept;

/// service_out / service_in.
Efficiency link_efficiency(double service_in, double service_out);

/// Product of the link efficiencies, accumulated left to right starting from 1.
Efficiency chain_efficiency(std::span<const Efficiency> links);

Lossiness to_lossiness(Efficiency eta, double base = kDefaultBase);
Efficiency from_lossiness(Lossiness t);

/// End-to-end probability that a bit survives two binary symmetric channels,
/// counting the case where both flip it: e1*e2 + (1-e1)(1-e2).
/// Only the two-link case is defined; other arities throw WrongArity.
double bsc_endpoint_accuracy(std::span<const Efficiency> etas);

/// Efficiency of a transaction channel charging `percent` commission.
Efficiency commission_to_efficiency(double percent);

}  // namespace lognet

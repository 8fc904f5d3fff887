#pragma once

#include <cstdint>

namespace dreem {

/// First-order radio model constants.
struct RadioParams {
    double e_elec = 50e-9;        ///< J/bit, transmitter or receiver electronics
    double e_amp = 100e-12;       ///< J/bit/m^2, transmit amplifier
    double e_da = 5e-9;           ///< J/bit/signal, data aggregation
    std::int64_t packet_bits = 4000;
    double initial_energy = 0.5;  ///< J per node

    /// Throws ConfigInvalid unless every field is strictly positive and finite.
    void validate() const;
};

/// Energy to transmit `bits` over `d` metres: e_elec*k + e_amp*k*d^2.
double tx_cost(const RadioParams& params, std::int64_t bits, double d);

/// Energy to receive `bits`: e_elec*k.
double rx_cost(const RadioParams& params, std::int64_t bits);

/// Energy to fuse `signals` incoming packets of `bits` each: e_da*k*signals.
double aggregation_cost(const RadioParams& params, std::int64_t bits, std::int64_t signals);

} // namespace dreem

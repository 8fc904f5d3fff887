#include "dreem/energy_model.hpp"

#include <cmath>
#include <string>

#include "dreem/error.hpp"

namespace dreem {
namespace {

void require_non_negative(double value, const char* what) {
    if (value < 0.0 || std::isnan(value)) {
        throw NegativeInput(std::string(what) + " must be non-negative");
    }
}

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigInvalid(std::string(what) + " must be strictly positive");
    }
}

} // namespace

void RadioParams::validate() const {
    require_positive(e_elec, "e_elec");
    require_positive(e_amp, "e_amp");
    require_positive(e_da, "e_da");
    require_positive(static_cast<double>(packet_bits), "packet_bits");
    require_positive(initial_energy, "initial_energy");
}

double tx_cost(const RadioParams& params, std::int64_t bits, double d) {
    require_non_negative(static_cast<double>(bits), "bits");
    require_non_negative(d, "distance");
    const auto k = static_cast<double>(bits);
    return params.e_elec * k + params.e_amp * k * d * d;
}

double rx_cost(const RadioParams& params, std::int64_t bits) {
    require_non_negative(static_cast<double>(bits), "bits");
    return params.e_elec * static_cast<double>(bits);
}

double aggregation_cost(const RadioParams& params, std::int64_t bits, std::int64_t signals) {
    require_non_negative(static_cast<double>(bits), "bits");
    require_non_negative(static_cast<double>(signals), "signals");
    return params.e_da * static_cast<double>(bits) * static_cast<double>(signals);
}

} // namespace dreem

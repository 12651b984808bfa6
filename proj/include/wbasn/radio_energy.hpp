#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace wbasn {

/// First-order radio model coefficients. All energies are held in joules;
/// the nanojoule figures from the config file are converted once at load.
struct RadioParams {
  double e_tx_elec_j = 16.7e-9;      // J/bit, transmitter circuitry
  double e_rx_elec_j = 36.1e-9;      // J/bit, receiver circuitry
  double e_amp_j = 1.97e-9;          // J/bit/m^n, transmit amplifier
  double path_loss_exponent = 3.38;  // 3.38 line of sight, 5.9 non line of sight
};

/// Energy to transmit `bits` over `distance_m` meters:
///   e_tx_elec * k + e_amp * k * d^n
inline double transmit_energy(const RadioParams& params, std::int64_t bits,
                              double distance_m) {
  if (bits < 0) {
    throw std::invalid_argument("transmit_energy: negative bit count");
  }
  if (!(distance_m >= 0.0) || !std::isfinite(distance_m)) {
    throw std::invalid_argument("transmit_energy: distance must be finite and >= 0");
  }
  const double k = static_cast<double>(bits);
  return params.e_tx_elec_j * k +
         params.e_amp_j * k * std::pow(distance_m, params.path_loss_exponent);
}

/// Energy to receive `bits`: e_rx_elec * k.
inline double receive_energy(const RadioParams& params, std::int64_t bits) {
  if (bits < 0) {
    throw std::invalid_argument("receive_energy: negative bit count");
  }
  return params.e_rx_elec_j * static_cast<double>(bits);
}

}  // namespace wbasn

#pragma once

#include <cstdint>
#include <string>

#include "wbasn/rng.hpp"

namespace wbasn {

enum class Scenario { walking, slow_running, fast_running };

inline constexpr int kScenarioCount = 3;

const char* scenario_name(Scenario s);

struct BodyProfile {
  double weight_kg = 70.0;
  double height_cm = 175.0;
  double age_years = 25.0;
};

/// Harris-Benedict basal metabolic rate in kcal/day:
///   66.5 + 13.75*weight + 5.003*height - 6.775*age
double bmr_kcal_per_day(const BodyProfile& profile);

/// Per-signal Gaussian noise standard deviations, applied only when the
/// scenario has noise enabled.
struct SignalNoise {
  double temperature_c = 0.05;
  double heart_rate_bpm = 1.0;
  double glucose_mg_dl = 0.5;
};

/// One movement scenario: speed, soldier energy drain, and the trajectory
/// parameters of the three synthesized signals. Temperature and heart rate
/// rise toward a plateau with first-order dynamics; glucose falls linearly
/// to a floor.
struct ScenarioParams {
  Scenario name = Scenario::walking;
  double speed_mph = 3.0;
  double drain_rate_j_per_round = 0.0;  // soldier metabolic energy per round

  double temp_base_c = 37.0;
  double temp_plateau_c = 37.6;
  double temp_tau_rounds = 600.0;

  double hr_base_bpm = 70.0;
  double hr_plateau_bpm = 105.0;
  double hr_tau_rounds = 600.0;

  double glucose_start_mg_dl = 95.0;
  double glucose_floor_mg_dl = 55.0;
  double glucose_slope_mg_dl_per_round = -0.0025;  // negative

  SignalNoise noise;
  bool noise_enabled = false;
};

struct FatigueConfig {
  double initial_energy_j = 2500.0;
  double fatigue_threshold_j = 1500.0;
};

/// Instantaneous body readings plus the soldier's remaining metabolic
/// energy. `round` counts completed signal steps, `drained_rounds`
/// completed energy expenditures; the engine keeps them in lockstep.
struct PhysioState {
  double temperature_c = 37.0;
  double heart_rate_bpm = 70.0;
  double glucose_mg_dl = 95.0;
  double soldier_energy_j = 2500.0;
  double initial_soldier_energy_j = 2500.0;
  std::uint32_t round = 0;
  std::uint32_t drained_rounds = 0;
};

PhysioState initial_state(const ScenarioParams& scenario, const FatigueConfig& fatigue);

/// Advance the three signals by one round. Deterministic closed forms in
/// the round index, so a noise-free run is exactly reproducible and free of
/// accumulation error.
PhysioState step_signals(const PhysioState& state, const ScenarioParams& scenario,
                         GaussianRng& rng);

/// Spend one round of soldier metabolic energy, clamped at zero.
PhysioState expend(const PhysioState& state, const ScenarioParams& scenario);

/// True once remaining soldier energy has fallen to the threshold (inclusive).
bool is_fatigued(const PhysioState& state, const FatigueConfig& fatigue);

}  // namespace wbasn

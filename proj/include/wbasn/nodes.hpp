#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "wbasn/radio_energy.hpp"

namespace wbasn {

enum class NodeKind { temperature, glucose, heartbeat };
enum class Direction { rising, falling };
enum class NodeState { asleep, dead };
enum class TxDecision { transmit, sleep };

/// Retransmission governor once the hard threshold is crossed.
///  - above_hard: transmit on every sampling round beyond the hard threshold.
///  - soft_governed: additionally require the reading to have moved at least
///    soft_threshold away from the last transmitted value.
enum class TxRule { above_hard, soft_governed };

inline constexpr int kNodeKindCount = 3;

const char* node_kind_name(NodeKind kind);

struct SensorNode {
  int id = 0;
  NodeKind kind = NodeKind::temperature;
  double residual_energy_j = 0.3;
  double spent_energy_j = 0.0;  // sum of all transmission costs so far
  std::int64_t payload_bits = 2400;
  double distance_to_bs_m = 0.25;
  std::optional<double> path_loss_exponent;  // overrides RadioParams when set
  double hard_threshold = 0.0;
  double soft_threshold = 0.0;
  Direction direction = Direction::rising;
  TxRule rule = TxRule::above_hard;
  std::optional<double> last_transmitted_value;
  std::uint32_t sample_interval = 1;  // rounds between samples
  NodeState state = NodeState::asleep;
  std::uint64_t tx_count = 0;
  std::optional<std::uint32_t> death_round;
};

/// Energy-unconstrained sink on the wrist. Tracks what it receives and the
/// round in which the fatigue state was first reported.
struct BaseStation {
  std::array<std::uint64_t, kNodeKindCount> packets_by_kind{};
  double rx_energy_j = 0.0;
  bool fatigue_reported = false;
  std::optional<std::uint32_t> fatigue_round;

  std::uint64_t total_packets() const {
    return packets_by_kind[0] + packets_by_kind[1] + packets_by_kind[2];
  }
};

inline bool alive(const SensorNode& node) { return node.state != NodeState::dead; }

inline bool is_sampling_round(const SensorNode& node, std::uint32_t round) {
  return node.sample_interval != 0 && round % node.sample_interval == 0;
}

/// Cost of one transmission from this node, honoring a per-node path loss
/// exponent override.
double per_tx_cost(const SensorNode& node, const RadioParams& radio);

/// Event-driven threshold rule. Throws std::logic_error when called on a
/// dead node or off the node's sampling grid.
TxDecision decide(const SensorNode& node, double reading, std::uint32_t round);

/// Perform one transmission. Deducts the cost, records the value, counts the
/// packet at the base station. A node that cannot afford its next
/// transmission transitions to dead with residual energy untouched, so the
/// death round equals the round of the floor(E0/cost)-th event.
void transmit(SensorNode& node, double reading, std::uint32_t round,
              BaseStation& bs, const RadioParams& radio);

int alive_count(std::span<const SensorNode> nodes);

}  // namespace wbasn

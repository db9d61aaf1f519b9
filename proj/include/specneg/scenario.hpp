#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specneg/acl.hpp"
#include "specneg/agents.hpp"

namespace specneg {

/// Simulated delays, in abstract time units.
struct LatencyModel {
  SimTime transit_delay = 1.0;  // per message hop, > 0
  SimTime pu_proc_delay = 0.5;  // per message handled at a PU
  SimTime su_proc_delay = 0.5;  // per reply handled at the SU, serialized

  friend bool operator==(const LatencyModel&, const LatencyModel&) = default;
};

struct Scenario {
  std::vector<PuProfile> pus;  // indices 1..N in order
  SuDemand demand{1};
  LatencyModel latency;
  PaymentMode payment_mode = PaymentMode::kUnitPrice;
  std::uint64_t seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Builds PU1..PUn from (free_channels, unit_price) pairs.
std::vector<PuProfile> make_pus(const std::vector<std::pair<ChannelCount, Currency>>& data);

/// Returns the first violated invariant, or nullopt for a valid scenario.
std::optional<std::string> scenario_violation(const Scenario& s);

}  // namespace specneg

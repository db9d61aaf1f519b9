#pragma once

// The two experiments (SU response time vs. PU count, SU spend vs. how often
// negotiation pays off) and the classifier that decides whether a finished
// negotiation changed anything.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "specneg/engine.hpp"
#include "specneg/scenario.hpp"
#include "specneg/scenario_io.hpp"

namespace specneg {

enum class NegotiationValue { kUseful, kRedundant, kFailed };

const char* to_string(NegotiationValue v);

/// Redundant when the winner is PU1, the PU the SU would have taken without
/// shopping around; Useful when any other PU wins; Failed on no deal.
NegotiationValue classify(const NegotiationOutcome& outcome, const Scenario& scenario);

class EvaluationError : public std::invalid_argument {
 public:
  enum class Code { kNonIntegralSuccessCount, kTooFewPus, kBadArgument };
  EvaluationError(Code code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// k * p_success + (runs - k) * p_fail with k = runs * rate / 100.
Currency expected_total_cost(std::int64_t rate_percent, Currency p_success, Currency p_fail,
                             std::int64_t runs);

struct CostRow {
  std::int64_t success_rate;
  Currency total_cost;
  friend bool operator==(const CostRow&, const CostRow&) = default;
};

/// Rates 0, 10, ..., 100.
std::vector<CostRow> sweep_success_rate(Currency p_success, Currency p_fail, std::int64_t runs);

struct LatencyRow {
  std::size_t n_pus;
  SimTime elapsed;
  friend bool operator==(const LatencyRow&, const LatencyRow&) = default;
};

/// Negotiates with the first n PUs for n = 1..n_max.
std::vector<LatencyRow> sweep_num_pus(const Scenario& base, std::size_t n_max);

std::string cost_csv(const std::vector<CostRow>& rows);
std::string latency_csv(const std::vector<LatencyRow>& rows);

}  // namespace specneg

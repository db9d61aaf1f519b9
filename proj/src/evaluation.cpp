#include "specneg/evaluation.hpp"

namespace specneg {

const char* to_string(NegotiationValue v) {
  switch (v) {
    case NegotiationValue::kUseful: return "useful";
    case NegotiationValue::kRedundant: return "redundant";
    case NegotiationValue::kFailed: return "failed";
  }
  return "?";
}

NegotiationValue classify(const NegotiationOutcome& outcome, const Scenario& scenario) {
  const Success* won = outcome.success();
  if (!won) return NegotiationValue::kFailed;
  return won->winner == scenario.pus.front().id ? NegotiationValue::kRedundant
                                                : NegotiationValue::kUseful;
}

Currency expected_total_cost(std::int64_t rate_percent, Currency p_success, Currency p_fail,
                             std::int64_t runs) {
  if (rate_percent < 0 || rate_percent > 100) {
    throw EvaluationError(EvaluationError::Code::kBadArgument,
                          "rate must be in [0, 100], got " + std::to_string(rate_percent));
  }
  if (runs < 0) throw EvaluationError(EvaluationError::Code::kBadArgument, "runs must be >= 0");
  if ((rate_percent * runs) % 100 != 0) {
    throw EvaluationError(EvaluationError::Code::kNonIntegralSuccessCount,
                          std::to_string(rate_percent) + "% of " + std::to_string(runs) +
                              " runs is not a whole number");
  }
  const std::int64_t successes = rate_percent * runs / 100;
  return successes * p_success + (runs - successes) * p_fail;
}

std::vector<CostRow> sweep_success_rate(Currency p_success, Currency p_fail, std::int64_t runs) {
  std::vector<CostRow> rows;
  for (std::int64_t rate = 0; rate <= 100; rate += 10) {
    rows.push_back(CostRow{rate, expected_total_cost(rate, p_success, p_fail, runs)});
  }
  return rows;
}

std::vector<LatencyRow> sweep_num_pus(const Scenario& base, std::size_t n_max) {
  if (n_max == 0) throw EvaluationError(EvaluationError::Code::kBadArgument, "n_max must be >= 1");
  if (n_max > base.pus.size()) {
    throw EvaluationError(EvaluationError::Code::kTooFewPus,
                          "n_max " + std::to_string(n_max) + " exceeds " +
                              std::to_string(base.pus.size()) + " PUs");
  }
  std::vector<LatencyRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Scenario prefix = base;
    prefix.pus.erase(prefix.pus.begin() + static_cast<std::ptrdiff_t>(n), prefix.pus.end());
    rows.push_back(LatencyRow{n, run_negotiation(prefix).outcome.elapsed});
  }
  return rows;
}

std::string cost_csv(const std::vector<CostRow>& rows) {
  std::vector<CsvRow> out;
  for (const auto& r : rows) out.push_back({r.success_rate, r.total_cost});
  return write_csv({"rate", "cost"}, out);
}

std::string latency_csv(const std::vector<LatencyRow>& rows) {
  std::vector<CsvRow> out;
  for (const auto& r : rows) out.push_back({static_cast<std::int64_t>(r.n_pus), r.elapsed});
  return write_csv({"n_pus", "elapsed"}, out);
}

}  // namespace specneg

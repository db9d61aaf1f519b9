// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// bound. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specneg/evaluation.hpp"
#include "specneg/scenario_io.hpp"
#include "test_support.hpp"

namespace {

using namespace specneg;
using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

struct Criterion {
  std::string name;
  std::chrono::microseconds budget;
  std::function<void(Check&)> body;
};

std::map<Performative, int> perf_counts(const std::vector<TraceRecord>& trace) {
  std::map<Performative, int> out;
  for (const auto& r : trace) ++out[r.performative];
  return out;
}

std::string trace_bytes(const RunResult& r) {
  std::ostringstream out;
  write_trace(r.trace, out);
  return out.str();
}

void scenario_nbc1(Check& c) {
  const auto r = run_negotiation(testing::paper_scenario(1));
  const Success* s = r.outcome.success();
  c.expect(s != nullptr, "nbc=1 should succeed");
  if (!s) return;
  c.expect(s->winner == AgentId::pu(2), "winner is " + s->winner.to_string() + ", want PU2");
  c.expect(s->unit_price == 230, "unit price " + std::to_string(s->unit_price) + ", want 230");
}

void scenario_nbc3(Check& c) {
  const auto r = run_negotiation(testing::paper_scenario(3));
  const Success* s = r.outcome.success();
  c.expect(s != nullptr, "nbc=3 should succeed");
  if (!s) return;
  c.expect(s->winner == AgentId::pu(4), "winner is " + s->winner.to_string() + ", want PU4");
  c.expect(s->unit_price == 250, "unit price " + std::to_string(s->unit_price) + ", want 250");
  auto counts = perf_counts(r.trace);
  c.expect(counts[Performative::kRefuse] == 2, "REFUSE count " + std::to_string(counts[Performative::kRefuse]));
  c.expect(counts[Performative::kInform] == 3, "INFORM count " + std::to_string(counts[Performative::kInform]));
}

void scenario_nbc5(Check& c) {
  const auto r = run_negotiation(testing::paper_scenario(5));
  c.expect(!r.outcome.succeeded(), "nbc=5 should fail");
  c.expect(r.outcome.message_count == 10, "message_count " + std::to_string(r.outcome.message_count));
}

void cost_table(Check& c) {
  const std::vector<Currency> want = {5000, 4600, 4200, 3800, 3400, 3000, 2600, 2200, 1800, 1400, 1000};
  const auto rows = sweep_success_rate(100, 500, 10);
  c.expect(rows.size() == want.size(), "row count " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size() && i < want.size(); ++i) {
    c.expect(rows[i].success_rate == static_cast<std::int64_t>(10 * i), "rate at row " + std::to_string(i));
    c.expect(rows[i].total_cost == want[i], "cost at " + std::to_string(10 * i) + "% is " +
                                                std::to_string(rows[i].total_cost));
  }
}

void classification(Check& c) {
  const auto fail_s = testing::table32_failure();
  const auto fail_r = run_negotiation(fail_s);
  c.expect(classify(fail_r.outcome, fail_s) == NegotiationValue::kRedundant, "failure dataset not Redundant");
  c.expect(fail_r.outcome.success() && fail_r.outcome.success()->amount_paid == 500, "failure dataset pays != 500");

  const auto ok_s = testing::table32_success();
  const auto ok_r = run_negotiation(ok_s);
  c.expect(classify(ok_r.outcome, ok_s) == NegotiationValue::kUseful, "success dataset not Useful");
  const Success* s = ok_r.outcome.success();
  c.expect(s && s->winner == AgentId::pu(5), "success dataset winner not PU5");
  c.expect(s && s->amount_paid == 100, "success dataset pays != 100");
}

void latency_trend(Check& c) {
  const auto base = testing::paper_scenario(3);
  const auto rows = sweep_num_pus(base, 5);
  const auto step = base.latency.su_proc_delay;
  c.expect(rows.size() == 5, "row count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.expect(rows[i].elapsed == elapsed_formula(i + 1, base.latency),
             "n=" + std::to_string(i + 1) + " elapsed " + format_fixed3(rows[i].elapsed) + " != formula");
    if (i == 0) continue;
    c.expect(rows[i].elapsed > rows[i - 1].elapsed, "not strictly increasing at n=" + std::to_string(i + 1));
    c.expect(rows[i].elapsed - rows[i - 1].elapsed == step, "increment at n=" + std::to_string(i + 1));
  }
  for (std::size_t n = 1; n <= 20; ++n) {
    auto s = base;
    s.pus = make_pus(std::vector<std::pair<ChannelCount, Currency>>(n, {3, 300}));
    c.expect(run_negotiation(s).outcome.elapsed == elapsed_formula(n, s.latency),
             "engine vs formula at n=" + std::to_string(n));
  }
}

void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(20240601);
  int agree = 0, total = 0, no_deal = 0, ties = 0;
  for (; total < 2000; ++total) {
    const auto s = testing::random_scenario(rng);
    const auto oracle = testing::brute_force_winner(s);
    const auto r = run_negotiation(s);
    bool ok;
    if (!oracle) {
      ++no_deal;
      ok = !r.outcome.succeeded();
    } else {
      const Success* got = r.outcome.success();
      ok = got && got->winner == AgentId::pu(oracle->pu_index) && got->unit_price == oracle->unit_price &&
           got->amount_paid == payment_amount(s.payment_mode, oracle->unit_price, s.demand.nbc);
      int cheapest = 0;
      for (const auto& p : s.pus) cheapest += p.free_channels >= s.demand.nbc && p.unit_price == oracle->unit_price;
      ties += cheapest > 1;
    }
    agree += ok;
    if (!ok && c.failures.size() < 5) c.failures.push_back("disagreement on scenario " + serialize_scenario(s));
  }
  c.expect(agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree");
  c.expect(no_deal > 0 && ties > 0, "generator did not cover NoDeal and ties");
}

void protocol_invariants(Check& c) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = testing::random_scenario(rng);
    const auto r = run_negotiation(s);
    const auto n = static_cast<int>(s.pus.size());
    const bool won = r.outcome.succeeded();
    const std::size_t want = won ? 2 * n + 2 : 2 * n;
    auto counts = perf_counts(r.trace);
    bool ok = r.outcome.message_count == want && r.trace.size() == want &&
              counts[Performative::kRequest] == n &&
              counts[Performative::kInform] + counts[Performative::kRefuse] == n &&
              counts[Performative::kConfirm] == (won ? 1 : 0) &&
              counts[Performative::kAcceptProposal] == (won ? 1 : 0);
    for (const auto& m : r.messages) ok = ok && !validate_message(m).has_value();
    if (!ok) {
      c.failures.push_back("invariant broken on scenario " + serialize_scenario(s));
      if (c.failures.size() >= 5) return;
    }
  }
}

void determinism(Check& c) {
  for (ChannelCount nbc : {1, 3, 5}) {
    const auto s = testing::paper_scenario(nbc);
    c.expect(trace_bytes(run_negotiation(s)) == trace_bytes(run_negotiation(s)),
             "trace bytes differ for nbc=" + std::to_string(nbc));
  }
  c.expect(trace_bytes(run_negotiation(testing::paper_scenario(1))) ==
               testing::read_file(testing::golden_path("paper_nbc1_trace.jsonl")),
           "nbc=1 trace differs from golden file");

  const auto cost_a = cost_csv(sweep_success_rate(100, 500, 10));
  c.expect(cost_a == cost_csv(sweep_success_rate(100, 500, 10)), "cost CSV differs between runs");
  c.expect(cost_a == testing::read_file(testing::golden_path("success_rate_cost.csv")), "cost CSV differs from golden");

  const auto pus_a = latency_csv(sweep_num_pus(testing::paper_scenario(3), 5));
  c.expect(pus_a == latency_csv(sweep_num_pus(testing::paper_scenario(3), 5)), "sweep CSV differs between runs");
  c.expect(pus_a == testing::read_file(testing::golden_path("sweep_pus_nbc3.csv")), "sweep CSV differs from golden");

  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto s = testing::random_scenario(rng);
    if (trace_bytes(run_negotiation(s)) != trace_bytes(run_negotiation(s))) {
      c.failures.push_back("random scenario trace differs: " + serialize_scenario(s));
      break;
    }
  }
}

}  // namespace

int main() {
  using std::chrono::microseconds;
  using std::chrono::milliseconds;

  const std::vector<Criterion> criteria = {
      {"scenario reproduction: nbc=1 -> PU2 @ 230", microseconds(1000), scenario_nbc1},
      {"scenario reproduction: nbc=3 -> PU4 @ 250, 3 INFORM + 2 REFUSE", microseconds(1000), scenario_nbc3},
      {"scenario reproduction: nbc=5 -> failure, 10 messages", microseconds(1000), scenario_nbc5},
      {"cost table: rates 0..100 -> 5000..1000", microseconds(1000), cost_table},
      {"classification: Redundant @ 500, Useful PU5 @ 100", microseconds(1000), classification},
      {"latency trend: strictly increasing, step su_proc, equals closed form", milliseconds(10), latency_trend},
      {"oracle equivalence: 2000 random scenarios", milliseconds(1000), oracle_equivalence},
      {"protocol invariants: 2000 random scenarios", milliseconds(1000), protocol_invariants},
      {"determinism: byte-identical traces and CSVs, golden files", std::chrono::microseconds::max(), determinism},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto took = std::chrono::duration_cast<microseconds>(Clock::now() - start);
    if (took > crit.budget) {
      check.failures.push_back("took " + std::to_string(took.count()) + " us, budget " +
                               std::to_string(crit.budget.count()) + " us");
    }
    const bool pass = check.failures.empty();
    failed += !pass;
    std::printf("[%s] %s (%lld us)\n", pass ? "PASS" : "FAIL", crit.name.c_str(),
                static_cast<long long>(took.count()));
    for (const auto& f : check.failures) std::printf("       %s\n", f.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}

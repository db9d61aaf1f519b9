#pragma once

// Discrete-event driver for one negotiation round. Messages are the only
// events; each delivery is handed to the receiving agent's state machine.

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "specneg/acl.hpp"
#include "specneg/agents.hpp"
#include "specneg/scenario.hpp"

namespace specneg {

struct SimEvent {
  SimTime time;
  std::uint64_t seq;
  AclMessage msg;
};

/// Min-queue ordered by (time, seq). seq is assigned at push time, so
/// simultaneous deliveries come out in the order they were sent.
class EventQueue {
 public:
  void push(SimTime time, AclMessage msg);
  SimEvent pop();
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const SimEvent& a, const SimEvent& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<SimEvent, std::vector<SimEvent>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

struct TraceRecord {
  SimTime time;  // delivery time
  AgentId from;
  AgentId to;
  Performative performative;
  std::string body_summary;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Success {
  AgentId winner;
  Currency unit_price;
  Currency amount_paid;
  friend bool operator==(const Success&, const Success&) = default;
};

struct Failure {
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct NegotiationOutcome {
  std::variant<Failure, Success> status;
  std::size_t responses = 0;
  SimTime elapsed = 0.0;
  std::size_t message_count = 0;

  bool succeeded() const { return std::holds_alternative<Success>(status); }
  const Success* success() const { return std::get_if<Success>(&status); }

  friend bool operator==(const NegotiationOutcome&, const NegotiationOutcome&) = default;
};

struct RunResult {
  NegotiationOutcome outcome;
  std::vector<TraceRecord> trace;
  std::vector<AclMessage> messages;  // delivery order, parallel to trace
  std::vector<PuProfile> final_pus;
};

class InvalidScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs one full round: broadcast at t=0, replies, decision and, on award,
/// the CONFIRM / ACCEPT_PROPOSAL exchange. Throws InvalidScenario.
RunResult run_negotiation(const Scenario& scenario);

/// Closed-form decision time for n PUs under `lat`.
SimTime elapsed_formula(std::size_t n_pus, const LatencyModel& lat);

}  // namespace specneg

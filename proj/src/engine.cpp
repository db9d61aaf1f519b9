#include "specneg/engine.hpp"

#include <algorithm>
#include <optional>

namespace specneg {

void EventQueue::push(SimTime time, AclMessage msg) {
  heap_.push(SimEvent{time, next_seq_++, std::move(msg)});
}

SimEvent EventQueue::pop() {
  SimEvent ev = heap_.top();
  heap_.pop();
  return ev;
}

namespace {

class Negotiation {
 public:
  explicit Negotiation(const Scenario& s) : scenario_(s), pus_(s.pus) {}

  RunResult run() {
    conv_ = conversations_.next();

    std::vector<AgentId> ids;
    ids.reserve(pus_.size());
    for (const auto& p : pus_) ids.push_back(p.id);

    auto [state, requests] = su_init(scenario_.demand, ids, conv_, factory_, 0.0);
    su_ = std::move(state);
    for (auto& m : requests) send(std::move(m));

    while (!queue_.empty()) deliver(queue_.pop());

    result_.outcome.message_count = result_.trace.size();
    result_.final_pus = pus_;
    return std::move(result_);
  }

 private:
  const LatencyModel& lat() const { return scenario_.latency; }

  void send(AclMessage msg) {
    if (auto v = validate_message(msg)) throw std::logic_error("engine produced bad message: " + v->detail);
    const SimTime at = msg.send_time() + lat().transit_delay;
    queue_.push(at, std::move(msg));
  }

  PuProfile& profile(const AgentId& id) { return pus_.at(id.index() - 1); }

  void deliver(SimEvent ev) {
    const AclMessage& msg = ev.msg;
    result_.trace.push_back(TraceRecord{ev.time, msg.sender(), msg.receiver(), msg.performative(),
                                        summarize(msg.body())});
    result_.messages.push_back(msg);

    switch (msg.performative()) {
      case Performative::kRequest:
        send(pu_handle_request(profile(msg.receiver()), msg, factory_,
                               ev.time + lat().pu_proc_delay));
        break;
      case Performative::kInform:
      case Performative::kRefuse:
        su_reply(ev.time, msg);
        break;
      case Performative::kConfirm: {
        auto [next, ack] = pu_handle_confirm(profile(msg.receiver()), scenario_.demand, msg,
                                             factory_, ev.time + lat().pu_proc_delay);
        profile(msg.receiver()) = next;
        send(std::move(ack));
        break;
      }
      case Performative::kAcceptProposal:
        break;
    }
  }

  // The SU handles one reply at a time. Within a busy period, the k-th reply
  // finishes at period_start + k * su_proc, not by repeated addition, so the
  // decision time matches elapsed_formula bit for bit.
  void su_reply(SimTime arrival, const AclMessage& msg) {
    if (arrival >= su_busy_until_) {
      busy_start_ = arrival;
      busy_count_ = 0;
    }
    ++busy_count_;
    const SimTime done = busy_start_ + static_cast<double>(busy_count_) * lat().su_proc_delay;
    su_busy_until_ = done;

    su_ = su_handle_reply(std::move(su_), msg);
    ++result_.outcome.responses;
    if (su_.phase != SuPhase::kDecided) return;

    result_.outcome.elapsed = done;
    auto [decision, out] = su_decide(su_, scenario_.payment_mode, conv_, factory_, done);
    if (const auto* award = std::get_if<Award>(&decision)) {
      result_.outcome.status = Success{award->winner, award->unit_price, award->amount};
    } else {
      result_.outcome.status = Failure{};
    }
    for (auto& m : out) send(std::move(m));
  }

  const Scenario& scenario_;
  std::vector<PuProfile> pus_;
  MessageFactory factory_;
  ConversationCounter conversations_;
  ConversationId conv_ = 0;
  EventQueue queue_;
  SuState su_{};
  SimTime su_busy_until_ = 0.0;
  SimTime busy_start_ = 0.0;
  std::size_t busy_count_ = 0;
  RunResult result_{};
};

}  // namespace

RunResult run_negotiation(const Scenario& scenario) {
  if (auto why = scenario_violation(scenario)) throw InvalidScenario(*why);
  return Negotiation(scenario).run();
}

SimTime elapsed_formula(std::size_t n_pus, const LatencyModel& lat) {
  if (n_pus == 0) throw std::invalid_argument("elapsed_formula needs at least one PU");
  // Same operation order as the event path: request hop, PU work, reply hop.
  const SimTime arrival = lat.transit_delay + lat.pu_proc_delay + lat.transit_delay;
  return arrival + static_cast<double>(n_pus) * lat.su_proc_delay;
}

}  // namespace specneg

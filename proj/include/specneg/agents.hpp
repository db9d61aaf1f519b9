#pragma once

// SU and PU negotiation roles as pure state machines. Each step takes the
// current state plus one incoming message and returns the next state and any
// outgoing messages; the caller owns time and delivery.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "specneg/acl.hpp"

namespace specneg {

struct PuProfile {
  AgentId id;
  ChannelCount free_channels;
  Currency unit_price;

  friend bool operator==(const PuProfile&, const PuProfile&) = default;
};

struct SuDemand {
  ChannelCount nbc;
  friend bool operator==(const SuDemand&, const SuDemand&) = default;
};

struct Offer {
  AgentId pu;
  Currency unit_price;
  friend bool operator==(const Offer&, const Offer&) = default;
};

enum class SuPhase { kCollecting, kDecided };

struct SuState {
  SuDemand demand;
  std::set<AgentId> expected_replies;
  std::vector<Offer> offers;  // arrival order
  std::set<AgentId> refusals;
  SuPhase phase = SuPhase::kCollecting;

  std::size_t replies() const { return offers.size() + refusals.size(); }
  bool has_replied(const AgentId& pu) const;

  friend bool operator==(const SuState&, const SuState&) = default;
};

enum class PaymentMode { kUnitPrice, kTotalPrice };

struct Award {
  AgentId winner;
  Currency unit_price;
  Currency amount;
  friend bool operator==(const Award&, const Award&) = default;
};

struct NoDeal {
  friend bool operator==(const NoDeal&, const NoDeal&) = default;
};

using Decision = std::variant<Award, NoDeal>;

enum class AgentErrc {
  kEmptyPuSet,
  kNotAddressee,
  kDuplicateReply,
  kUnknownPu,
  kNotReady,
  kOversubscribed,
  kUnexpectedMessage,
};

class AgentError : public std::runtime_error {
 public:
  AgentError(AgentErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  AgentErrc code() const { return code_; }

 private:
  AgentErrc code_;
};

/// Amount the SU pays for `nbc` channels at `unit_price`.
Currency payment_amount(PaymentMode mode, Currency unit_price, ChannelCount nbc);

/// Opens the negotiation: one REQUEST per PU, ascending PU index.
std::pair<SuState, std::vector<AclMessage>> su_init(SuDemand demand,
                                                    const std::vector<AgentId>& pus,
                                                    ConversationId conv,
                                                    MessageFactory& factory,
                                                    SimTime now = 0.0);

/// INFORM with the unit price when the PU can cover the whole demand,
/// otherwise REFUSE carrying the free channel count.
AclMessage pu_handle_request(const PuProfile& profile, const AclMessage& request,
                             MessageFactory& factory, SimTime now);

SuState su_handle_reply(SuState state, const AclMessage& reply);

/// Cheapest offer; ties go to the lowest PU index.
std::optional<Offer> select_best_offer(const std::vector<Offer>& offers);

std::pair<Decision, std::vector<AclMessage>> su_decide(const SuState& state,
                                                       PaymentMode mode,
                                                       ConversationId conv,
                                                       MessageFactory& factory,
                                                       SimTime now);

/// Commits the channels and acknowledges with ACCEPT_PROPOSAL.
std::pair<PuProfile, AclMessage> pu_handle_confirm(const PuProfile& profile,
                                                   SuDemand demand,
                                                   const AclMessage& confirm,
                                                   MessageFactory& factory,
                                                   SimTime now);

}  // namespace specneg

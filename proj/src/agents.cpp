#include "specneg/agents.hpp"

#include <algorithm>

namespace specneg {

namespace {

void require_addressee(const PuProfile& profile, const AclMessage& msg) {
  if (msg.receiver() != profile.id) {
    throw AgentError(AgentErrc::kNotAddressee,
                     msg.receiver().to_string() + " message delivered to " +
                         profile.id.to_string());
  }
}

void require_performative(const AclMessage& msg, Performative want) {
  if (msg.performative() != want) {
    throw AgentError(AgentErrc::kUnexpectedMessage,
                     std::string("expected ") + to_string(want) + ", got " +
                         to_string(msg.performative()));
  }
}

}  // namespace

bool SuState::has_replied(const AgentId& pu) const {
  return refusals.contains(pu) ||
         std::any_of(offers.begin(), offers.end(),
                     [&](const Offer& o) { return o.pu == pu; });
}

Currency payment_amount(PaymentMode mode, Currency unit_price, ChannelCount nbc) {
  return mode == PaymentMode::kTotalPrice ? unit_price * nbc : unit_price;
}

std::pair<SuState, std::vector<AclMessage>> su_init(SuDemand demand,
                                                    const std::vector<AgentId>& pus,
                                                    ConversationId conv,
                                                    MessageFactory& factory, SimTime now) {
  if (pus.empty()) throw AgentError(AgentErrc::kEmptyPuSet, "no PUs to negotiate with");

  SuState state{demand, {}, {}, {}, SuPhase::kCollecting};
  for (const auto& pu : pus) {
    if (pu.is_su()) throw std::invalid_argument("SU cannot be in the PU set");
    if (!state.expected_replies.insert(pu).second) {
      throw std::invalid_argument("duplicate PU " + pu.to_string());
    }
  }

  std::vector<AclMessage> out;
  out.reserve(pus.size());
  for (const auto& pu : state.expected_replies) {
    out.push_back(factory.make(conv, AgentId::su(), pu, Performative::kRequest,
                               ChannelRequest(demand.nbc), now));
  }
  return {std::move(state), std::move(out)};
}

AclMessage pu_handle_request(const PuProfile& profile, const AclMessage& request,
                             MessageFactory& factory, SimTime now) {
  require_addressee(profile, request);
  require_performative(request, Performative::kRequest);

  const auto nbc = std::get<ChannelRequest>(request.body()).nbc;
  if (nbc <= profile.free_channels) {
    return factory.make(request.conversation_id(), profile.id, request.sender(),
                        Performative::kInform, PriceQuote(profile.unit_price), now);
  }
  return factory.make(request.conversation_id(), profile.id, request.sender(),
                      Performative::kRefuse, Refusal(profile.free_channels), now);
}

SuState su_handle_reply(SuState state, const AclMessage& reply) {
  const auto& from = reply.sender();
  if (!state.expected_replies.contains(from)) {
    throw AgentError(AgentErrc::kUnknownPu, from.to_string() + " is not in this conversation");
  }
  if (state.phase == SuPhase::kDecided || state.has_replied(from)) {
    throw AgentError(AgentErrc::kDuplicateReply, from.to_string() + " already replied");
  }

  switch (reply.performative()) {
    case Performative::kInform:
      state.offers.push_back(Offer{from, std::get<PriceQuote>(reply.body()).unit_price});
      break;
    case Performative::kRefuse:
      state.refusals.insert(from);
      break;
    default:
      throw AgentError(AgentErrc::kUnexpectedMessage,
                       std::string("SU cannot handle ") + to_string(reply.performative()) +
                           " while collecting");
  }

  if (state.replies() == state.expected_replies.size()) state.phase = SuPhase::kDecided;
  return state;
}

std::optional<Offer> select_best_offer(const std::vector<Offer>& offers) {
  if (offers.empty()) return std::nullopt;
  return *std::min_element(offers.begin(), offers.end(), [](const Offer& a, const Offer& b) {
    if (a.unit_price != b.unit_price) return a.unit_price < b.unit_price;
    return a.pu.index() < b.pu.index();
  });
}

std::pair<Decision, std::vector<AclMessage>> su_decide(const SuState& state,
                                                       PaymentMode mode,
                                                       ConversationId conv,
                                                       MessageFactory& factory,
                                                       SimTime now) {
  if (state.phase != SuPhase::kDecided) {
    throw AgentError(AgentErrc::kNotReady,
                     std::to_string(state.expected_replies.size() - state.replies()) +
                         " replies still pending");
  }

  const auto best = select_best_offer(state.offers);
  if (!best) return {NoDeal{}, {}};

  const Award award{best->pu, best->unit_price,
                    payment_amount(mode, best->unit_price, state.demand.nbc)};
  std::vector<AclMessage> out;
  out.push_back(factory.make(conv, AgentId::su(), award.winner, Performative::kConfirm,
                             Confirmation(award.amount), now));
  return {award, std::move(out)};
}

std::pair<PuProfile, AclMessage> pu_handle_confirm(const PuProfile& profile,
                                                   SuDemand demand,
                                                   const AclMessage& confirm,
                                                   MessageFactory& factory,
                                                   SimTime now) {
  require_addressee(profile, confirm);
  require_performative(confirm, Performative::kConfirm);
  if (profile.free_channels < demand.nbc) {
    throw AgentError(AgentErrc::kOversubscribed,
                     profile.id.to_string() + " has " + std::to_string(profile.free_channels) +
                         " free channels, " + std::to_string(demand.nbc) + " confirmed");
  }

  PuProfile next = profile;
  next.free_channels -= demand.nbc;
  auto ack = factory.make(confirm.conversation_id(), profile.id, confirm.sender(),
                          Performative::kAcceptProposal, Acceptance{}, now);
  return {next, std::move(ack)};
}

}  // namespace specneg

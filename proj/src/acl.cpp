#include "specneg/acl.hpp"

#include <string>

namespace specneg {

const char* to_string(Performative p) {
  switch (p) {
    case Performative::kRequest: return "REQUEST";
    case Performative::kInform: return "INFORM";
    case Performative::kRefuse: return "REFUSE";
    case Performative::kConfirm: return "CONFIRM";
    case Performative::kAcceptProposal: return "ACCEPT_PROPOSAL";
  }
  return "?";
}

AgentId AgentId::pu(std::uint32_t index) {
  if (index == 0) throw std::invalid_argument("PU index must be >= 1");
  return AgentId(Role::kPu, index);
}

std::string AgentId::to_string() const {
  return is_su() ? std::string("SU") : "PU" + std::to_string(index_);
}

ChannelRequest::ChannelRequest(ChannelCount n) : nbc(n) {
  if (n < 1) throw std::invalid_argument("ChannelRequest.nbc must be >= 1");
}

PriceQuote::PriceQuote(Currency price) : unit_price(price) {
  if (price <= 0) throw std::invalid_argument("PriceQuote.unit_price must be > 0");
}

Refusal::Refusal(ChannelCount free) : available(free) {
  if (free < 0) throw std::invalid_argument("Refusal.available must be >= 0");
}

Confirmation::Confirmation(Currency amt) : amount(amt) {
  if (amt <= 0) throw std::invalid_argument("Confirmation.amount must be > 0");
}

namespace {

struct Summary {
  std::string operator()(const ChannelRequest& b) const { return "nbc=" + std::to_string(b.nbc); }
  std::string operator()(const PriceQuote& b) const { return "price=" + std::to_string(b.unit_price); }
  std::string operator()(const Refusal& b) const { return "available=" + std::to_string(b.available); }
  std::string operator()(const Confirmation& b) const { return "amount=" + std::to_string(b.amount); }
  std::string operator()(const Acceptance&) const { return "ack"; }
};

const char* body_name(std::size_t index) {
  static const char* const kNames[] = {"ChannelRequest", "PriceQuote", "Refusal",
                                       "Confirmation", "Acceptance"};
  return index < std::size(kNames) ? kNames[index] : "?";
}

std::optional<ProtocolViolation> check_pairing(Performative perf, const MessageBody& body) {
  const std::size_t want = body_index_for(perf);
  if (body.index() == want) return std::nullopt;
  return ProtocolViolation{ViolationRule::kBodyMismatch,
                           std::string(to_string(perf)) + " requires " + body_name(want) +
                               " body, got " + body_name(body.index())};
}

}  // namespace

std::string summarize(const MessageBody& body) { return std::visit(Summary{}, body); }

std::size_t body_index_for(Performative p) {
  switch (p) {
    case Performative::kRequest: return 0;
    case Performative::kInform: return 1;
    case Performative::kRefuse: return 2;
    case Performative::kConfirm: return 3;
    case Performative::kAcceptProposal: return 4;
  }
  return std::variant_npos;
}

bool sent_by_su(Performative p) {
  return p == Performative::kRequest || p == Performative::kConfirm;
}

std::optional<ProtocolViolation> validate_message(const AclMessage& msg) {
  if (auto v = check_pairing(msg.performative(), msg.body())) return v;

  const bool from_su = sent_by_su(msg.performative());
  const bool ok = from_su ? (msg.sender().is_su() && !msg.receiver().is_su())
                          : (!msg.sender().is_su() && msg.receiver().is_su());
  if (!ok) {
    return ProtocolViolation{
        ViolationRule::kWrongDirection,
        std::string(to_string(msg.performative())) + " must flow " +
            (from_su ? "SU->PU" : "PU->SU") + ", got " + msg.sender().to_string() + "->" +
            msg.receiver().to_string()};
  }
  return std::nullopt;
}

AclMessage MessageFactory::make(ConversationId conv, AgentId from, AgentId to,
                                Performative perf, MessageBody body, SimTime send_time) {
  if (auto v = check_pairing(perf, body)) throw ProtocolError(std::move(*v));
  return AclMessage(++last_id_, conv, from, to, perf, std::move(body), send_time);
}

}  // namespace specneg

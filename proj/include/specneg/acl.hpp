#pragma once

// Message vocabulary for the one-to-many spectrum negotiation: performatives,
// typed bodies, agent identities and the rules tying them together.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace specneg {

using Currency = std::int64_t;
using ChannelCount = std::int64_t;
using SimTime = double;
using ConversationId = std::uint64_t;
using MessageId = std::uint64_t;

enum class Performative { kRequest, kInform, kRefuse, kConfirm, kAcceptProposal };

inline constexpr Performative kAllPerformatives[] = {
    Performative::kRequest, Performative::kInform, Performative::kRefuse,
    Performative::kConfirm, Performative::kAcceptProposal};

/// Upper-case FIPA name, e.g. "ACCEPT_PROPOSAL".
const char* to_string(Performative p);

enum class Role { kSu, kPu };

/// The SU is always index 0; PUs are numbered 1..N.
class AgentId {
 public:
  static AgentId su() { return AgentId(Role::kSu, 0); }
  static AgentId pu(std::uint32_t index);

  Role role() const { return role_; }
  std::uint32_t index() const { return index_; }
  bool is_su() const { return role_ == Role::kSu; }

  /// "SU" or "PU<k>".
  std::string to_string() const;

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;

 private:
  AgentId(Role role, std::uint32_t index) : role_(role), index_(index) {}

  Role role_;
  std::uint32_t index_;
};

// Bodies validate their payload on construction.

struct ChannelRequest {
  explicit ChannelRequest(ChannelCount n);
  ChannelCount nbc;
  friend bool operator==(const ChannelRequest&, const ChannelRequest&) = default;
};

struct PriceQuote {
  explicit PriceQuote(Currency price);
  Currency unit_price;
  friend bool operator==(const PriceQuote&, const PriceQuote&) = default;
};

struct Refusal {
  explicit Refusal(ChannelCount free);
  ChannelCount available;
  friend bool operator==(const Refusal&, const Refusal&) = default;
};

struct Confirmation {
  explicit Confirmation(Currency amt);
  Currency amount;
  friend bool operator==(const Confirmation&, const Confirmation&) = default;
};

struct Acceptance {
  friend bool operator==(const Acceptance&, const Acceptance&) = default;
};

using MessageBody =
    std::variant<ChannelRequest, PriceQuote, Refusal, Confirmation, Acceptance>;

/// Compact text form used in traces: "nbc=2", "price=230", "available=1",
/// "amount=230", "ack".
std::string summarize(const MessageBody& body);

enum class ViolationRule { kBodyMismatch, kWrongDirection };

struct ProtocolViolation {
  ViolationRule rule;
  std::string detail;
};

class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(ProtocolViolation v)
      : std::runtime_error(v.detail), violation_(std::move(v)) {}
  const ProtocolViolation& violation() const { return violation_; }

 private:
  ProtocolViolation violation_;
};

/// Expected body alternative index for a performative.
std::size_t body_index_for(Performative p);
/// True when the performative must be sent by the SU.
bool sent_by_su(Performative p);

class MessageFactory;

/// One negotiation step between two agents. Immutable once built; only
/// MessageFactory can build one, and it refuses mismatched bodies.
class AclMessage {
 public:
  MessageId msg_id() const { return msg_id_; }
  ConversationId conversation_id() const { return conversation_id_; }
  const AgentId& sender() const { return sender_; }
  const AgentId& receiver() const { return receiver_; }
  Performative performative() const { return performative_; }
  const MessageBody& body() const { return body_; }
  SimTime send_time() const { return send_time_; }

  friend bool operator==(const AclMessage&, const AclMessage&) = default;

 private:
  friend class MessageFactory;
  AclMessage(MessageId id, ConversationId conv, AgentId from, AgentId to,
             Performative perf, MessageBody body, SimTime t)
      : msg_id_(id), conversation_id_(conv), sender_(from), receiver_(to),
        performative_(perf), body_(std::move(body)), send_time_(t) {}

  MessageId msg_id_;
  ConversationId conversation_id_;
  AgentId sender_;
  AgentId receiver_;
  Performative performative_;
  MessageBody body_;
  SimTime send_time_;
};

/// Returns nullopt when the message is well-formed, otherwise the first
/// broken rule (pairing is checked before direction).
std::optional<ProtocolViolation> validate_message(const AclMessage& msg);

/// Issues message ids in creation order. One per simulation run.
class MessageFactory {
 public:
  /// Throws ProtocolError(kBodyMismatch) if `body` does not pair with `perf`.
  /// Direction is not enforced here; validate_message reports it.
  AclMessage make(ConversationId conv, AgentId from, AgentId to,
                  Performative perf, MessageBody body, SimTime send_time);

  MessageId issued() const { return last_id_; }

  friend bool operator==(const MessageFactory&, const MessageFactory&) = default;

 private:
  MessageId last_id_ = 0;
};

/// Fresh conversation ids, starting at 1.
class ConversationCounter {
 public:
  ConversationId next() { return ++last_; }
  ConversationId last_issued() const { return last_; }

 private:
  ConversationId last_ = 0;
};

}  // namespace specneg

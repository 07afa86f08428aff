// Error vocabulary shared by every kernel module.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amk {

enum class Errc {
  // component runtime
  MalformedTemplate,
  RoleMismatch,
  SignatureMismatch,
  AlreadyBound,
  UnknownBinding,
  Unbound,
  NotStarted,
  InterceptorVeto,
  UnknownFacet,
  IllegalTransition,
  UnboundMandatoryInterface,
  UnknownInstance,
  UnknownTemplate,
  AdlParseError,
  // personalities
  CompositionError,
  UnknownMember,
  MissingInterface,
  DuplicateId,
  // environment
  MalformedXml,
  MissingId,
  UnknownMonitor,
  InactiveMonitor,
  UnknownNode,
  // directory
  LevelMismatch,
  MissingOffer,
  NoMatch,
  CycleDetected,
  UnknownPath,
  InUse,
  // contracts
  UnknownSubscription,
  AlreadyDestroyed,
  WeaveFailure,
  // harness
  ScenarioParseError,
  TraceMismatch,
  FunctionalMismatch,
  BadArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace amk

#include "amk/errors.hpp"

namespace amk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedTemplate: return "MalformedTemplate";
    case Errc::RoleMismatch: return "RoleMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::AlreadyBound: return "AlreadyBound";
    case Errc::UnknownBinding: return "UnknownBinding";
    case Errc::Unbound: return "Unbound";
    case Errc::NotStarted: return "NotStarted";
    case Errc::InterceptorVeto: return "InterceptorVeto";
    case Errc::UnknownFacet: return "UnknownFacet";
    case Errc::IllegalTransition: return "IllegalTransition";
    case Errc::UnboundMandatoryInterface: return "UnboundMandatoryInterface";
    case Errc::UnknownInstance: return "UnknownInstance";
    case Errc::UnknownTemplate: return "UnknownTemplate";
    case Errc::AdlParseError: return "AdlParseError";
    case Errc::CompositionError: return "CompositionError";
    case Errc::UnknownMember: return "UnknownMember";
    case Errc::MissingInterface: return "MissingInterface";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MalformedXml: return "MalformedXml";
    case Errc::MissingId: return "MissingId";
    case Errc::UnknownMonitor: return "UnknownMonitor";
    case Errc::InactiveMonitor: return "InactiveMonitor";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::MissingOffer: return "MissingOffer";
    case Errc::NoMatch: return "NoMatch";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnknownPath: return "UnknownPath";
    case Errc::InUse: return "InUse";
    case Errc::UnknownSubscription: return "UnknownSubscription";
    case Errc::AlreadyDestroyed: return "AlreadyDestroyed";
    case Errc::WeaveFailure: return "WeaveFailure";
    case Errc::ScenarioParseError: return "ScenarioParseError";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::FunctionalMismatch: return "FunctionalMismatch";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace amk

// Component model data types: interface declarations, templates, bindings
// and the controller state attached to every runtime instance.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amk/value.hpp"

namespace amk::core {

using TemplateId = std::string;
using InstanceId = std::string;
using BindingId = std::string;

struct OperationSig {
  std::string name;
  int arity = 0;

  bool operator==(const OperationSig&) const = default;
};

enum class Role { Client, Server };

struct InterfaceDecl {
  std::string name;
  Role role = Role::Server;
  std::vector<OperationSig> signature;
  bool optional = false;  // client interfaces only; servers ignore it

  bool operator==(const InterfaceDecl&) const = default;
};

// server signature covers the client's operation set
bool signatures_compatible(const InterfaceDecl& client, const InterfaceDecl& server);

struct BindingSpec {
  std::string client_component;
  std::string client_interface;
  std::string server_component;
  std::string server_interface;

  bool operator==(const BindingSpec&) const = default;
};

// Delegation from a composite's own interface to one of its children.
struct ExportSpec {
  std::string interface;
  std::string child;
  std::string child_interface;

  bool operator==(const ExportSpec&) const = default;
};

struct PrimitiveContent {
  std::string behavior;

  bool operator==(const PrimitiveContent&) const = default;
};

struct CompositeContent {
  std::vector<TemplateId> children;
  std::vector<BindingSpec> bindings;
  std::vector<ExportSpec> exports;

  bool operator==(const CompositeContent&) const = default;
};

struct ComponentTemplate {
  TemplateId id;
  std::vector<InterfaceDecl> interfaces;
  std::variant<PrimitiveContent, CompositeContent> content;
  std::string adl;  // cached canonical text, not part of the structure

  bool is_primitive() const { return std::holds_alternative<PrimitiveContent>(content); }
  const PrimitiveContent& primitive() const { return std::get<PrimitiveContent>(content); }
  const CompositeContent& composite() const { return std::get<CompositeContent>(content); }
  CompositeContent& composite() { return std::get<CompositeContent>(content); }

  const InterfaceDecl* find_interface(std::string_view name) const;

  bool structurally_equal(const ComponentTemplate& other) const {
    return id == other.id && interfaces == other.interfaces && content == other.content;
  }
};

enum class Lifecycle { Created, Started, Stopped };

std::string_view to_string(Lifecycle state) noexcept;

struct Binding {
  BindingId id;
  InstanceId client_instance;
  std::string client_interface;
  InstanceId server_instance;
  std::string server_interface;
  bool active = false;
  // instance owning the binding ("" for the runtime root scope)
  InstanceId scope;

  bool operator==(const Binding&) const = default;
};

struct CallContext {
  InstanceId instance;
  std::string interface;
  std::string op;
  std::vector<Value>& args;
  Value result;
};

// Wraps invocations crossing an interface. before() may veto the call by
// throwing Error{InterceptorVeto}; after() runs in reverse chain order.
class Interceptor {
 public:
  explicit Interceptor(std::string name) : name_(std::move(name)) {}
  virtual ~Interceptor() = default;

  const std::string& name() const { return name_; }
  virtual void before(CallContext&) {}
  virtual void after(CallContext&) {}

 private:
  std::string name_;
};

// Implementation of a primitive component.
class Behavior {
 public:
  virtual ~Behavior() = default;
  virtual Value call(const std::string& op, const std::vector<Value>& args) = 0;
};

using BehaviorFactory = std::function<std::unique_ptr<Behavior>()>;

struct ControllerState {
  // interface name -> ordered interceptor chain
  std::map<std::string, std::vector<std::shared_ptr<Interceptor>>> interceptors;
  // introspection facets; content and binding are always present
  std::vector<std::string> facets{"content", "binding", "lifecycle"};
};

struct FacetView {
  std::variant<std::vector<InstanceId>, std::vector<Binding>, Lifecycle> view;

  const std::vector<InstanceId>& children() const { return std::get<std::vector<InstanceId>>(view); }
  const std::vector<Binding>& bindings() const { return std::get<std::vector<Binding>>(view); }
  Lifecycle state() const { return std::get<Lifecycle>(view); }
};

}  // namespace amk::core

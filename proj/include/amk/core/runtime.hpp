// Reflective component runtime: instantiation, explicit bindings,
// interceptor chains, lifecycle control and introspection facets.
//
// Concurrency: invocations and introspection take a shared structural lock;
// instantiate/bind/unbind/lifecycle and interceptor changes take it
// exclusively, so structural mutation never overlaps an in-flight call
// (quiescence). Invocations entering the same instance are serialized.
// Behaviors must not call back into the runtime.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "amk/core/model.hpp"

namespace amk::core {

class FunctionBehavior : public Behavior {
 public:
  using Fn = std::function<Value(const std::string&, const std::vector<Value>&)>;
  explicit FunctionBehavior(Fn fn) : fn_(std::move(fn)) {}
  Value call(const std::string& op, const std::vector<Value>& args) override { return fn_(op, args); }

 private:
  Fn fn_;
};

class Runtime {
 public:
  Runtime();

  // --- behaviors ------------------------------------------------------
  void register_behavior(const std::string& behavior_id, BehaviorFactory factory);
  void register_behavior_fn(const std::string& behavior_id, FunctionBehavior::Fn fn);
  bool has_behavior(const std::string& behavior_id) const;

  // --- templates ------------------------------------------------------
  // Validates per-template invariants. Re-registering a structurally equal
  // template is a no-op; a conflicting one raises DuplicateId.
  void register_template(ComponentTemplate tmpl);
  const ComponentTemplate* find_template(const TemplateId& id) const;

  // --- operations -----------------------------------------------------
  InstanceId instantiate(const TemplateId& template_id);
  InstanceId instantiate(const ComponentTemplate& tmpl);
  Binding bind(const InstanceId& client_instance, const std::string& client_interface,
               const InstanceId& server_instance, const std::string& server_interface);
  void unbind(const BindingId& binding_id);
  Value invoke(const InstanceId& instance, const std::string& interface, const std::string& op,
               std::vector<Value> args);
  FacetView introspect(const InstanceId& instance, const std::string& facet) const;
  void set_lifecycle(const InstanceId& instance, Lifecycle target);

  // --- controller -----------------------------------------------------
  void install_interceptor(const InstanceId& instance, const std::string& interface,
                           std::shared_ptr<Interceptor> interceptor);
  void remove_interceptor(const InstanceId& instance, const std::string& interface,
                          const std::string& name);
  std::vector<std::string> interceptor_chain(const InstanceId& instance,
                                             const std::string& interface) const;
  void add_facet(const InstanceId& instance, const std::string& facet);

  // --- structure queries ----------------------------------------------
  bool exists(const InstanceId& instance) const;
  Lifecycle state(const InstanceId& instance) const;
  const ComponentTemplate& template_of(const InstanceId& instance) const;
  std::vector<InstanceId> children(const InstanceId& instance) const;
  std::optional<InstanceId> parent(const InstanceId& instance) const;
  std::vector<Binding> bindings_of(const InstanceId& instance) const;
  std::optional<Binding> find_binding(const BindingId& binding_id) const;
  std::vector<Binding> all_bindings() const;
  std::vector<InstanceId> root_instances() const;

  // --- composition surgery (used by weaving and rebinding) -------------
  // Creates an instance of `wrapper` whose children are existing root
  // instances instead of fresh ones. `children` pairs template-id slots of
  // the wrapper with the adopted instances, in order.
  InstanceId adopt_as_composite(ComponentTemplate wrapper, const std::vector<InstanceId>& adopted);
  // Moves `child` out of `composite` back to the root scope. Bindings
  // touching the child inside the composite must be gone already.
  void detach_child(const InstanceId& composite, const InstanceId& child);
  // Adopts an existing root instance as an additional child of `composite`,
  // extending the composite's template child list with the child's template.
  void attach_child(const InstanceId& composite, const InstanceId& child);

 private:
  struct Instance {
    InstanceId id;
    TemplateId template_id;
    Lifecycle state = Lifecycle::Created;
    ControllerState controller;
    std::unique_ptr<Behavior> behavior;  // primitive content
    std::vector<InstanceId> children;    // composite content
    std::optional<InstanceId> parent;
    mutable std::mutex call_mu;
  };

  Instance& instance_ref(const InstanceId& id);
  const Instance& instance_ref(const InstanceId& id) const;
  const InterfaceDecl& interface_decl(const Instance& inst, const std::string& name) const;
  InstanceId make_instance(const ComponentTemplate& tmpl, std::optional<InstanceId> parent,
                           std::vector<TemplateId>& stack);
  const InstanceId* child_by_template(const Instance& composite, const TemplateId& tmpl) const;
  bool client_endpoint_bound(const InstanceId& instance, const std::string& interface) const;
  void check_mandatory_bound(const Instance& inst) const;
  void set_state_recursive(Instance& inst, Lifecycle target);
  void refresh_binding_activity();
  std::vector<Binding> bindings_of_locked(const InstanceId& instance) const;
  std::string fresh_id(const std::string& stem);

  mutable std::shared_mutex structure_mu_;
  std::map<std::string, BehaviorFactory> behaviors_;
  std::map<TemplateId, ComponentTemplate> templates_;
  std::map<InstanceId, std::unique_ptr<Instance>> instances_;
  std::map<BindingId, Binding> bindings_;
  std::map<std::string, int> id_counters_;
  int binding_counter_ = 0;
};

}  // namespace amk::core

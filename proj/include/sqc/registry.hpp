#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sqc/document.hpp"

namespace sqc {

enum class RequestCategory { DesignEntity, Function, Library };
std::string to_string(RequestCategory c);

struct RequestKey {
  RequestCategory category = RequestCategory::Function;
  std::string operation;
  std::vector<std::string> parameter_signature;  // sorted, unique

  friend auto operator<=>(const RequestKey&, const RequestKey&) = default;
  std::string str() const;
};

/// Builds a key with the signature canonicalized (sorted, duplicates removed).
RequestKey make_key(RequestCategory c, std::string operation, std::vector<std::string> params);

using RequestArgs = std::map<std::string, std::string>;
/// Pure processing step: receives the extracted bundle, returns the bundle to inject.
using Handler = std::function<ParameterBundle(const ParameterBundle&, const RequestArgs&)>;

struct HandlerEntry {
  std::string selector;  // what to extract first; "" for nothing
  Handler fn;
  int number = 0;        // registration order
};

class Registry {
 public:
  /// Throws DuplicateRegistration.
  void add(const RequestKey& key, std::string selector, Handler fn);
  const HandlerEntry* find(const RequestKey& key) const;
  std::vector<RequestKey> keys() const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<RequestKey, HandlerEntry> table_;
};

/// Built-in handlers for topology, circuit, layout and process requests.
const Registry& default_registry();

/// extract -> handler -> inject. Args must name exactly the key's parameters.
/// Throws UnregisteredRequest, InvalidArguments, or the handler's error; the
/// input document is never modified.
DesignDocument dispatch(const Registry& reg, const RequestKey& key, const DesignDocument& doc, const RequestArgs& args);

}  // namespace sqc

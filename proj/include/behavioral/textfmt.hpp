#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "behavioral/network.hpp"

namespace behavioral {

/// Parse failure with a position pointing inside the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Network declaration as written: behavior names per subsystem role plus
/// the edge table. Resolved against the model's behaviors on demand.
struct NetworkSpec {
  std::vector<std::pair<std::string, std::string>> bindings;  // (plant, desired)
  std::vector<Edge> edges;
};

struct ModelFile {
  std::vector<std::pair<std::string, Behavior>> behaviors;  // declaration order
  std::vector<std::pair<std::string, NetworkSpec>> networks;

  bool has_behavior(const std::string& name) const;
  const Behavior& behavior(const std::string& name) const;
  bool has_network(const std::string& name) const;
  const NetworkSpec& network(const std::string& name) const;
};

/// Binds a declared network's behaviors into a Network value.
Network instantiate(const ModelFile& model, const std::string& network_name);

ModelFile parse_model(std::string_view text);

/// Canonical text for one polynomial row.
std::string serialize_row(const PolyMat& kernel, Eigen::Index row);

/// Behavior definition block. With canonical set, the kernel is replaced by
/// its minimized monic-pivot echelon representative.
std::string serialize(const std::string& name, const Behavior& b, bool canonical = false);

std::string serialize(const std::string& name, const NetworkSpec& net);

std::string serialize(const ModelFile& model);

}  // namespace behavioral

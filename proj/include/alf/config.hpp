#pragma once

// Instance configuration files: one JSON document describes one instance.
// Loading validates the whole kind-specific schema before anything runs.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alf/boxes.hpp"
#include "alf/codec.hpp"
#include "alf/invgen.hpp"
#include "alf/synth.hpp"

namespace alf {

enum class Kind { Interval, Rectangle, Houdini, IceInvariant, AdequateFixpoint, AbstractPost, SygusLite };

std::string_view kind_name(Kind k);

/// Schema violation. `field` is the dotted path of the offending value.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, std::string reason, const std::string& source = "");
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

struct BoxParams {
  std::size_t dim;
  BoxTarget target;
};

struct ProgramParams {
  LoopProgram program;
  PredicateList predicates;
};

struct FixpointParams {
  TransitionSystem system;
};

struct AbstractPostParams {
  TransitionSystem system;
  Rect xhat;
};

struct SygusParams {
  SynthSpec spec;
  std::size_t max_size;
};

using InstanceParams =
    std::variant<BoxParams, ProgramParams, FixpointParams, AbstractPostParams, SygusParams>;

struct InstanceConfig {
  Kind kind;
  std::string learner;
  std::size_t budget;
  std::uint64_t seed;
  bool checked;
  InstanceParams params;
  Json raw;
  /// fnv1a_hex of the canonical dump of `raw`.
  std::string digest;
};

/// Throws ConfigError on any schema violation.
InstanceConfig parse_config(const Json& doc);

/// Throws std::runtime_error when the file cannot be read or is not JSON,
/// ConfigError (prefixed with the file name) on schema violations.
InstanceConfig load_config(const std::filesystem::path& path);

}  // namespace alf

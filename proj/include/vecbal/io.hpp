#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vecbal/selection.hpp"
#include "vecbal/two_partition.hpp"

namespace vecbal {

struct Instance {
  enum class Kind { Sequence, Sets };
  Kind kind = Kind::Sequence;
  VectorSequence seq;
  SetSequence sets;
};

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst);

nlohmann::json report_to_json(const DiscrepancyReport& rep);

// write temp file in the target directory, then rename
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace vecbal

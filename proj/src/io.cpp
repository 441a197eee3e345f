#include "vecbal/io.hpp"

#include <fstream>
#include <stdexcept>

namespace vecbal {

using nlohmann::json;

namespace {

json norm_to_json(const NormKind& kind, json& parent) {
  parent["norm"] = norm_name(kind);
  if (kind.tag == NormKind::Tag::WeightedDiag) parent["weights"] = kind.weights;
  return parent;
}

NormKind norm_from_json(const json& j) {
  std::vector<double> weights;
  if (j.contains("weights")) weights = j.at("weights").get<std::vector<double>>();
  return norm_from_name(j.at("norm").get<std::string>(), std::move(weights));
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  if (inst.kind == Instance::Kind::Sequence) {
    j["kind"] = "sequence";
    j["d"] = inst.seq.d;
    norm_to_json(inst.seq.norm, j);
    j["vectors"] = inst.seq.vectors;
  } else {
    j["kind"] = "sets";
    j["d"] = inst.sets.d;
    norm_to_json(inst.sets.norm, j);
    j["sets"] = inst.sets.sets;
  }
  return j;
}

Instance instance_from_json(const json& j) {
  Instance inst;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "sequence") {
    inst.kind = Instance::Kind::Sequence;
    inst.seq.d = j.at("d").get<std::size_t>();
    inst.seq.norm = norm_from_json(j);
    inst.seq.vectors = j.at("vectors").get<std::vector<Vec>>();
  } else if (kind == "sets") {
    inst.kind = Instance::Kind::Sets;
    inst.sets.d = j.at("d").get<std::size_t>();
    inst.sets.norm = norm_from_json(j);
    inst.sets.sets = j.at("sets").get<std::vector<std::vector<Vec>>>();
  } else {
    throw std::invalid_argument("instance: unknown kind '" + kind + "'");
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(load_json(path));
}

void save_instance(const std::filesystem::path& path, const Instance& inst) {
  write_json_atomic(path, instance_to_json(inst));
}

json report_to_json(const DiscrepancyReport& rep) {
  json j;
  j["bound"] = rep.bound;
  j["achieved"] = rep.achieved;
  j["per_class"] = rep.per_class_max;
  j["worst_prefix"] = {{"class", rep.worst_class}, {"k", rep.worst_prefix}};
  j["pass"] = rep.pass;
  return j;
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  return json::parse(in);
}

}  // namespace vecbal

#include "inspectra/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "inspectra/errors.hpp"

namespace inspectra {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError(std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

DetectionModel read_instance_json(const std::string& text) {
  const ordered_json j = parse(text, "instance");
  if (!j.is_object() || !j.contains("nodes") || !j.contains("components") ||
      !j.contains("monitoring")) {
    throw ValidationError("instance must have nodes, components, and monitoring");
  }
  std::vector<std::string> nodes, components;
  for (const auto& v : j.at("nodes")) {
    if (!v.is_string()) throw ValidationError("node ids must be strings");
    nodes.push_back(v.get<std::string>());
  }
  for (const auto& v : j.at("components")) {
    if (!v.is_string()) throw ValidationError("component ids must be strings");
    components.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> monitoring;
  for (const auto& [key, value] : j.at("monitoring").items()) {
    std::vector<std::string> ids;
    for (const auto& v : value) {
      if (!v.is_string()) throw ValidationError("monitoring entries must be strings");
      ids.push_back(v.get<std::string>());
    }
    monitoring.emplace_back(key, std::move(ids));
  }
  return DetectionModel(std::move(nodes), std::move(components), std::move(monitoring));
}

DetectionModel read_instance_file(const std::string& path) {
  return read_instance_json(read_text_file(path));
}

std::string write_instance_json(const DetectionModel& model, bool pretty) {
  ordered_json j;
  j["nodes"] = model.nodes();
  j["components"] = model.components();
  ordered_json mon = ordered_json::object();
  for (int i = 0; i < model.node_count(); ++i) {
    ordered_json arr = ordered_json::array();
    for (int e : model.monitored_by(i)) arr.push_back(model.components()[e]);
    mon[model.nodes()[i]] = std::move(arr);
  }
  j["monitoring"] = std::move(mon);
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

MixedStrategy read_strategy_json(const DetectionModel& model, const std::string& text) {
  const ordered_json j = parse(text, "strategy");
  if (!j.is_object() || !j.contains("side") || !j.contains("budget") || !j.contains("support")) {
    throw ValidationError("strategy must have side, budget, and support");
  }
  const std::string side_name = j.at("side").get<std::string>();
  Side side;
  if (side_name == "defender") {
    side = Side::kDefender;
  } else if (side_name == "attacker") {
    side = Side::kAttacker;
  } else {
    throw ValidationError("strategy side must be defender or attacker");
  }
  const int budget = j.at("budget").get<int>();
  std::vector<MixedStrategy::Entry> support;
  for (const auto& entry : j.at("support")) {
    if (!entry.contains("action") || !entry.contains("prob")) {
      throw ValidationError("support entries need action and prob");
    }
    std::vector<int> action;
    for (const auto& v : entry.at("action")) {
      const std::string id = v.get<std::string>();
      action.push_back(side == Side::kDefender ? model.node_index(id)
                                               : model.component_index(id));
    }
    support.push_back({std::move(action), entry.at("prob").get<double>()});
  }
  return MixedStrategy(side, budget, std::move(support));
}

MixedStrategy read_strategy_file(const DetectionModel& model, const std::string& path) {
  return read_strategy_json(model, read_text_file(path));
}

std::string write_strategy_json(const DetectionModel& model, const MixedStrategy& strategy,
                                bool pretty) {
  ordered_json j;
  j["side"] = strategy.side() == Side::kDefender ? "defender" : "attacker";
  j["budget"] = strategy.budget();
  ordered_json support = ordered_json::array();
  for (const auto& entry : strategy.support()) {
    ordered_json item;
    ordered_json action = ordered_json::array();
    for (int x : entry.action) {
      action.push_back(strategy.side() == Side::kDefender ? model.nodes().at(x)
                                                          : model.components().at(x));
    }
    item["action"] = std::move(action);
    item["prob"] = entry.prob;
    support.push_back(std::move(item));
  }
  j["support"] = std::move(support);
  return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

}  // namespace inspectra

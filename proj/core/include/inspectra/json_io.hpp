#pragma once

#include <string>

#include "inspectra/model.hpp"
#include "inspectra/strategies.hpp"

namespace inspectra {

// Instance files: {"nodes": [...], "components": [...],
// "monitoring": {"<node>": ["<component>", ...]}}. UTF-8, order-significant.
DetectionModel read_instance_json(const std::string& text);
DetectionModel read_instance_file(const std::string& path);
std::string write_instance_json(const DetectionModel& model, bool pretty = false);

// Strategy files: {"side": "defender"|"attacker", "budget": b,
// "support": [{"action": [ids...], "prob": p}, ...]}.
MixedStrategy read_strategy_json(const DetectionModel& model, const std::string& text);
MixedStrategy read_strategy_file(const DetectionModel& model, const std::string& path);
std::string write_strategy_json(const DetectionModel& model, const MixedStrategy& strategy,
                                bool pretty = false);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace inspectra

#pragma once

#include <filesystem>
#include <string>

#include "tensemap/harness/experiment.hpp"

namespace tensemap {

// JSON config files. Every section and key is optional and overlays the
// built-in defaults; unknown keys are rejected. Sections: "experiment",
// "geometry", "evaluator", "sim", "structure".
harness::ExperimentConfig load_config(const std::filesystem::path& path);
harness::ExperimentConfig config_from_json_text(const std::string& text);

std::string config_to_json_text(const harness::ExperimentConfig& cfg);

// Effective-parameter manifest written alongside every run (config plus
// derived seeds).
void write_manifest(const harness::ExperimentConfig& cfg,
                    const std::filesystem::path& path);
harness::ExperimentConfig load_manifest(const std::filesystem::path& path);

}  // namespace tensemap

#pragma once

#include <string>

#include "powctl/experiment.hpp"

namespace powctl {

// key = value configuration files ('#' starts a comment). Unknown keys are
// rejected so typos fail loudly.
ExperimentConfig read_config(const std::string& path);
void apply_config_line(ExperimentConfig& cfg, const std::string& key, const std::string& value);
void write_config(const ExperimentConfig& cfg, const std::string& path);
std::string config_to_string(const ExperimentConfig& cfg);

}  // namespace powctl

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rtt/generators.hpp"
#include "rtt/instance.hpp"

namespace rtt {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kFormatVersion = 1;

nlohmann::json job_to_json(const Job& job);
Job job_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& g);
Instance instance_from_json(const nlohmann::json& j);

std::string serialize_instance(const Instance& g);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// {"arc id": units}; arcs that are absent carry 0.
nlohmann::json flow_to_json(const FlowAssignment& f);
FlowAssignment flow_from_json(const nlohmann::json& j, std::size_t num_arcs);

nlohmann::json certificate_to_json(const GeneratedInstance& gen);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rtt

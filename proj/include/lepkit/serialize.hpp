#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lepkit/instances.hpp"
#include "lepkit/solver.hpp"

namespace lepkit {

inline constexpr const char* kInstanceFormat = "lep-instance/1";

nlohmann::json field_to_json(const FieldSpec& f);
// Rebuilds the canonical field and checks the stored modulus and alpha against it.
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatFq& m);
MatFq matrix_from_json(const FieldPtr& field, const nlohmann::json& j, std::size_t cols);

nlohmann::json instance_to_json(const LepInstance& inst);
// Throws FormatError on anything malformed.
LepInstance instance_from_json(const nlohmann::json& j);

// Canonical text: sorted keys, no whitespace, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

void write_instance(const std::filesystem::path& path, const LepInstance& inst);
LepInstance read_instance(const std::filesystem::path& path);

nlohmann::json plan_to_json(const ConstructionPlan& plan);
nlohmann::json outcome_to_json(const DistinguishOutcome& out);

}  // namespace lepkit

#pragma once

#include "fineint/arith.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fineint {

// Embedded copy of data/fixtures.json.
std::string_view fixture_text();
const nlohmann::json& fixtures();
std::uint64_t fnv1a64(std::string_view bytes);

ZVec zvec_from_json(const nlohmann::json& j);
QVec qvec_from_json(const nlohmann::json& j);
std::vector<ZVec> zvecs_from_json(const nlohmann::json& j);
std::vector<QVec> qvecs_from_json(const nlohmann::json& j);

// One compared field of one fixture record.
struct FixtureCheck {
    std::string section;
    std::string id;
    std::string field;
    bool ok = false;
    std::string expected;
    std::string actual;
};

// Sections: asymmetric, symmetric, dim3, hollow, examples, affine.
std::vector<std::string> fixture_sections();
// Recomputes every tabulated field of a section. Exceptions are reported as failed checks.
std::vector<FixtureCheck> check_fixture_section(const std::string& section);

} // namespace fineint

#include "cherednik/properties.hpp"

#include <nlohmann/json.hpp>

namespace cherednik {

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = {{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}};
  if (!r.ok()) j["firstFailure"] = r.first_failure;
}

}  // namespace cherednik

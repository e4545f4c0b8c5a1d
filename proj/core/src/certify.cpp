#include "cherednik/certify.hpp"

#include <nlohmann/json.hpp>

namespace cherednik {

void to_json(nlohmann::json& j, const Certificate& c) {
  j = {{"topDegree", c.top_degree},
       {"socleDims", c.socle_dims},
       {"socleTop", c.socle_top},
       {"betaNonzero", c.beta_nonzero},
       {"dunklStable", c.dunkl_stable},
       {"certified", c.certified()}};
  j["socleIrreducible"] = c.socle_irreducible ? nlohmann::json(*c.socle_irreducible) : nlohmann::json(nullptr);
  if (c.beta_nonzero)
    j["witness"] = {{"degree", c.witness_degree},
                    {"word", c.witness_word},
                    {"component", c.witness_component},
                    {"value", c.witness_value}};
}

}  // namespace cherednik

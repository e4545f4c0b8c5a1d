#include "cherednik/koszul.hpp"

#include <nlohmann/json.hpp>

namespace cherednik {

void to_json(nlohmann::json& j, const MatrixKoszulReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : r.noncommuting) pairs.push_back({a, b});
  j = {{"size", r.size},
       {"count", r.count},
       {"degrees", r.degrees},
       {"commute", r.commute},
       {"noncommuting", pairs},
       {"determinantQuotient", r.determinant_quotient},
       {"determinantsRegular", r.determinants_regular},
       {"predicted", r.predicted},
       {"columnQuotient", r.column_quotient},
       {"predictedMatchesColumns", r.predicted_matches_columns},
       {"bound", r.bound}};
  if (r.columns_in_J) {
    j["columnsInJ"] = *r.columns_in_J;
    j["columnsOutsideJ"] = r.columns_outside_J;
  }
  if (r.predicted_matches_L) j["predictedMatchesL"] = *r.predicted_matches_L;
}

}  // namespace cherednik

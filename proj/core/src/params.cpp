#include "cherednik/params.hpp"

#include <random>

#include "cherednik/error.hpp"

namespace cherednik {

std::vector<std::string> parameter_names(const GroupSpec& group) {
  std::vector<std::string> names;
  for (const auto& label : group.class_labels()) {
    if (label == "s" || label == "s-") {
      names.push_back("c");
    } else if (label == "s+") {
      names.push_back("d");
    } else {
      names.push_back("c" + label.substr(1));
    }
  }
  return names;
}

std::vector<FiniteField::Elem> draw_class_values(const FiniteField& field, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, field.size() - 1);
  std::vector<FiniteField::Elem> v(count);
  for (auto& x : v) x = dist(rng);
  return v;
}

CherednikParams<FiniteField> specialized_params(const GroupSpec& group, const FiniteField& field, int hbar,
                                                std::uint64_t seed) {
  require(hbar == 0 || hbar == 1, ErrorCode::InvalidParameters, "hbar must be 0 or 1");
  return {hbar, draw_class_values(field, group.class_labels().size(), seed)};
}

RationalFunctionField parameter_field(const GroupSpec& group, const FiniteField& base) {
  return RationalFunctionField(base, parameter_names(group));
}

CherednikParams<RationalFunctionField> symbolic_params(const GroupSpec& group, const RationalFunctionField& field,
                                                       int hbar) {
  require(hbar == 0 || hbar == 1, ErrorCode::InvalidParameters, "hbar must be 0 or 1");
  require(field.nparams() == static_cast<int>(group.class_labels().size()), ErrorCode::InvalidParameters,
          "parameter field does not match the reflection classes");
  CherednikParams<RationalFunctionField> p;
  p.hbar = hbar;
  for (int i = 0; i < field.nparams(); ++i) p.c.push_back(field.param(i));
  return p;
}

CherednikParams<FiniteField> specialize(const CherednikParams<RationalFunctionField>& params,
                                        const RationalFunctionField& field, std::uint64_t seed) {
  const auto values = draw_class_values(field.base(), field.nparams(), seed);
  CherednikParams<FiniteField> out;
  out.hbar = params.hbar;
  for (const auto& c : params.c) out.c.push_back(field.specialize(c, values));
  return out;
}

}  // namespace cherednik

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cherednik/field.hpp"
#include "cherednik/group.hpp"
#include "cherednik/ratfunc.hpp"

namespace cherednik {

enum class ParamMode { Specialized, Symbolic };

/// hbar in {0, 1} and one parameter per reflection class (indexed like GroupSpec::class_labels()).
template <class F>
struct CherednikParams {
  int hbar = 0;
  std::vector<typename F::Elem> c;
};

/// Human-readable parameter names per class: s -> c, s- -> c, s+ -> d, t<k> -> c<k>.
std::vector<std::string> parameter_names(const GroupSpec& group);

/// Nonzero values drawn deterministically from seed, one per reflection class.
std::vector<FiniteField::Elem> draw_class_values(const FiniteField& field, std::size_t count, std::uint64_t seed);

CherednikParams<FiniteField> specialized_params(const GroupSpec& group, const FiniteField& field, int hbar,
                                                std::uint64_t seed);

/// Parameters equal to the free variables of F_q(c, d, ...).
CherednikParams<RationalFunctionField> symbolic_params(const GroupSpec& group, const RationalFunctionField& field,
                                                       int hbar);

RationalFunctionField parameter_field(const GroupSpec& group, const FiniteField& base);

/// Specializes symbolic parameters with the values drawn from seed.
CherednikParams<FiniteField> specialize(const CherednikParams<RationalFunctionField>& params,
                                        const RationalFunctionField& field, std::uint64_t seed);

}  // namespace cherednik

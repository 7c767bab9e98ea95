#pragma once

#include "gradlab/coset_table.hpp"

namespace gradlab {

// Live-coset cap for enumerations: GRADLAB_MAX_COSETS when set (positive
// integer), otherwise 1'000'000.
long long default_max_cosets();

// HLT-style coset enumeration for the subgroup generated by
// `subgroup_generators` (the whole-group quotient when empty). Deterministic:
// cosets are numbered in first-definition order, coincidences keep the
// earlier coset. Throws ResourceExhausted when the enumeration would exceed
// max_cosets live cosets — infinite index surfaces as this error, never a
// hang.
CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_generators,
                        long long max_cosets);

inline CosetTable todd_coxeter(const Presentation& P,
                               const std::vector<Word>& subgroup_generators) {
    return todd_coxeter(P, subgroup_generators, default_max_cosets());
}

}  // namespace gradlab

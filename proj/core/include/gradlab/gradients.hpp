#pragma once

#include <string>
#include <vector>

#include "gradlab/chain.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/rational.hpp"

namespace gradlab {

enum class GradientKind {
    RgUpper,     // chain value bounding the pro-p rank gradient from above
    HrgSample,   // d(H1(U; Zhat)) / index for one finite-index subgroup
    NhrgSample,  // the same restricted to normal subgroups
};

const char* gradient_kind_name(GradientKind k);  // "rg_upper", "hrg_sample", ...

struct GradientEstimate {
    GradientKind kind = GradientKind::RgUpper;
    Rational value;
    std::string witness;      // which chain level or subgroup produced it
    bool upper_bound = false; // true when the value provably bounds the target
                              // from above; samples carry no direction
};

// [{"kind":"...","upper_bound":true,"value":"a/b","witness":"..."}]
std::string gradient_estimates_to_json(const std::vector<GradientEstimate>& es);

// Best upper bound for the rank gradient of the pro-p completion read off a
// chain: the deepest level's h1_dim/index (= corrected + 1/index). Deeper
// chains can only lower it.
GradientEstimate rg_estimate(const ChainReport& chain);

// One sample per low-index subgroup (conjugacy class representatives, or the
// normal ones only): d(H1(U; Zhat)) / |G:U| computed from the integral
// homology of the rewritten subgroup presentation. The minimum over a sample
// is a finite-level proxy for hrg/nhrg; no bound direction is claimed, the
// liminf over all subgroups not being computable.
std::vector<GradientEstimate> hrg_nhrg_samples(const Presentation& P, long long max_index,
                                               bool normal_only);

// Smallest sampled value; InputError on an empty sample list.
Rational min_sample_value(const std::vector<GradientEstimate>& es);

}  // namespace gradlab

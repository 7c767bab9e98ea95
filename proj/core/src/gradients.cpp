#include "gradlab/gradients.hpp"

#include <algorithm>

#include "json.hpp"

#include "gradlab/homology.hpp"
#include "gradlab/low_index.hpp"

namespace gradlab {

const char* gradient_kind_name(GradientKind k) {
    switch (k) {
        case GradientKind::RgUpper: return "rg_upper";
        case GradientKind::HrgSample: return "hrg_sample";
        case GradientKind::NhrgSample: return "nhrg_sample";
    }
    throw_internal("unknown gradient kind");
}

std::string gradient_estimates_to_json(const std::vector<GradientEstimate>& es) {
    nlohmann::json out = nlohmann::json::array();
    for (const GradientEstimate& e : es) {
        nlohmann::json item;
        item["kind"] = gradient_kind_name(e.kind);
        item["value"] = e.value.to_string();
        item["witness"] = e.witness;
        item["upper_bound"] = e.upper_bound;
        out.push_back(item);
    }
    return out.dump();
}

GradientEstimate rg_estimate(const ChainReport& chain) {
    chain.validate();
    if (chain.levels.empty()) throw_input("rg_estimate: empty chain");
    const ChainLevel& deepest = chain.levels.back();
    GradientEstimate e;
    e.kind = GradientKind::RgUpper;
    e.value = deepest.normalized;
    e.witness = "chain level " + std::to_string(chain.levels.size() - 1) + ", index " +
                std::to_string(deepest.index);
    e.upper_bound = true;
    return e;
}

std::vector<GradientEstimate> hrg_nhrg_samples(const Presentation& P, long long max_index,
                                               bool normal_only) {
    if (max_index < 1) throw_input("hrg_nhrg_samples: max_index must be positive");
    LowIndexOptions options;
    options.normal_only = normal_only;
    std::vector<CosetTable> tables = low_index_subgroups(P, max_index, options);

    std::vector<GradientEstimate> out;
    out.reserve(tables.size());
    for (size_t i = 0; i < tables.size(); ++i) {
        const CosetTable& T = tables[i];
        H1Report rep = h1_of_subgroup(T);
        GradientEstimate e;
        e.kind = normal_only ? GradientKind::NhrgSample : GradientKind::HrgSample;
        e.value = Rational(rep.d_hat(), T.index);
        e.witness = "index " + std::to_string(T.index) + " subgroup " + std::to_string(i + 1) +
                    " of " + std::to_string(tables.size());
        e.upper_bound = false;
        out.push_back(e);
    }
    return out;
}

Rational min_sample_value(const std::vector<GradientEstimate>& es) {
    if (es.empty()) throw_input("min_sample_value: no samples");
    Rational best = es.front().value;
    for (const GradientEstimate& e : es) best = std::min(best, e.value);
    return best;
}

}  // namespace gradlab

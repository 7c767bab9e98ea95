#include "gradlab/homology.hpp"

#include <nlohmann/json.hpp>

#include "gradlab/arith.hpp"
#include "gradlab/schreier.hpp"

namespace gradlab {

std::string h1_report_to_json(const H1Report& r) {
    nlohmann::json j;
    j["free_rank"] = r.invariants.free_rank;
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : r.invariants.torsion) {
        // Torsion orders are desk-scale; fall back to a decimal string should
        // one ever exceed 64 bits rather than lose precision.
        if (t <= Int(INT64_MAX))
            torsion.push_back(static_cast<long long>(t));
        else
            torsion.push_back(t.str());
    }
    j["torsion"] = torsion;
    nlohmann::json fp = nlohmann::json::object();
    for (const auto& [p, dim] : r.fp_dims) fp[std::to_string(p)] = dim;
    j["fp"] = fp;
    return j.dump();
}

IntMatrix relation_matrix(const Presentation& P) {
    IntMatrix m(P.relators.size(), P.generator_count());
    for (size_t i = 0; i < P.relators.size(); ++i)
        for (int g = 0; g < P.generator_count(); ++g)
            m.at(i, g) = exponent_sum(P.relators[i], g);
    return m;
}

AbelianInvariants h1_integral(const Presentation& P) {
    if (P.relators.empty()) {
        // Free group: no relations, so skip the (degenerate) SNF call and its
        // cols x cols transform matrix.
        AbelianInvariants a;
        a.free_rank = P.generator_count();
        return a;
    }
    return smith_normal_form(relation_matrix(P)).cokernel;
}

long long h1_mod_p(const Presentation& P, long long p) {
    require_prime(p, "h1_mod_p");
    return P.generator_count() -
           static_cast<long long>(fp_rank(fp_reduce(relation_matrix(P), p)));
}

H1Projection h1_projection(const Presentation& P, long long p) {
    require_prime(p, "h1_projection");
    FpRref r = fp_rref(fp_reduce(relation_matrix(P), p));
    int gens = P.generator_count();
    H1Projection proj;
    proj.p = p;
    proj.m = gens - static_cast<long long>(r.rank());
    proj.phi = FpMatrix(p, gens, proj.m);
    std::vector<long long> free_cols;
    {
        size_t next = 0;
        for (int c = 0; c < gens; ++c) {
            if (next < r.pivots.size() && r.pivots[next] == static_cast<size_t>(c))
                ++next;
            else
                free_cols.push_back(c);
        }
    }
    for (size_t t = 0; t < free_cols.size(); ++t) proj.phi.at(free_cols[t], t) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (size_t t = 0; t < free_cols.size(); ++t) {
            uint32_t e = r.mat.at(i, free_cols[t]);
            if (e != 0) proj.phi.at(r.pivots[i], t) = static_cast<uint32_t>(p - e);
        }
    return proj;
}

H1Report h1_of_subgroup(const CosetTable& T, const std::vector<long long>& fp_primes) {
    Presentation sub = simplify(subgroup_presentation(T));
    H1Report r;
    r.invariants = h1_integral(sub);
    for (long long p : fp_primes) r.fp_dims[p] = h1_mod_p(sub, p);
    return r;
}

}  // namespace gradlab

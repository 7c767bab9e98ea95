#include "doctest.h"
#include "gradlab/homology.hpp"
#include "gradlab/low_index.hpp"
#include "gradlab/todd_coxeter.hpp"

using namespace gradlab;

namespace {

Presentation pres(const std::string& text) { return parse_presentation(text); }

}  // namespace

TEST_CASE("h1_integral on pinned presentations") {
    AbelianInvariants f2 = h1_integral(free_group(2));
    CHECK(f2.free_rank == 2);
    CHECK(f2.torsion.empty());

    AbelianInvariants a2 = h1_integral(pres("gens: a b\nrel: aa\n"));
    CHECK(a2.free_rank == 1);
    CHECK(a2.torsion == std::vector<Int>{2});

    AbelianInvariants s2 = h1_integral(surface_group(2));
    CHECK(s2.free_rank == 4);
    CHECK(s2.torsion.empty());

    // Z_2 x Z_6 style: <a,b | a^2, b^6, [a,b]> abelianized.
    AbelianInvariants z26 = h1_integral(pres("gens: a b\nrel: aa\nrel: bbbbbb\nrel: [a,b]\n"));
    CHECK(z26.free_rank == 0);
    CHECK(z26.torsion == std::vector<Int>{2, 6});
}

TEST_CASE("h1_mod_p on pinned presentations") {
    CHECK(h1_mod_p(free_group(2), 2) == 2);
    CHECK(h1_mod_p(pres("gens: a b\nrel: aa\n"), 2) == 2);
    CHECK(h1_mod_p(pres("gens: a b\nrel: aa\n"), 3) == 1);
    CHECK(h1_mod_p(surface_group(2), 2) == 4);
    CHECK_THROWS_AS(h1_mod_p(free_group(2), 6), GradlabError);
}

TEST_CASE("h1_mod_p equals free rank plus p-torsion count of h1_integral") {
    std::vector<Presentation> corpus = {
        free_group(2),
        free_group(3),
        pres("gens: a b\nrel: aa\n"),
        pres("gens: a b\nrel: abababab\n"),
        surface_group(2),
        pres("gens: a b\nrel: aaaaaaaa\nrel: AAAAAAAA\n"),
        pres("gens: a b\nrel: aa\nrel: bbbbbb\nrel: [a,b]\n"),
        pres("gens: a b c\nrel: aabb\nrel: ccc\n"),
    };
    for (const Presentation& P : corpus) {
        AbelianInvariants inv = h1_integral(P);
        for (long long p : {2, 3, 5, 7, 11, 13}) {
            long long expect = inv.free_rank;
            for (const Int& t : inv.torsion)
                if (t % p == 0) ++expect;
            CHECK(h1_mod_p(P, p) == expect);
        }
    }
}

TEST_CASE("h1_projection: relators map to zero, coordinates hit a basis") {
    for (long long p : {2, 3}) {
        for (const Presentation& P :
             {pres("gens: a b\nrel: aa\n"), pres("gens: a b c\nrel: aabb\nrel: ccc\n"),
              pres("gens: a b\nrel: abababab\n")}) {
            H1Projection proj = h1_projection(P, p);
            CHECK(proj.m == h1_mod_p(P, p));
            CHECK(proj.phi.rows == static_cast<size_t>(P.generator_count()));
            CHECK(proj.phi.cols == static_cast<size_t>(proj.m));
            // Surjective: the projection has full rank m.
            CHECK(fp_rank(proj.phi) == static_cast<size_t>(proj.m));
            // Every relator's exponent vector maps to zero.
            FpMatrix rel = fp_reduce(relation_matrix(P), p);
            FpMatrix image = fp_mul(rel, proj.phi);
            for (uint32_t e : image.a) CHECK(e == 0);
        }
    }
}

TEST_CASE("h1_of_subgroup composes rewriting and homology") {
    Presentation f2 = free_group(2);
    // Index-2 subgroup of F2: free of rank 3 (Nielsen-Schreier).
    CosetTable T;
    T.presentation = f2;
    T.index = 2;
    T.tab = {0, 0, 1, 1, 1, 1, 0, 0};
    T.validate();
    H1Report r = h1_of_subgroup(T, {2, 3});
    CHECK(r.invariants.free_rank == 3);
    CHECK(r.invariants.torsion.empty());
    CHECK(r.d_hat() == 3);
    CHECK(r.fp_dims.at(2) == 3);
    CHECK(r.fp_dims.at(3) == 3);

    // Index-1 table: reduces to the group's own homology.
    Presentation a2 = pres("gens: a b\nrel: aa\n");
    H1Report whole = h1_of_subgroup(CosetTable::trivial(a2), {2, 3});
    CHECK(whole.invariants == h1_integral(a2));
    CHECK(whole.fp_dims.at(2) == h1_mod_p(a2, 2));
    CHECK(whole.fp_dims.at(3) == h1_mod_p(a2, 3));
}

TEST_CASE("Nielsen-Schreier equality across all low-index subgroups of F2") {
    Presentation f2 = free_group(2);
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    for (const CosetTable& T : low_index_subgroups(f2, 3, expand)) {
        H1Report r = h1_of_subgroup(T, {2, 3, 5});
        long long expect = T.index * (2 - 1) + 1;
        CHECK(r.invariants.free_rank == expect);
        CHECK(r.invariants.torsion.empty());
        CHECK(r.d_hat() == expect);
        CHECK(r.fp_dims.at(2) == expect);
        CHECK(r.fp_dims.at(3) == expect);
        CHECK(r.fp_dims.at(5) == expect);
    }
}

TEST_CASE("H1Report JSON shape") {
    H1Report r;
    r.invariants.free_rank = 1;
    r.invariants.torsion = {Int(2), Int(6)};
    r.fp_dims[2] = 3;
    r.fp_dims[3] = 2;
    CHECK(h1_report_to_json(r) ==
          "{\"fp\":{\"2\":3,\"3\":2},\"free_rank\":1,\"torsion\":[2,6]}");
}

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "gradlab/low_index.hpp"
#include "gradlab/todd_coxeter.hpp"

using namespace gradlab;

namespace {

Presentation pres(const std::string& text) { return parse_presentation(text); }

std::vector<Word> words(const Presentation& P, const std::vector<std::string>& ws) {
    std::vector<Word> out;
    for (const auto& s : ws) out.push_back(parse_word(s, P.generator_names));
    return out;
}

// Order of the permutation group generated by the given images, by closure
// under composition. Small degrees only; this is the independent oracle for
// quotient orders.
size_t closure_order(const std::vector<std::vector<long long>>& gens, long long degree) {
    std::vector<long long> id(degree);
    for (long long i = 0; i < degree; ++i) id[i] = i;
    std::set<std::vector<long long>> seen = {id};
    std::vector<std::vector<long long>> frontier = {id};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                std::vector<long long> fg(degree);
                for (long long i = 0; i < degree; ++i) fg[i] = g[f[i]];
                if (seen.insert(fg).second) next.push_back(fg);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

// Number of index-n subgroups of the free group F_d by Hall's recursion:
// t_n = (n!)^d - sum_{k<n} C(n-1, k-1) t_k ((n-k)!)^d,  N_n = t_n / (n-1)!.
long long hall_subgroup_count(int d, int n) {
    auto fact = [](long long m) {
        long long f = 1;
        for (long long i = 2; i <= m; ++i) f *= i;
        return f;
    };
    auto binom = [&](long long a, long long b) { return fact(a) / (fact(b) * fact(a - b)); };
    auto ipow = [](long long b, int e) {
        long long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    std::vector<long long> t(n + 1, 0);
    for (int m = 1; m <= n; ++m) {
        long long total = ipow(fact(m), d);
        for (int k = 1; k < m; ++k) total -= binom(m - 1, k - 1) * t[k] * ipow(fact(m - k), d);
        t[m] = total;
    }
    return t[n] / fact(n - 1);
}

std::map<long long, long long> count_by_index(const std::vector<CosetTable>& tables) {
    std::map<long long, long long> c;
    for (const auto& T : tables) ++c[T.index];
    return c;
}

}  // namespace

TEST_CASE("todd_coxeter on pinned examples") {
    // |A4| = 12 via its standard presentation, trivial subgroup column.
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    CosetTable T = todd_coxeter(a4, {}, 10000);
    CHECK(T.index == 12);

    Presentation free1 = pres("gens: a\n");
    CHECK(todd_coxeter(free1, words(free1, {"aaa"}), 10).index == 3);

    Presentation f2 = pres("gens: a b\n");
    CHECK(todd_coxeter(f2, words(f2, {"a", "b"}), 10).index == 1);
}

TEST_CASE("todd_coxeter coincidence handling collapses conflicting orders") {
    // gcd(5, 3) = 1: the group <a | a^5, a^3> is trivial.
    Presentation p = pres("gens: a\nrel: aaaaa\nrel: aaa\n");
    CHECK(todd_coxeter(p, {}, 100).index == 1);

    // Dihedral of order 6 and the order-8 quaternion presentation.
    Presentation d3 = pres("gens: a b\nrel: aa\nrel: bb\nrel: ababab\n");
    CHECK(todd_coxeter(d3, {}, 1000).index == 6);
    Presentation q8 = pres("gens: x y\nrel: xxxx\nrel: yyXX\nrel: Yxyx\n");
    CHECK(todd_coxeter(q8, {}, 1000).index == 8);

    // Z6 = Z2 x Z3 via commuting generators.
    Presentation z6 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: [a,b]\n");
    CHECK(todd_coxeter(z6, {}, 1000).index == 6);
}

TEST_CASE("todd_coxeter surfaces infinite index as a resource error") {
    Presentation f2 = pres("gens: a b\n");
    CHECK_THROWS_AS(todd_coxeter(f2, {}, 100), GradlabError);
    try {
        todd_coxeter(f2, {}, 100);
    } catch (const GradlabError& e) {
        CHECK(e.kind() == ErrorKind::ResourceExhausted);
    }
}

TEST_CASE("default_max_cosets reads the environment override") {
    unsetenv("GRADLAB_MAX_COSETS");
    CHECK(default_max_cosets() == 1'000'000);
    setenv("GRADLAB_MAX_COSETS", "1234", 1);
    CHECK(default_max_cosets() == 1234);
    setenv("GRADLAB_MAX_COSETS", "junk", 1);
    CHECK_THROWS_AS(default_max_cosets(), GradlabError);
    unsetenv("GRADLAB_MAX_COSETS");
}

TEST_CASE("permutation_rep is a homomorphism with the right degree") {
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    CosetTable T = todd_coxeter(a4, {}, 10000);
    PermAction A = permutation_rep(T);
    CHECK(A.degree == 12);
    REQUIRE(A.images.size() == 2);
    // The regular image of A4 has order 12 (closure oracle).
    CHECK(closure_order(A.images, A.degree) == 12);
    // Relators evaluate to the identity permutation.
    for (const Word& r : a4.relators)
        for (long long c = 0; c < T.index; ++c) CHECK(T.trace(c, r) == c);

    CosetTable one = CosetTable::trivial(a4);
    PermAction I = permutation_rep(one);
    CHECK(I.degree == 1);
    CHECK(I.images[0] == std::vector<long long>{0});
}

TEST_CASE("hand-built index-2 table of F2: valid, normal, correct action") {
    Presentation f2 = pres("gens: a b\n");
    CosetTable T;
    T.presentation = f2;
    T.index = 2;
    // a fixes both cosets, b swaps them.
    T.tab = {0, 0, 1, 1, 1, 1, 0, 0};
    T.validate();
    CHECK(is_normal(T));
    PermAction A = permutation_rep(T);
    CHECK(A.images[0] == std::vector<long long>{0, 1});
    CHECK(A.images[1] == std::vector<long long>{1, 0});
    CHECK(standardize(T, 1).tab == T.tab);  // conjugate equals itself
}

TEST_CASE("low_index counts for F2 match Hall's recursion") {
    CHECK(hall_subgroup_count(2, 2) == 3);
    CHECK(hall_subgroup_count(2, 3) == 13);
    CHECK(hall_subgroup_count(2, 4) == 71);

    Presentation f2 = pres("gens: a b\n");
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    std::vector<CosetTable> all = low_index_subgroups(f2, 4, expand);
    auto counts = count_by_index(all);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == hall_subgroup_count(2, 2));
    CHECK(counts[3] == hall_subgroup_count(2, 3));
    CHECK(counts[4] == hall_subgroup_count(2, 4));

    // Duplicate-free under the table encoding and sorted.
    std::set<std::pair<long long, std::vector<long long>>> keys;
    for (const auto& T : all) keys.insert({T.index, T.tab});
    CHECK(keys.size() == all.size());
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(std::pair(all[i].index, all[i].tab) < std::pair(all[i + 1].index, all[i + 1].tab));
    }
}

TEST_CASE("low_index at index 3 matches the brute-force transitive-pair oracle") {
    // All pairs of degree-3 permutations generating a transitive action,
    // counted directly; each subgroup corresponds to (3-1)! = 2 of them.
    std::vector<std::vector<long long>> s3;
    std::vector<long long> perm = {0, 1, 2};
    do {
        s3.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    long long transitive = 0;
    for (const auto& pa : s3)
        for (const auto& pb : s3) {
            std::vector<char> seen(3, 0);
            std::vector<long long> stack = {0};
            seen[0] = 1;
            long long reached = 1;
            while (!stack.empty()) {
                long long c = stack.back();
                stack.pop_back();
                for (const auto* g : {&pa, &pb})
                    for (long long i = 0; i < 3; ++i) {
                        // follow g and g^-1 edges
                        long long fwd = (*g)[c];
                        long long bwd = ((*g)[i] == c) ? i : -1;
                        for (long long d : {fwd, bwd})
                            if (d >= 0 && !seen[d]) {
                                seen[d] = 1;
                                ++reached;
                                stack.push_back(d);
                            }
                    }
            }
            if (reached == 3) ++transitive;
        }
    CHECK(transitive == 26);

    Presentation f2 = pres("gens: a b\n");
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    auto counts = count_by_index(low_index_subgroups(f2, 3, expand));
    CHECK(counts[3] == transitive / 2);
}

TEST_CASE("low_index normal subgroups of F2 at index 3") {
    // Kernels of surjections F2 -> Z/3: nonzero image pairs up to the scalar
    // action of the two units, 8 / 2 = 4 kernels.
    std::set<std::set<std::pair<int, int>>> kernels;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == 0 && y == 0) continue;
            std::set<std::pair<int, int>> k = {{x, y}, {(2 * x) % 3, (2 * y) % 3}};
            kernels.insert(k);
        }
    CHECK(kernels.size() == 4);

    Presentation f2 = pres("gens: a b\n");
    LowIndexOptions normal;
    normal.normal_only = true;
    auto counts = count_by_index(low_index_subgroups(f2, 3, normal));
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 3);  // index 2 is always normal
    CHECK(counts[3] == 4);

    // Cross-check: among all 13 index-3 subgroups exactly 4 are normal.
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    long long normal_count = 0;
    for (const auto& T : low_index_subgroups(f2, 3, expand))
        if (T.index == 3 && is_normal(T)) ++normal_count;
    CHECK(normal_count == 4);
}

TEST_CASE("low_index conjugacy classes: representatives vs expansion") {
    Presentation f2 = pres("gens: a b\n");
    // Classes at index 3: 4 normal (class size 1) + 3 classes of size 3.
    auto reps = low_index_subgroups(f2, 3);
    auto counts = count_by_index(reps);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 3);
    CHECK(counts[3] == 7);

    // Representatives are canonical: least standardized encoding in class.
    for (const auto& T : reps) {
        CHECK(standardize(T, 0).tab == T.tab);
        for (long long b = 0; b < T.index; ++b) CHECK(!(standardized_encoding(T, b) < T.tab));
    }

    // Expansion recovers class sizes 1 or 3 here, totalling 13.
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    CHECK(count_by_index(low_index_subgroups(f2, 3, expand))[3] == 13);
}

TEST_CASE("low_index respects relators: A4 subgroup structure") {
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    // A4: whole group, V4 at index 3, four conjugate C3 at index 4; nothing
    // at index 2.
    auto reps = low_index_subgroups(a4, 4);
    auto counts = count_by_index(reps);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 0);
    CHECK(counts[3] == 1);
    CHECK(counts[4] == 1);

    LowIndexOptions expand;
    expand.expand_conjugates = true;
    auto all = count_by_index(low_index_subgroups(a4, 4, expand));
    CHECK(all[3] == 1);  // V4 is normal
    CHECK(all[4] == 4);  // C3 has 4 conjugates

    LowIndexOptions normal;
    normal.normal_only = true;
    auto nrm = count_by_index(low_index_subgroups(a4, 4, normal));
    CHECK(nrm[3] == 1);
    CHECK(nrm[4] == 0);
}

TEST_CASE("is_normal distinguishes conjugate subgroups") {
    // <a> in S3 = <a,b | a^2, b^3, abab> has index 3 and is not normal.
    Presentation s3 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: abab\n");
    CosetTable T = todd_coxeter(s3, words(s3, {"a"}), 100);
    CHECK(T.index == 3);
    CHECK_FALSE(is_normal(T));

    // <b> in A4 has index 4 and is not normal.
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    CosetTable U = todd_coxeter(a4, words(a4, {"b"}), 100);
    CHECK(U.index == 4);
    CHECK_FALSE(is_normal(U));

    // Index 1 and 2 are always normal.
    Presentation f2 = pres("gens: a b\n");
    CHECK(is_normal(CosetTable::trivial(f2)));
    CosetTable V = todd_coxeter(f2, words(f2, {"a", "bb", "bab"}), 100);
    CHECK(V.index == 2);
    CHECK(is_normal(V));
}

TEST_CASE("abelian example: Klein four group subgroup lattice") {
    Presentation v4 = pres("gens: a b\nrel: aa\nrel: bb\nrel: [a,b]\n");
    auto reps = low_index_subgroups(v4, 4);
    auto counts = count_by_index(reps);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 3);
    CHECK(counts[4] == 1);
    for (const auto& T : reps) CHECK(is_normal(T));  // abelian: everything normal
}

TEST_CASE("low_index determinism across runs") {
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    LowIndexOptions expand;
    expand.expand_conjugates = true;
    auto r1 = low_index_subgroups(a4, 4, expand);
    auto r2 = low_index_subgroups(a4, 4, expand);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].tab == r2[i].tab);
}

TEST_CASE("low_index search budget raises a resource error") {
    Presentation f2 = pres("gens: a b\n");
    LowIndexOptions tight;
    tight.max_nodes = 5;
    CHECK_THROWS_AS(low_index_subgroups(f2, 4, tight), GradlabError);
}

TEST_CASE("table JSON round-trips and rejects malformed input") {
    Presentation a4 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: ababab\n");
    CosetTable T = todd_coxeter(a4, {}, 10000);
    std::string j = table_to_json(T);
    CHECK(j.find("\"index\":12") != std::string::npos);
    CosetTable back = table_from_json(j, a4);
    CHECK(back.index == T.index);
    CHECK(back.tab == T.tab);

    CHECK_THROWS_AS(table_from_json("{", a4), GradlabError);
    CHECK_THROWS_AS(table_from_json("{\"index\":2}", a4), GradlabError);
    // Column of the wrong length.
    CHECK_THROWS_AS(table_from_json("{\"index\":2,\"action\":{\"a\":[0],\"b\":[1,0]}}", a4),
                    GradlabError);
    // b-column is not a permutation.
    Presentation f2 = pres("gens: a b\n");
    CHECK_THROWS_AS(
        table_from_json("{\"index\":2,\"action\":{\"a\":[0,1],\"b\":[0,0]}}", f2),
        GradlabError);
    // Valid shape but incompatible with the relators.
    CHECK_THROWS_AS(
        table_from_json("{\"index\":2,\"action\":{\"a\":[1,0],\"b\":[1,0]}}", a4),
        GradlabError);
}

TEST_CASE("standardize produces the breadth-first pointed table") {
    Presentation s3 = pres("gens: a b\nrel: aa\nrel: bbb\nrel: abab\n");
    CosetTable T = todd_coxeter(s3, words(s3, {"a"}), 100);
    for (long long b = 0; b < T.index; ++b) {
        CosetTable S = standardize(T, b);
        S.validate();
        // Restandardizing from the new basepoint 0 is the identity.
        CHECK(standardize(S, 0).tab == S.tab);
    }
}

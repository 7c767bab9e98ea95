#include "doctest.h"
#include "gradlab/certificates.hpp"
#include "gradlab/chain.hpp"
#include "gradlab/gradients.hpp"
#include "gradlab/homology.hpp"
#include "gradlab/sylvester.hpp"

using namespace gradlab;

namespace {

Word w2(const std::string& s) { return parse_word(s, default_generator_names(2)); }

std::vector<long long> indices(const ChainReport& r) {
    std::vector<long long> out;
    for (const ChainLevel& l : r.levels) out.push_back(l.index);
    return out;
}

std::vector<long long> h1_dims(const ChainReport& r) {
    std::vector<long long> out;
    for (const ChainLevel& l : r.levels) out.push_back(l.h1_dim);
    return out;
}

}  // namespace

TEST_CASE("p_derived_chain of F2 at p = 2: the classic 1, 4, 128 descent") {
    ChainResult res = p_derived_chain_with_tables(free_group(2), 2, 2, 1'000'000);
    const ChainReport& r = res.report;
    CHECK_FALSE(r.truncated);
    CHECK(indices(r) == std::vector<long long>{1, 4, 128});
    CHECK(h1_dims(r) == std::vector<long long>{2, 5, 129});
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels[0].normalized == Rational(2));
    CHECK(r.levels[1].normalized == Rational(5, 4));
    CHECK(r.levels[2].normalized == Rational(129, 128));
    for (const ChainLevel& l : r.levels) CHECK(l.corrected == Rational(1));

    REQUIRE(res.tables.size() == 3);
    for (size_t i = 0; i < res.tables.size(); ++i)
        CHECK(res.tables[i].index == r.levels[i].index);

    // Free groups at every level: normalized value is exactly (d-1) + 1/index.
    for (const ChainLevel& l : r.levels)
        CHECK(l.normalized == Rational(1) + Rational(1, l.index));
}

TEST_CASE("p_derived_chain handles small pinned corpus members") {
    ChainReport a2 = p_derived_chain(parse_presentation("gens: a b\nrel: aa\n"), 2, 1, 1'000'000);
    REQUIRE(a2.levels.size() == 2);
    CHECK(a2.levels[1].index == 4);
    CHECK(a2.levels[1].normalized == Rational(3, 4));  // free of rank 3

    // The trivial group: the chain stops immediately with h1 = 0.
    ChainReport tr = p_derived_chain(parse_presentation("gens: a\nrel: a\n"), 2, 5, 1000);
    CHECK_FALSE(tr.truncated);
    REQUIRE(tr.levels.size() == 1);
    CHECK(tr.levels[0].index == 1);
    CHECK(tr.levels[0].h1_dim == 0);
    CHECK(tr.levels[0].normalized == Rational(0));

    ChainReport depth0 = p_derived_chain(free_group(2), 2, 0, 1000);
    CHECK(depth0.levels.size() == 1);
    CHECK_FALSE(depth0.truncated);

    ChainReport f2p3 = p_derived_chain(free_group(2), 3, 1, 1'000'000);
    CHECK(indices(f2p3) == std::vector<long long>{1, 9});
    CHECK(h1_dims(f2p3) == std::vector<long long>{2, 10});
}

TEST_CASE("p_derived_chain truncates at the cap instead of failing") {
    ChainReport capped = p_derived_chain(free_group(2), 2, 2, 100);
    CHECK(capped.truncated);
    CHECK_FALSE(capped.truncation_note.empty());
    CHECK(indices(capped) == std::vector<long long>{1, 4});

    // F3 at p = 2 would need index 8 * 2^17 > 10^6 at level 2.
    ChainReport f3 = p_derived_chain(free_group(3), 2, 2, 1'000'000);
    CHECK(f3.truncated);
    CHECK(indices(f3) == std::vector<long long>{1, 8});
    CHECK(h1_dims(f3) == std::vector<long long>{3, 17});
}

TEST_CASE("p_derived_chain on the genus-2 surface group") {
    ChainReport r = p_derived_chain(surface_group(2), 2, 1, 1'000'000);
    CHECK(indices(r) == std::vector<long long>{1, 16});
    CHECK(h1_dims(r) == std::vector<long long>{4, 34});
    // 34/16 = 2 + 2/16: genus-17 subgroup, consistent with rank gradient 2.
    CHECK(r.levels[1].normalized == Rational(2) + Rational(2, 16));
    CHECK(r.levels[1].corrected <= r.levels[0].corrected);
}

TEST_CASE("chain report JSON is pinned and deterministic") {
    ChainReport tr = p_derived_chain(parse_presentation("gens: a\nrel: a\n"), 2, 3, 1000);
    CHECK(chain_report_to_json(tr) ==
          "{\"levels\":[{\"corrected\":\"-1/1\",\"h1\":0,\"index\":1,"
          "\"normalized\":\"0/1\"}],\"p\":2,\"truncated\":false,\"truncation_note\":\"\"}");

    ChainReport once = p_derived_chain(free_group(2), 2, 1, 1'000'000);
    ChainReport twice = p_derived_chain(free_group(2), 2, 1, 1'000'000);
    CHECK(chain_report_to_json(once) == chain_report_to_json(twice));
}

TEST_CASE("rg_estimate reads the deepest level and decreases with depth") {
    Rational prev(1000);
    for (long long depth = 0; depth <= 2; ++depth) {
        ChainReport r = p_derived_chain(free_group(2), 2, depth, 1'000'000);
        GradientEstimate e = rg_estimate(r);
        CHECK(e.kind == GradientKind::RgUpper);
        CHECK(e.upper_bound);
        CHECK(e.value <= prev);
        prev = e.value;
    }
    CHECK(prev == Rational(129, 128));

    GradientEstimate deepest =
        rg_estimate(p_derived_chain(free_group(2), 2, 2, 1'000'000));
    CHECK(deepest.witness == "chain level 2, index 128");

    GradientEstimate trivial =
        rg_estimate(p_derived_chain(parse_presentation("gens: a\nrel: a\n"), 2, 2, 1000));
    CHECK(trivial.value == Rational(0));

    ChainReport empty;
    try {
        rg_estimate(empty);
        FAIL_CHECK("expected InputError");
    } catch (const GradlabError& e) {
        CHECK(e.kind() == ErrorKind::InputError);
    }
}

TEST_CASE("hrg and nhrg samples over low-index subgroups") {
    // F2 up to index 3: 1 + 3 + 7 class representatives, minimum 4/3 from the
    // rank-4 free subgroups at index 3.
    std::vector<GradientEstimate> all = hrg_nhrg_samples(free_group(2), 3, false);
    CHECK(all.size() == 11);
    CHECK(min_sample_value(all) == Rational(4, 3));
    for (const GradientEstimate& e : all) {
        CHECK(e.kind == GradientKind::HrgSample);
        CHECK_FALSE(e.upper_bound);
        CHECK(e.value >= Rational(4, 3));
    }

    // Sample minima never increase as the index bound grows.
    CHECK(min_sample_value(hrg_nhrg_samples(free_group(2), 2, false)) == Rational(3, 2));

    // Normal subgroups of F2 up to index 2: the whole group plus three
    // index-2 kernels, all free of rank 3.
    std::vector<GradientEstimate> normals = hrg_nhrg_samples(free_group(2), 2, true);
    CHECK(normals.size() == 4);
    CHECK(min_sample_value(normals) == Rational(3, 2));
    CHECK(normals.front().kind == GradientKind::NhrgSample);

    // Z has exactly one subgroup per index, each with H1 = Z.
    std::vector<GradientEstimate> zline = hrg_nhrg_samples(free_group(1), 5, false);
    REQUIRE(zline.size() == 5);
    CHECK(min_sample_value(zline) == Rational(1, 5));
    for (long long n = 1; n <= 5; ++n)
        CHECK(zline[static_cast<size_t>(n - 1)].value == Rational(1, n));

    std::string json = gradient_estimates_to_json(zline);
    CHECK(json.find("\"kind\":\"hrg_sample\"") != std::string::npos);
    CHECK(json.find("\"value\":\"1/5\"") != std::string::npos);
}

TEST_CASE("prop21 certificates pass on the documented tuples") {
    CertificateReport c1 = prop21_certificate(2, w2("a"), 2, 1, 1);
    CHECK(c1.pass);
    CHECK(c1.threshold == Rational(1, 2));
    REQUIRE(c1.chain.levels.size() == 2);
    CHECK(c1.chain.levels[1].normalized == Rational(3, 4));
    CHECK(c1.level_pass == std::vector<bool>{true, true});

    CertificateReport c2 = prop21_certificate(2, w2("a"), 2, 0, 1);
    CHECK(c2.pass);
    CHECK(c2.threshold == Rational(0));

    CertificateReport c3 = prop21_certificate(2, w2("ab"), 2, 2, 1);
    CHECK(c3.pass);
    CHECK(c3.threshold == Rational(3, 4));
    REQUIRE(c3.chain.levels.size() == 2);
    CHECK(c3.chain.levels[1].index == 4);
    CHECK(c3.chain.levels[1].h1_dim == 5);

    // d = 1: threshold clamps to zero and the chain bottoms out.
    CertificateReport c4 = prop21_certificate(1, parse_word("a", {"a"}), 2, 1, 2);
    CHECK(c4.pass);
    CHECK(c4.threshold == Rational(0));

    try {
        prop21_certificate(2, Word{}, 2, 1, 1);
        FAIL_CHECK("expected InputError for the empty word");
    } catch (const GradlabError& e) {
        CHECK(e.kind() == ErrorKind::InputError);
    }
    try {
        prop21_certificate(1, w2("b"), 2, 1, 1);
        FAIL_CHECK("expected InputError for an out-of-range generator");
    } catch (const GradlabError& e) {
        CHECK(e.kind() == ErrorKind::InputError);
    }
}

TEST_CASE("sp certificates pass and record the enumeration") {
    CertificateReport s1 = sp_certificate(2, 2, {3, 3}, 1);
    CHECK(s1.pass);
    CHECK(s1.threshold == Rational(3, 4));
    CHECK(s1.basewords == std::vector<std::string>{"a", "A"});
    CHECK(s1.note == std::string(kWordEnumerationNote));
    CHECK(h1_dims(s1.chain) == std::vector<long long>{2, 5});
    CHECK(indices(s1.chain) == std::vector<long long>{1, 4});

    CertificateReport s2 = sp_certificate(2, 2, {}, 2);
    CHECK(s2.pass);
    CHECK(s2.threshold == Rational(1));
    CHECK(s2.basewords.empty());
    CHECK(indices(s2.chain) == std::vector<long long>{1, 4, 128});

    CertificateReport s3 = sp_certificate(3, 2, {4}, 1);
    CHECK(s3.pass);
    CHECK(s3.threshold == Rational(31, 16));
    REQUIRE(s3.chain.levels.size() == 2);
    CHECK(s3.chain.levels[1].index == 8);
}

TEST_CASE("certificate chain levels agree with the Fox dual route") {
    // Independent cross-check of the level h1 values: push the ambient Fox
    // Jacobian to each chain quotient and compare through
    //   augmentation_dim - 1 = (h1 - 1) / index.
    Presentation P = schlage_puchta_truncation(3, 2, {4});
    ChainResult res = p_derived_chain_with_tables(P, 2, 1, 1'000'000);
    for (size_t i = 0; i < res.tables.size(); ++i) {
        SylvesterValue aug = augmentation_dim(P, res.tables[i], 2);
        CHECK(aug.value - Rational(1) ==
              Rational(res.report.levels[i].h1_dim - 1, res.report.levels[i].index));
    }
}

TEST_CASE("certificate JSON matches the documented shape byte for byte") {
    CertificateReport c = prop21_certificate(2, w2("a"), 2, 0, 0);
    CHECK(certificate_to_json(c) ==
          "{\"kind\":\"prop21\",\"levels\":[{\"h1\":1,\"index\":1,"
          "\"normalized\":\"1/1\",\"pass\":true}],\"pass\":true,\"threshold\":\"0/1\"}");

    CertificateReport s = sp_certificate(2, 2, {3, 3}, 1);
    std::string json = certificate_to_json(s);
    CHECK(json.find("\"kind\":\"sp\"") != std::string::npos);
    CHECK(json.find("\"basewords\":[\"a\",\"A\"]") != std::string::npos);
    CHECK(json.find("\"threshold\":\"3/4\"") != std::string::npos);
    CHECK(json.find("\"pass\":true") != std::string::npos);
    CHECK(certificate_to_json(sp_certificate(2, 2, {3, 3}, 1)) == json);
}

TEST_CASE("truncated certificates still report the reached levels") {
    CertificateReport c = prop21_certificate(2, w2("a"), 2, 1, 3, 20);
    CHECK(c.chain.truncated);
    CHECK(c.pass);  // the reached levels all clear the threshold
    CHECK(indices(c.chain) == std::vector<long long>{1, 4});
    std::string json = certificate_to_json(c);
    CHECK(json.find("\"truncated\":true") != std::string::npos);
}

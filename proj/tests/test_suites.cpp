#include <set>
#include <string>

#include "doctest.h"
#include "gradlab/errors.hpp"
#include "gradlab/suites.hpp"

namespace {

using namespace gradlab;

bool has_case(const SuiteReport& r, const std::string& name) {
    for (const SuiteCase& c : r.cases)
        if (c.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("the chain corpus holds the six documented presentations") {
    const std::vector<CorpusEntry> corpus = chain_corpus();
    REQUIRE(corpus.size() == 6);
    std::set<std::string> names;
    for (const CorpusEntry& e : corpus) {
        names.insert(e.name);
        e.presentation.validate();
    }
    CHECK(names == std::set<std::string>{"F2", "F3", "a2", "ab4", "surface2", "sp2_33"});
    CHECK(corpus[0].presentation.generator_count() == 2);
    CHECK(corpus[0].presentation.relators.empty());
    CHECK(corpus[1].presentation.generator_count() == 3);
    CHECK(corpus[4].presentation.generator_count() == 4);  // genus-2 surface
    CHECK(corpus[5].presentation.relators.size() == 2);    // a^8, b^8
}

TEST_CASE("almostprime suite agrees with the oracle across the full grid") {
    const SuiteReport r = suite_almostprime();
    CHECK(r.suite == "almostprime");
    REQUIRE(r.cases.size() == 2);
    CHECK(r.all_pass());
    CHECK(r.cases[0].detail.find("1000000 pairs") != std::string::npos);
    CHECK(r.cases[0].detail.find("0 mismatches") != std::string::npos);
    CHECK(r.cases[1].detail.find("0 out of bound") != std::string::npos);
}

TEST_CASE("boundpower suite certifies 1/p^k on every ambient") {
    const SuiteReport r = suite_boundpower();
    CHECK(r.all_pass());
    CHECK(r.cases.size() == 18);  // {2,3} x k<=3 x three ambients
    CHECK(has_case(r, "Z8 p=2 k=3"));
    CHECK(has_case(r, "Z54 p=3 k=3"));
    CHECK(has_case(r, "Z27xZ2 p=3 k=3"));
    for (const SuiteCase& c : r.cases)
        CHECK(c.detail.find("value 1/") != std::string::npos);
}

TEST_CASE("prop21 and sp suites pass their documented tuples") {
    const SuiteReport prop = suite_prop21();
    CHECK(prop.all_pass());
    CHECK(prop.cases.size() == 4);
    CHECK(has_case(prop, "d=2 g=a p=2 k=1"));
    CHECK(has_case(prop, "d=3 g=a p=2 k=2"));

    const SuiteReport sp = suite_sp();
    CHECK(sp.all_pass());
    CHECK(sp.cases.size() == 3);
    CHECK(has_case(sp, "d=2 p=2 exponents=3,3"));
    CHECK(has_case(sp, "d=2 p=2 exponents=none"));
}

TEST_CASE("foxdual suite checks both routes on every corpus chain") {
    const SuiteReport r = suite_foxdual();
    CHECK(r.all_pass());
    CHECK(r.cases.size() == 12);  // six entries x two primes
    CHECK(has_case(r, "F2 p=2"));
    CHECK(has_case(r, "sp2_33 p=3"));

    const SuiteReport only = suite_foxdual("F2");
    CHECK(only.cases.size() == 2);
    CHECK(only.all_pass());
    // The F2 chain at p=2 reaches index 128 under the 128 cap.
    for (const SuiteCase& c : only.cases)
        if (c.name == "F2 p=2") CHECK(c.detail.find("1,4,128") != std::string::npos);
}

TEST_CASE("lemma32 suite covers the named groups and the chop pins") {
    const SuiteReport r = suite_lemma32();
    CHECK(r.all_pass());
    CHECK(r.cases.size() == 10);  // eight (Q, p) pairs plus two pins
    CHECK(has_case(r, "sym:3 p=2"));
    CHECK(has_case(r, "cyclic:12 p=3"));
    CHECK(has_case(r, "chop F2[sym:3] max degree"));
    CHECK(has_case(r, "chop F3[sym:3] max degree"));
}

TEST_CASE("lemma31 suite sweeps builtins and chain quotients") {
    const SuiteReport builtin = suite_lemma31("builtin");
    CHECK(builtin.all_pass());
    CHECK(builtin.cases.size() == 27);
    CHECK(has_case(builtin, "quaternion:32"));

    const SuiteReport chains = suite_lemma31("F2");
    CHECK(chains.all_pass());
    CHECK(has_case(chains, "F2 p=2 level 2"));
    for (const SuiteCase& c : chains.cases) CHECK(c.name.substr(0, 2) == "F2");
}

TEST_CASE("suite reports serialize with sorted keys and dispatch by name") {
    const SuiteReport r = suite_sp();
    const std::string json = suite_report_to_json(r);
    CHECK(json.find("\"suite\":\"sp\"") != std::string::npos);
    CHECK(json.find("\"all_pass\":true") != std::string::npos);
    CHECK(json.find("\"cases\":[") != std::string::npos);
    CHECK(json == suite_report_to_json(run_suite("sp")));

    CHECK(suite_names().size() == 7);
    CHECK_THROWS_AS(run_suite("nope"), GradlabError);
    try {
        run_suite("lemma32", "F2");  // lemma32 has no corpus selector
        FAIL("expected InputError");
    } catch (const GradlabError& e) {
        CHECK(e.kind() == ErrorKind::InputError);
    }
    CHECK_THROWS_AS(suite_lemma31("unknown-corpus"), GradlabError);
}

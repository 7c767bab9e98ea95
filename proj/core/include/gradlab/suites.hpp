#pragma once

#include <string>
#include <vector>

#include "gradlab/presentation.hpp"

namespace gradlab {

// The six presentations every chain-based suite and certificate runs over.
struct CorpusEntry {
    std::string name;
    Presentation presentation;
};

std::vector<CorpusEntry> chain_corpus();

// One named check inside a suite; `detail` carries the values that were
// compared so a failing case is diagnosable from the report alone.
struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;

    bool all_pass() const;
};

// {"all_pass":true,"cases":[{"detail":"...","name":"...","pass":true}],
//  "suite":"lemma31"}
std::string suite_report_to_json(const SuiteReport& r);

// Every suite is theorem-backed: a failing case on valid input means an
// implementation bug. `corpus` filters which part runs; the empty string
// means everything. Suites over the chain corpus accept an entry name;
// lemma31 additionally accepts "builtin" and "chains".
SuiteReport suite_lemma31(const std::string& corpus = "");
SuiteReport suite_lemma32(const std::string& corpus = "");
SuiteReport suite_prop21(const std::string& corpus = "");
SuiteReport suite_sp(const std::string& corpus = "");
SuiteReport suite_foxdual(const std::string& corpus = "");
SuiteReport suite_boundpower(const std::string& corpus = "");
SuiteReport suite_almostprime(const std::string& corpus = "");

const std::vector<std::string>& suite_names();

// Dispatch by name; unknown suite names are an InputError.
SuiteReport run_suite(const std::string& suite, const std::string& corpus = "");

}  // namespace gradlab

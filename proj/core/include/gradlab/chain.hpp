#pragma once

#include <string>
#include <vector>

#include "gradlab/coset_table.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/rational.hpp"

namespace gradlab {

// One level of a mod-p derived chain: the subgroup's index, its mod-p first
// homology dimension, and the two normalizations used by the gradient
// estimators.
struct ChainLevel {
    long long index = 1;
    long long h1_dim = 0;
    Rational normalized;  // h1_dim / index
    Rational corrected;   // (h1_dim - 1) / index
};

struct ChainReport {
    long long p = 2;
    std::vector<ChainLevel> levels;
    bool truncated = false;       // stopped early at the index cap
    std::string truncation_note;  // human-readable reason, empty unless truncated

    // Checks the structural invariants: indices strictly increase with p-power
    // ratios, the stated rationals match (index, h1_dim), and the corrected
    // sequence is non-increasing. The last one is a theorem for these chains,
    // so a violation is an InternalError.
    void validate() const;
};

// {"levels":[{"corrected":"a/b","h1":m,"index":n,"normalized":"a/b"}],
//  "p":2,"truncated":false,"truncation_note":""}
std::string chain_report_to_json(const ChainReport& r);

// Inverse of chain_report_to_json; the stored rationals must agree with the
// (index, h1) pairs and all structural invariants are re-validated.
ChainReport chain_report_from_json(const std::string& text);

struct ChainResult {
    ChainReport report;
    // One table per reported level; tables[i].index == report.levels[i].index.
    std::vector<CosetTable> tables;
};

// Iterates p_derived_step starting from the whole group: level i+1 is
// [L_i, L_i] L_i^p. Levels 0..depth are reported; the chain also stops when a
// level has h1_dim = 0 (the step would not move) or when the next index would
// exceed `cap` (reported as truncated, not an error).
ChainResult p_derived_chain_with_tables(const Presentation& P, long long p, long long depth,
                                        long long cap);

ChainReport p_derived_chain(const Presentation& P, long long p, long long depth, long long cap);

struct ChainContinuation {
    ChainReport report;  // all levels, resumed prefix included
    CosetTable last;     // table of the deepest level reached
};

// Extends a previously computed chain instead of recomputing it: `prefix`
// must hold levels 0..k of the chain of P and `last` must be the coset table
// of level k. Produces exactly what a fresh run to `depth` would, so cached
// prefixes can be resumed transparently. A truncated or stabilized prefix is
// returned unchanged.
ChainContinuation p_derived_chain_resume(const Presentation& P, long long p, long long depth,
                                         long long cap, const ChainReport& prefix,
                                         const CosetTable& last);

}  // namespace gradlab

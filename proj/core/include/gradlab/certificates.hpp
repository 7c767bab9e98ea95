#pragma once

#include <string>
#include <vector>

#include "gradlab/chain.hpp"
#include "gradlab/rational.hpp"
#include "gradlab/word.hpp"

namespace gradlab {

// Outcome of a theorem-shaped check: a derived chain, a rational threshold,
// and one comparison per level (the level's h1_dim/index must stay >= the
// threshold). These checks hold mathematically, so a failing certificate on
// valid input means an implementation bug, not new knowledge.
struct CertificateReport {
    std::string kind;  // "prop21" or "sp"
    ChainReport chain;
    Rational threshold;
    std::vector<bool> level_pass;  // one entry per chain level
    bool pass = false;             // conjunction of level_pass
    std::string note;              // word-enumeration note (sp certificates)
    std::vector<std::string> basewords;  // enumerated base words (sp certificates)
};

// {"kind":"...","levels":[{"h1":m,"index":n,"normalized":"a/b","pass":true}],
//  "pass":true,"threshold":"a/b"} plus "note"/"basewords" when present and
// "truncated":true when the chain stopped at the cap.
std::string certificate_to_json(const CertificateReport& r);

// One-relator quotient F_d / <<g^(p^k)>>: every chain-level upper bound for
// the rank gradient of its pro-p completion must be >= max(0, d-1 - 1/p^k).
// cap = 0 means the todd_coxeter default cap.
CertificateReport prop21_certificate(long long d, const Word& g, long long p, long long k,
                                     long long depth = 2, long long cap = 0);

// Truncated presentation F_d / <<f_1^(p^k1), ..., f_n^(p^kn)>> on the frozen
// word enumeration: every chain-level value must be >= d-1 - sum_i 1/p^(k_i).
CertificateReport sp_certificate(long long d, long long p,
                                 const std::vector<long long>& exponents, long long depth = 2,
                                 long long cap = 0);

}  // namespace gradlab

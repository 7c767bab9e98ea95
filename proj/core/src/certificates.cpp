#include "gradlab/certificates.hpp"

#include "json.hpp"

#include "gradlab/arith.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/todd_coxeter.hpp"

namespace gradlab {

namespace {

constexpr long long kPowLimit = 1LL << 62;

void finalize_pass(CertificateReport& rep) {
    rep.pass = true;
    for (const ChainLevel& l : rep.chain.levels) {
        const bool ok = l.normalized >= rep.threshold;
        rep.level_pass.push_back(ok);
        if (!ok) rep.pass = false;
    }
}

}  // namespace

std::string certificate_to_json(const CertificateReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (size_t i = 0; i < r.chain.levels.size(); ++i) {
        const ChainLevel& l = r.chain.levels[i];
        nlohmann::json level;
        level["index"] = l.index;
        level["h1"] = l.h1_dim;
        level["normalized"] = l.normalized.to_string();
        level["pass"] = static_cast<bool>(r.level_pass[i]);
        levels.push_back(level);
    }
    nlohmann::json out;
    out["kind"] = r.kind;
    out["levels"] = levels;
    out["threshold"] = r.threshold.to_string();
    out["pass"] = r.pass;
    if (!r.note.empty()) out["note"] = r.note;
    if (!r.basewords.empty()) out["basewords"] = r.basewords;
    if (r.chain.truncated) out["truncated"] = true;
    return out.dump();
}

CertificateReport prop21_certificate(long long d, const Word& g, long long p, long long k,
                                     long long depth, long long cap) {
    if (d < 1) throw_input("prop21_certificate: need at least one generator");
    if (g.empty()) throw_input("prop21_certificate: the word must be nontrivial");
    if (g.max_generator() >= d)
        throw_input("prop21_certificate: the word uses generators outside F_d");
    if (cap == 0) cap = default_max_cosets();

    Presentation quotient = adjoin_power_relator(free_group(static_cast<int>(d)), g, p, k);
    CertificateReport rep;
    rep.kind = "prop21";
    rep.threshold = Rational(d - 1) - Rational(1, checked_pow(p, k, kPowLimit));
    if (rep.threshold < Rational(0)) rep.threshold = Rational(0);
    rep.chain = p_derived_chain(quotient, p, depth, cap);
    finalize_pass(rep);
    return rep;
}

CertificateReport sp_certificate(long long d, long long p,
                                 const std::vector<long long>& exponents, long long depth,
                                 long long cap) {
    if (cap == 0) cap = default_max_cosets();
    Presentation P = schlage_puchta_truncation(static_cast<int>(d), p, exponents);

    CertificateReport rep;
    rep.kind = "sp";
    rep.threshold = Rational(d - 1);
    for (long long k : exponents)
        rep.threshold = rep.threshold - Rational(1, checked_pow(p, k, kPowLimit));
    rep.note = kWordEnumerationNote;
    const std::vector<Word> words = enumerate_reduced_words(static_cast<int>(d), exponents.size());
    const std::vector<std::string> names = default_generator_names(static_cast<int>(d));
    for (const Word& w : words) rep.basewords.push_back(print_word(w, names));
    rep.chain = p_derived_chain(P, p, depth, cap);
    finalize_pass(rep);
    return rep;
}

}  // namespace gradlab

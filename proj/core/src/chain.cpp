#include "gradlab/chain.hpp"

#include "json.hpp"

#include "gradlab/arith.hpp"
#include "gradlab/homology.hpp"
#include "gradlab/schreier.hpp"

namespace gradlab {

void ChainReport::validate() const {
    require_prime(p, "ChainReport");
    for (size_t i = 0; i < levels.size(); ++i) {
        const ChainLevel& l = levels[i];
        if (l.index < 1) throw_internal("chain level with non-positive index");
        if (l.h1_dim < 0) throw_internal("chain level with negative homology dimension");
        if (l.normalized != Rational(l.h1_dim, l.index))
            throw_internal("chain level normalized value out of sync");
        if (l.corrected != Rational(l.h1_dim - 1, l.index))
            throw_internal("chain level corrected value out of sync");
        if (i == 0) {
            if (l.index != 1) throw_internal("chain must start at the whole group");
            continue;
        }
        const ChainLevel& prev = levels[i - 1];
        if (l.index <= prev.index || l.index % prev.index != 0)
            throw_internal("chain indices must strictly increase by division");
        long long ratio = l.index / prev.index;
        while (ratio % p == 0) ratio /= p;
        if (ratio != 1) throw_internal("chain index ratio is not a p-power");
        if (l.corrected > prev.corrected)
            throw_internal("corrected chain sequence increased, which is impossible");
    }
}

std::string chain_report_to_json(const ChainReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const ChainLevel& l : r.levels) {
        nlohmann::json level;
        level["index"] = l.index;
        level["h1"] = l.h1_dim;
        level["normalized"] = l.normalized.to_string();
        level["corrected"] = l.corrected.to_string();
        levels.push_back(level);
    }
    nlohmann::json out;
    out["p"] = r.p;
    out["levels"] = levels;
    out["truncated"] = r.truncated;
    out["truncation_note"] = r.truncation_note;
    return out.dump();
}

ChainReport chain_report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("p") || !j.contains("levels") ||
        !j["levels"].is_array())
        throw_input("chain_report_from_json: malformed report");
    ChainReport r;
    r.p = j["p"].get<long long>();
    r.truncated = j.value("truncated", false);
    r.truncation_note = j.value("truncation_note", std::string());
    for (const nlohmann::json& level : j["levels"]) {
        if (!level.is_object() || !level.contains("index") || !level.contains("h1"))
            throw_input("chain_report_from_json: malformed level");
        ChainLevel l;
        l.index = level["index"].get<long long>();
        l.h1_dim = level["h1"].get<long long>();
        l.normalized = Rational(l.h1_dim, l.index);
        l.corrected = Rational(l.h1_dim - 1, l.index);
        if (Rational::parse(level.value("normalized", l.normalized.to_string())) != l.normalized ||
            Rational::parse(level.value("corrected", l.corrected.to_string())) != l.corrected)
            throw_input("chain_report_from_json: stored rationals disagree with index and h1");
        r.levels.push_back(l);
    }
    try {
        r.validate();
    } catch (const GradlabError& e) {
        throw_input(std::string("chain_report_from_json: ") + e.what());
    }
    return r;
}

namespace {

long long level_h1_dim(const Presentation& P, const CosetTable& T, long long p, bool whole) {
    if (whole) return h1_mod_p(P, p);
    return h1_mod_p(simplify(subgroup_presentation(T)), p);
}

}  // namespace

ChainResult p_derived_chain_with_tables(const Presentation& P, long long p, long long depth,
                                        long long cap) {
    require_prime(p, "p_derived_chain");
    if (depth < 0) throw_input("p_derived_chain: depth must be non-negative");
    if (cap < 1) throw_input("p_derived_chain: index cap must be positive");
    P.validate();

    ChainResult out;
    out.report.p = p;
    CosetTable current = CosetTable::trivial(P);
    for (long long level = 0;; ++level) {
        const long long h1 = level_h1_dim(P, current, p, level == 0);
        ChainLevel record;
        record.index = current.index;
        record.h1_dim = h1;
        record.normalized = Rational(h1, current.index);
        record.corrected = Rational(h1 - 1, current.index);
        out.report.levels.push_back(record);
        out.tables.push_back(current);

        if (level == depth) break;
        if (h1 == 0) break;  // the derived step would return the same subgroup
        try {
            current = p_derived_step(current, p, cap);
        } catch (const GradlabError& e) {
            if (e.kind() != ErrorKind::ResourceExhausted) throw;
            out.report.truncated = true;
            out.report.truncation_note = e.what();
            break;
        }
    }
    out.report.validate();
    return out;
}

ChainReport p_derived_chain(const Presentation& P, long long p, long long depth, long long cap) {
    return p_derived_chain_with_tables(P, p, depth, cap).report;
}

ChainContinuation p_derived_chain_resume(const Presentation& P, long long p, long long depth,
                                         long long cap, const ChainReport& prefix,
                                         const CosetTable& last) {
    require_prime(p, "p_derived_chain_resume");
    if (depth < 0) throw_input("p_derived_chain_resume: depth must be non-negative");
    if (cap < 1) throw_input("p_derived_chain_resume: index cap must be positive");
    P.validate();
    if (prefix.p != p) throw_precondition("p_derived_chain_resume: prefix uses a different prime");
    if (prefix.levels.empty()) throw_precondition("p_derived_chain_resume: prefix has no levels");
    prefix.validate();
    if (last.index != prefix.levels.back().index)
        throw_precondition("p_derived_chain_resume: table does not match the last prefix level");
    if (static_cast<long long>(prefix.levels.size()) - 1 > depth)
        throw_precondition("p_derived_chain_resume: prefix is already deeper than the target");

    ChainContinuation out{prefix, last};
    if (out.report.truncated) return out;
    for (long long level = static_cast<long long>(out.report.levels.size()) - 1;
         level < depth;) {
        if (out.report.levels.back().h1_dim == 0) break;
        try {
            out.last = p_derived_step(out.last, p, cap);
        } catch (const GradlabError& e) {
            if (e.kind() != ErrorKind::ResourceExhausted) throw;
            out.report.truncated = true;
            out.report.truncation_note = e.what();
            break;
        }
        ++level;
        const long long h1 = level_h1_dim(P, out.last, p, false);
        ChainLevel record;
        record.index = out.last.index;
        record.h1_dim = h1;
        record.normalized = Rational(h1, out.last.index);
        record.corrected = Rational(h1 - 1, out.last.index);
        out.report.levels.push_back(record);
    }
    out.report.validate();
    return out;
}

}  // namespace gradlab

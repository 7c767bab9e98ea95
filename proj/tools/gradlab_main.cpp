// gradlab command-line driver: homology reports, mod-p derived chains,
// low-index subgroup tables, theorem check suites, certificates and finite
// group queries. Every command prints its result payload as JSON on stdout
// and can persist a full run manifest via --json; results are cached
// content-addressed under .gradlab-cache (see --cache-dir / --no-cache /
// GRADLAB_CACHE).

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gradlab/arith.hpp"
#include "gradlab/certificates.hpp"
#include "gradlab/chain.hpp"
#include "gradlab/errors.hpp"
#include "gradlab/finite_group.hpp"
#include "gradlab/homology.hpp"
#include "gradlab/low_index.hpp"
#include "gradlab/manifest.hpp"
#include "gradlab/meataxe.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/rational.hpp"
#include "gradlab/suites.hpp"
#include "gradlab/sylvester.hpp"
#include "gradlab/todd_coxeter.hpp"

namespace {

using namespace gradlab;

struct CommonOpts {
    std::string json_path;
    std::string cache_dir;
    bool no_cache = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--json", o.json_path, "write the full run manifest to this file");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "cache directory (default: $GRADLAB_CACHE or .gradlab-cache)");
    cmd->add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");
}

Presentation load_presentation(const std::string& path) {
    const auto text = read_text_file(path);
    if (!text) throw_input("cannot read presentation file '" + path + "'");
    return parse_presentation(*text);
}

// Canonical text of a presentation: parsing it back gives the same group
// word for word. Manifest input hashes are taken over this, so formatting
// differences in the input file do not change the hash.
std::string normalize_presentation(const Presentation& P) {
    std::string out = "gens:";
    for (const std::string& name : P.generator_names) out += " " + name;
    out += "\n";
    for (const Word& w : P.relators) out += "rel: " + print_word(w, P.generator_names) + "\n";
    return out;
}

void warn(const std::string& message) { std::cerr << "gradlab: warning: " << message << "\n"; }

// Shared epilogue: wrap the payload in a manifest, consult/populate the
// cache, honour --json, print the payload. Returns the payload so callers
// can derive an exit code from it.
std::string deliver(const std::string& command, const nlohmann::json& parameters,
                    const std::string& normalized_input, const CommonOpts& opts,
                    const std::function<std::string()>& compute) {
    const CacheStore cache = CacheStore::resolve(opts.cache_dir, opts.no_cache);
    const std::string params_text = parameters.dump();
    const std::string input_hash = fnv1a64_hex(normalized_input);
    const std::string key =
        cache_key(command + "@" + kArtifactVersion, params_text, input_hash);

    RunManifest manifest;
    bool have = false;
    if (const auto hit = cache.load(key)) {
        try {
            manifest = manifest_from_json(*hit);
            have = manifest.command == command && manifest.version == kArtifactVersion &&
                   manifest.input_hash == input_hash && manifest.parameters == params_text;
        } catch (const GradlabError&) {
            have = false;  // corrupt entries are recomputed and overwritten
        }
    }
    if (!have) {
        manifest = make_manifest(command, params_text, normalized_input, compute());
        try {
            cache.store(key, manifest_to_json(manifest));
        } catch (const GradlabError& e) {
            warn(std::string("cache write failed: ") + e.what());
        }
    }
    if (!opts.json_path.empty())
        write_text_atomic(opts.json_path, manifest_to_json(manifest) + "\n");
    std::cout << manifest.payload << "\n";
    return manifest.payload;
}

// ---------------------------------------------------------------------------
// h1

int run_h1(const std::string& pres_path, long long p, bool integral, const CommonOpts& opts) {
    const Presentation P = load_presentation(pres_path);
    H1Report report;
    report.invariants = h1_integral(P);
    nlohmann::json params;
    if (integral) {
        params["mode"] = "integral";
    } else {
        require_prime(p, "h1 --p");
        report.fp_dims[p] = h1_mod_p(P, p);
        params["mode"] = "mod-p";
        params["p"] = p;
    }
    deliver("h1", params, normalize_presentation(P), opts,
            [&] { return h1_report_to_json(report); });
    return 0;
}

// ---------------------------------------------------------------------------
// chain, with resume from cached prefixes

int run_chain(const std::string& pres_path, long long p, long long depth, long long cap,
              const CommonOpts& opts) {
    const Presentation P = load_presentation(pres_path);
    require_prime(p, "chain --p");
    if (depth < 0) throw_input("chain: --depth must be non-negative");
    if (cap == 0) cap = default_max_cosets();

    const std::string normalized = normalize_presentation(P);
    const std::string input_hash = fnv1a64_hex(normalized);
    const CacheStore cache = CacheStore::resolve(opts.cache_dir, opts.no_cache);

    // Resume state: deepest chain known for (presentation, p, cap), depth
    // deliberately excluded from the key.
    nlohmann::json state_params;
    state_params["cap"] = cap;
    state_params["p"] = p;
    const std::string state_key = cache_key(std::string("chain-state@") + kArtifactVersion,
                                            state_params.dump(), input_hash);

    ChainReport cached;
    CosetTable cached_table;
    bool have_state = false;
    bool have_table = false;
    if (const auto hit = cache.load(state_key)) {
        try {
            const nlohmann::json record = nlohmann::json::parse(*hit);
            cached = chain_report_from_json(record.at("report").dump());
            if (record.contains("table") && !record["table"].is_null()) {
                cached_table = table_from_json(record["table"].dump(), P);
                have_table = cached_table.index == cached.levels.back().index;
            }
            have_state = true;
        } catch (const std::exception&) {
            have_state = false;  // unusable state is simply recomputed
            have_table = false;
        }
    }

    ChainReport report;
    CosetTable last;
    bool have_last = false;
    const long long cached_depth =
        have_state ? static_cast<long long>(cached.levels.size()) - 1 : -1;

    if (have_state && cached_depth >= depth) {
        // The cache is at least as deep: slice. A fresh run to this depth
        // stops at level == depth before attempting a step, so the sliced
        // report is never truncated.
        report = cached;
        report.levels.resize(static_cast<size_t>(depth) + 1);
        report.truncated = false;
        report.truncation_note.clear();
    } else if (have_state && (cached.truncated || cached.levels.back().h1_dim == 0)) {
        // Deeper levels are unreachable: truncated at the cap, or stabilized.
        report = cached;
    } else if (have_state && have_table) {
        const ChainContinuation cont =
            p_derived_chain_resume(P, p, depth, cap, cached, cached_table);
        report = cont.report;
        last = cont.last;
        have_last = true;
    } else {
        const ChainResult res = p_derived_chain_with_tables(P, p, depth, cap);
        report = res.report;
        last = res.tables.back();
        have_last = true;
    }

    const long long reached = static_cast<long long>(report.levels.size()) - 1;
    if (have_last && (!have_state || reached > cached_depth)) {
        nlohmann::json record;
        record["report"] = nlohmann::json::parse(chain_report_to_json(report));
        if (last.index <= 10000)
            record["table"] = nlohmann::json::parse(table_to_json(last));
        else
            record["table"] = nullptr;
        try {
            cache.store(state_key, record.dump());
        } catch (const GradlabError& e) {
            warn(std::string("cache write failed: ") + e.what());
        }
    }

    nlohmann::json params;
    params["p"] = p;
    params["depth"] = depth;
    params["cap"] = cap;
    deliver("chain", params, normalized, opts, [&] { return chain_report_to_json(report); });
    return 0;
}

// ---------------------------------------------------------------------------
// lowindex

int run_lowindex(const std::string& pres_path, long long max_index, bool normal_only,
                 bool class_reps, const CommonOpts& opts) {
    const Presentation P = load_presentation(pres_path);
    LowIndexOptions lo;
    lo.normal_only = normal_only;
    lo.expand_conjugates = !class_reps;
    const std::vector<CosetTable> tables = low_index_subgroups(P, max_index, lo);

    nlohmann::json rows = nlohmann::json::array();
    for (const CosetTable& T : tables) {
        const H1Report h1 = h1_of_subgroup(T);
        nlohmann::json row;
        row["index"] = T.index;
        row["normal"] = is_normal(T);
        row["d_hat"] = h1.d_hat();
        row["normalized"] = Rational(h1.d_hat(), T.index).to_string();
        rows.push_back(row);
    }
    nlohmann::json payload;
    payload["max_index"] = max_index;
    payload["normal_only"] = normal_only;
    payload["class_reps_only"] = class_reps;
    payload["count"] = tables.size();
    payload["subgroups"] = rows;

    nlohmann::json params;
    params["max_index"] = max_index;
    params["normal_only"] = normal_only;
    params["class_reps_only"] = class_reps;
    deliver("lowindex", params, normalize_presentation(P), opts,
            [&] { return payload.dump(); });
    return 0;
}

// ---------------------------------------------------------------------------
// check

int run_check(const std::string& suite, const std::string& corpus, bool all,
              const CommonOpts& opts) {
    nlohmann::json params;
    std::string payload;
    bool pass = false;

    if (all) {
        params["all"] = true;
        const std::vector<std::string>& names = suite_names();
        std::vector<SuiteReport> reports(names.size());
        std::vector<std::exception_ptr> errors(names.size());
        std::atomic<size_t> cursor{0};
        const unsigned hw = std::thread::hardware_concurrency();
        const size_t workers = std::min<size_t>({names.size(), hw == 0 ? 1 : hw, 4});
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i = cursor.fetch_add(1); i < names.size();
                     i = cursor.fetch_add(1)) {
                    try {
                        reports[i] = run_suite(names[i]);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);

        nlohmann::json suites = nlohmann::json::array();
        pass = true;
        for (const SuiteReport& r : reports) {
            suites.push_back(nlohmann::json::parse(suite_report_to_json(r)));
            if (!r.all_pass()) pass = false;
        }
        nlohmann::json out;
        out["suites"] = suites;
        out["all_pass"] = pass;
        payload = out.dump();
    } else {
        if (suite.empty()) throw_input("check: pass --suite <name> or --all");
        params["suite"] = suite;
        if (!corpus.empty()) params["corpus"] = corpus;
        const SuiteReport report = run_suite(suite, corpus);
        pass = report.all_pass();
        payload = suite_report_to_json(report);
    }

    deliver("check", params, params.dump(), opts, [&] { return payload; });
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cert

int run_cert_prop21(long long d, const std::string& g, long long p, long long k,
                    long long depth, long long cap, const CommonOpts& opts) {
    const Word word = parse_word(g, default_generator_names(static_cast<int>(d)));
    const CertificateReport cert = prop21_certificate(d, word, p, k, depth, cap);
    nlohmann::json params;
    params["d"] = d;
    params["g"] = g;
    params["p"] = p;
    params["k"] = k;
    params["depth"] = depth;
    params["cap"] = cap;
    deliver("cert-prop21", params, params.dump(), opts,
            [&] { return certificate_to_json(cert); });
    return cert.pass ? 0 : 1;
}

int run_cert_sp(long long d, long long p, const std::vector<long long>& exponents,
                long long depth, long long cap, const CommonOpts& opts) {
    const CertificateReport cert = sp_certificate(d, p, exponents, depth, cap);
    nlohmann::json params;
    params["d"] = d;
    params["p"] = p;
    params["exponents"] = exponents;
    params["depth"] = depth;
    params["cap"] = cap;
    deliver("cert-sp", params, params.dump(), opts, [&] { return certificate_to_json(cert); });
    return cert.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// finite

int run_finite(const std::string& name, bool element_orders, bool lemma31, long long chop_p,
               const CommonOpts& opts) {
    const FiniteGroup G = builtin_group(name);

    nlohmann::json payload;
    payload["name"] = name;
    payload["order"] = G.order;
    payload["degree"] = G.degree;
    payload["exponent"] = exponent(G);
    payload["abelian_d"] = abelian_d(whole_group(G));
    payload["derived_order"] = derived_subgroup(whole_group(G)).order();

    if (element_orders) {
        std::map<std::string, long long> counts;
        for (long long i = 0; i < G.order; ++i) counts[std::to_string(G.element_order(i))]++;
        payload["element_orders"] = counts;
    }
    if (lemma31) {
        if (G.order > 512) throw_input("finite --lemma31: group order exceeds the 512 sweep cap");
        bool all = true;
        long long worst_d = 0;
        long long worst_bound = 0;
        for (long long g = 0; g < G.order; ++g) {
            const Lemma31Record rec = lemma31_check(G, g);
            if (!rec.pass) all = false;
            if (rec.d > worst_d) {
                worst_d = rec.d;
                worst_bound = rec.bound;
            }
        }
        nlohmann::json sweep;
        sweep["all_pass"] = all;
        sweep["max_d"] = worst_d;
        sweep["bound_at_max_d"] = worst_bound;
        payload["lemma31"] = sweep;
    }
    if (chop_p != 0) {
        const SimpleDegreeReport r = chop(regular_module(G, chop_p));
        payload["chop"] = nlohmann::json::parse(simple_degree_report_to_json(r));
        payload["chop"]["p"] = chop_p;
    }

    nlohmann::json params;
    params["name"] = name;
    params["element_orders"] = element_orders;
    params["lemma31"] = lemma31;
    if (chop_p != 0) params["chop_p"] = chop_p;
    deliver("finite", params, name, opts, [&] { return payload.dump(); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradlab: homology gradients for finitely presented groups"};
    app.require_subcommand(1);

    // h1
    auto* h1 = app.add_subcommand("h1", "first homology of a presented group");
    std::string h1_file;
    long long h1_p = 0;
    bool h1_integral = false;
    CommonOpts h1_opts;
    h1->add_option("presentation", h1_file, "presentation file")->required();
    auto* h1_popt = h1->add_option("--p", h1_p, "prime for mod-p homology");
    auto* h1_iopt = h1->add_flag("--integral", h1_integral, "integral invariant factors");
    h1_popt->excludes(h1_iopt);
    add_common(h1, h1_opts);

    // chain
    auto* chain = app.add_subcommand("chain", "mod-p derived chain of subgroups");
    std::string chain_file;
    long long chain_p = 2;
    long long chain_depth = 2;
    long long chain_cap = 0;
    CommonOpts chain_opts;
    chain->add_option("presentation", chain_file, "presentation file")->required();
    chain->add_option("--p", chain_p, "prime of the derived series")->required();
    chain->add_option("--depth", chain_depth, "number of descent steps")->required();
    chain->add_option("--max-cosets", chain_cap,
                      "index cap (default: $GRADLAB_MAX_COSETS or 1000000)");
    add_common(chain, chain_opts);

    // lowindex
    auto* lowindex = app.add_subcommand("lowindex", "subgroups of small index");
    std::string li_file;
    long long li_max = 0;
    bool li_normal = false;
    bool li_classes = false;
    CommonOpts li_opts;
    lowindex->add_option("presentation", li_file, "presentation file")->required();
    lowindex->add_option("--max-index", li_max, "largest index to enumerate")->required();
    lowindex->add_flag("--normal-only", li_normal, "keep only normal subgroups");
    lowindex->add_flag("--class-reps", li_classes,
                       "one representative per conjugacy class instead of all subgroups");
    add_common(lowindex, li_opts);

    // check
    auto* check = app.add_subcommand("check", "run a theorem-backed suite");
    std::string check_suite;
    std::string check_corpus;
    bool check_all = false;
    CommonOpts check_opts;
    auto* sopt = check->add_option("--suite", check_suite,
                                   "one of: lemma31, lemma32, prop21, sp, foxdual, "
                                   "boundpower, almostprime");
    check->add_option("--corpus", check_corpus, "restrict the suite to a named corpus");
    auto* aopt = check->add_flag("--all", check_all, "run every suite in a worker pool");
    aopt->excludes(sopt);
    add_common(check, check_opts);

    // cert
    auto* cert = app.add_subcommand("cert", "theorem certificates over derived chains");
    cert->require_subcommand(1);
    auto* prop21 = cert->add_subcommand("prop21", "one-relator power quotient bound");
    long long cp_d = 2;
    std::string cp_g = "a";
    long long cp_p = 2;
    long long cp_k = 1;
    long long cp_depth = 2;
    long long cp_cap = 0;
    CommonOpts cp_opts;
    prop21->add_option("--d", cp_d, "free rank of the ambient group")->required();
    prop21->add_option("--g", cp_g, "base word, e.g. a or ab")->required();
    prop21->add_option("--p", cp_p, "prime")->required();
    prop21->add_option("--k", cp_k, "power exponent: the relator is g^(p^k)")->required();
    prop21->add_option("--depth", cp_depth, "chain depth (default 2)");
    prop21->add_option("--max-cosets", cp_cap, "index cap (0: default)");
    add_common(prop21, cp_opts);

    auto* spcert = cert->add_subcommand("sp", "truncated presentation bound");
    long long sp_d = 2;
    long long sp_p = 2;
    std::vector<long long> sp_exponents;
    long long sp_depth = 2;
    long long sp_cap = 0;
    CommonOpts sp_opts;
    spcert->add_option("--d", sp_d, "free rank of the ambient group")->required();
    spcert->add_option("--p", sp_p, "prime")->required();
    spcert->add_option("--exponents", sp_exponents, "power exponents k_i, one per base word");
    spcert->add_option("--depth", sp_depth, "chain depth (default 2)");
    spcert->add_option("--max-cosets", sp_cap, "index cap (0: default)");
    add_common(spcert, sp_opts);

    // finite
    auto* finite = app.add_subcommand("finite", "queries on built-in finite groups");
    std::string fin_name;
    bool fin_orders = false;
    bool fin_lemma31 = false;
    long long fin_chop = 0;
    CommonOpts fin_opts;
    finite->add_option("group", fin_name, "builtin name, e.g. sym:4 or cyclic:12")->required();
    finite->add_flag("--element-orders", fin_orders, "include the element order counts");
    finite->add_flag("--lemma31", fin_lemma31, "sweep the centralizer-index bound (order <= 512)");
    finite->add_option("--chop", fin_chop, "composition factor degrees of F_p[G] for this p");
    add_common(finite, fin_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*h1) {
            if (!h1_integral && h1_popt->count() == 0)
                throw_input("h1: pass --p <prime> or --integral");
            return run_h1(h1_file, h1_p, h1_integral, h1_opts);
        }
        if (*chain) return run_chain(chain_file, chain_p, chain_depth, chain_cap, chain_opts);
        if (*lowindex) return run_lowindex(li_file, li_max, li_normal, li_classes, li_opts);
        if (*check) return run_check(check_suite, check_corpus, check_all, check_opts);
        if (*prop21)
            return run_cert_prop21(cp_d, cp_g, cp_p, cp_k, cp_depth, cp_cap, cp_opts);
        if (*spcert) return run_cert_sp(sp_d, sp_p, sp_exponents, sp_depth, sp_cap, sp_opts);
        if (*finite) return run_finite(fin_name, fin_orders, fin_lemma31, fin_chop, fin_opts);
        throw_internal("no subcommand dispatched");
    } catch (const GradlabError& e) {
        std::cerr << "gradlab: error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::InputError:
            case ErrorKind::PreconditionViolation:
                return 2;
            case ErrorKind::ResourceExhausted:
                return 3;
            case ErrorKind::InternalError:
                return 4;
        }
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "gradlab: unexpected error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

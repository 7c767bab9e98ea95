#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "gradlab/manifest.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Scratch directory per test case; everything the CLI touches lives here.
struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("gradlab-cli-" + std::to_string(static_cast<long long>(::getpid())) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
        unsetenv("GRADLAB_CACHE");
        unsetenv("GRADLAB_MAX_COSETS");
        unsetenv("GRADLAB_SEED");
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
    static int invocation = 0;
    const std::string out_path =
        (dir.path / ("out-" + std::to_string(invocation) + ".txt")).string();
    const std::string err_path =
        (dir.path / ("err-" + std::to_string(invocation) + ".txt")).string();
    ++invocation;
    const std::string cmd =
        std::string(GRADLAB_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = gradlab::read_text_file(out_path).value_or("");
    r.err = gradlab::read_text_file(err_path).value_or("");
    return r;
}

std::string cache_arg(const TempDir& dir) {
    return " --cache-dir " + (dir.path / "cache").string();
}

}  // namespace

TEST_CASE("h1 prints the documented reports") {
    TempDir dir;
    const std::string a2 = dir.file("a2.txt", "gens: a b\nrel: aa\n");
    const std::string f2 = dir.file("f2.txt", "gens: a b\n");

    CliResult integral = run_cli(dir, "h1 " + a2 + " --integral" + cache_arg(dir));
    CHECK(integral.code == 0);
    CHECK(integral.out == "{\"fp\":{},\"free_rank\":1,\"torsion\":[2]}\n");

    CliResult modp = run_cli(dir, "h1 " + f2 + " --p 2" + cache_arg(dir));
    CHECK(modp.code == 0);
    CHECK(modp.out == "{\"fp\":{\"2\":2},\"free_rank\":2,\"torsion\":[]}\n");

    CHECK(run_cli(dir, "h1 " + f2 + cache_arg(dir)).code == 2);            // no mode
    CHECK(run_cli(dir, "h1 " + f2 + " --p 2 --integral").code == 2);       // both modes
    CHECK(run_cli(dir, "h1 " + f2 + " --p 4" + cache_arg(dir)).code == 2); // not a prime
    CHECK(run_cli(dir, "h1 missing.txt --integral --no-cache").code == 2);
}

TEST_CASE("chain reports the calibration values and honours the env cap") {
    TempDir dir;
    const std::string f2 = dir.file("f2.txt", "gens: a b\n");

    CliResult r = run_cli(dir, "chain " + f2 + " --p 2 --depth 2" + cache_arg(dir));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"levels\":[{\"corrected\":\"1/1\",\"h1\":2,\"index\":1,\"normalized\":\"2/1\"},"
          "{\"corrected\":\"1/1\",\"h1\":5,\"index\":4,\"normalized\":\"5/4\"},"
          "{\"corrected\":\"1/1\",\"h1\":129,\"index\":128,\"normalized\":\"129/128\"}],"
          "\"p\":2,\"truncated\":false,\"truncation_note\":\"\"}\n");

    setenv("GRADLAB_MAX_COSETS", "2", 1);
    CliResult capped = run_cli(dir, "chain " + f2 + " --p 2 --depth 2 --no-cache");
    unsetenv("GRADLAB_MAX_COSETS");
    CHECK(capped.code == 0);
    CHECK(capped.out.find("\"truncated\":true") != std::string::npos);
    CHECK(capped.out.find("\"index\":4") == std::string::npos);
}

TEST_CASE("chain runs resume from cached prefixes and slice cached suffixes") {
    TempDir dir;
    const std::string f2 = dir.file("f2.txt", "gens: a b\n");
    const std::string cache = cache_arg(dir);

    CliResult fresh = run_cli(dir, "chain " + f2 + " --p 2 --depth 2 --no-cache");
    REQUIRE(fresh.code == 0);

    CliResult d1 = run_cli(dir, "chain " + f2 + " --p 2 --depth 1" + cache);
    REQUIRE(d1.code == 0);
    bool state_seen = false;
    for (const auto& e : fs::directory_iterator(dir.path / "cache"))
        if (e.path().filename().string().rfind("chain-state", 0) == 0) state_seen = true;
    CHECK(state_seen);

    // Deep run resumes from the cached level-1 table; result must be byte
    // identical to the uncached computation.
    CliResult d2 = run_cli(dir, "chain " + f2 + " --p 2 --depth 2" + cache);
    CHECK(d2.code == 0);
    CHECK(d2.out == fresh.out);

    // Shallow run slices the cached depth-2 state.
    CliResult d0 = run_cli(dir, "chain " + f2 + " --p 2 --depth 0" + cache);
    CHECK(d0.code == 0);
    CliResult d0_fresh = run_cli(dir, "chain " + f2 + " --p 2 --depth 0 --no-cache");
    CHECK(d0.out == d0_fresh.out);
}

TEST_CASE("manifests are written atomically and reruns are byte-identical") {
    TempDir dir;
    const std::string a2 = dir.file("a2.txt", "gens: a b\nrel: aa\n");
    const std::string m1 = (dir.path / "m1.json").string();
    const std::string m2 = (dir.path / "m2.json").string();

    CHECK(run_cli(dir, "h1 " + a2 + " --integral --json " + m1 + cache_arg(dir)).code == 0);
    CHECK(run_cli(dir, "h1 " + a2 + " --integral --json " + m2 + cache_arg(dir)).code == 0);
    const auto t1 = gradlab::read_text_file(m1);
    const auto t2 = gradlab::read_text_file(m2);
    REQUIRE(t1.has_value());
    CHECK(t1 == t2);  // cached rerun reproduces even the timestamp

    const gradlab::RunManifest m =
        gradlab::manifest_from_json(t1->substr(0, t1->size() - 1));  // trailing newline
    CHECK(m.command == "h1");
    CHECK(m.version == std::string(gradlab::kArtifactVersion));
    CHECK(m.payload == "{\"fp\":{},\"free_rank\":1,\"torsion\":[2]}");
    CHECK(m.payload_hash == gradlab::fnv1a64_hex(m.payload));

    // Same normalized presentation, different formatting: same input hash.
    const std::string a2b = dir.file("a2b.txt", "gens:   a   b\nrel:    aa\n");
    const std::string m3 = (dir.path / "m3.json").string();
    CHECK(run_cli(dir, "h1 " + a2b + " --integral --json " + m3 + cache_arg(dir)).code == 0);
    CHECK(gradlab::manifest_from_json(
              gradlab::read_text_file(m3)->substr(0, t1->size() - 1))
              .input_hash == m.input_hash);

    // Without the cache the payload still reproduces byte for byte.
    CliResult n1 = run_cli(dir, "h1 " + a2 + " --integral --no-cache");
    CliResult n2 = run_cli(dir, "h1 " + a2 + " --integral --no-cache");
    CHECK(n1.out == n2.out);
}

TEST_CASE("GRADLAB_CACHE selects the cache directory") {
    TempDir dir;
    const std::string f2 = dir.file("f2.txt", "gens: a b\n");
    const fs::path env_cache = dir.path / "env-cache";
    setenv("GRADLAB_CACHE", env_cache.string().c_str(), 1);
    CliResult r = run_cli(dir, "h1 " + f2 + " --p 2");
    unsetenv("GRADLAB_CACHE");
    CHECK(r.code == 0);
    CHECK(fs::exists(env_cache));
    int files = 0;
    for (const auto& e : fs::directory_iterator(env_cache)) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);
}

TEST_CASE("lowindex counts all subgroups of the free group") {
    TempDir dir;
    const std::string f2 = dir.file("f2.txt", "gens: a b\n");

    CliResult r = run_cli(dir, "lowindex " + f2 + " --max-index 3" + cache_arg(dir));
    REQUIRE(r.code == 0);
    const json payload = json::parse(r.out);
    CHECK(payload["count"] == 17);  // 1 + 3 + 13
    long long normal = 0;
    long long index3 = 0;
    for (const json& row : payload["subgroups"]) {
        if (row["index"] == 3) {
            ++index3;
            if (row["normal"] == true) ++normal;
            CHECK(row["d_hat"] == 4);  // Nielsen-Schreier: 1 + 3(2-1)
            CHECK(row["normalized"] == "4/3");
        }
    }
    CHECK(index3 == 13);
    CHECK(normal == 4);

    CliResult only_normal =
        run_cli(dir, "lowindex " + f2 + " --max-index 2 --normal-only" + cache_arg(dir));
    REQUIRE(only_normal.code == 0);
    CHECK(json::parse(only_normal.out)["count"] == 4);  // whole group + three of index 2
}

TEST_CASE("check maps suite outcomes onto exit codes") {
    TempDir dir;
    CliResult good = run_cli(dir, "check --suite boundpower" + cache_arg(dir));
    CHECK(good.code == 0);
    CHECK(json::parse(good.out)["all_pass"] == true);

    CHECK(run_cli(dir, "check --suite nope --no-cache").code == 2);
    CHECK(run_cli(dir, "check --suite lemma32 --corpus F2 --no-cache").code == 2);
    CHECK(run_cli(dir, "check --no-cache").code == 2);  // neither --suite nor --all
}

TEST_CASE("cert subcommands certify the documented tuples") {
    TempDir dir;
    CliResult prop = run_cli(
        dir, "cert prop21 --d 2 --g a --p 2 --k 1 --depth 1" + cache_arg(dir));
    CHECK(prop.code == 0);
    const json p = json::parse(prop.out);
    CHECK(p["pass"] == true);
    CHECK(p["threshold"] == "1/2");
    CHECK(p["levels"][1]["normalized"] == "3/4");

    CliResult sp =
        run_cli(dir, "cert sp --d 2 --p 2 --exponents 3 3 --depth 1" + cache_arg(dir));
    CHECK(sp.code == 0);
    const json s = json::parse(sp.out);
    CHECK(s["pass"] == true);
    CHECK(s["threshold"] == "3/4");
    CHECK(s["basewords"] == json::array({"a", "A"}));

    CHECK(run_cli(dir, "cert prop21 --d 2 --g z --p 2 --k 1 --no-cache").code == 2);
    CHECK(run_cli(dir, "cert --no-cache").code == 2);  // missing subcommand
}

TEST_CASE("finite reports group facts and maps error kinds to exit codes") {
    TempDir dir;
    CliResult r = run_cli(dir, "finite sym:3 --element-orders --chop 2" + cache_arg(dir));
    REQUIRE(r.code == 0);
    const json payload = json::parse(r.out);
    CHECK(payload["order"] == 6);
    CHECK(payload["exponent"] == 6);
    CHECK(payload["abelian_d"] == 1);
    CHECK(payload["derived_order"] == 3);
    CHECK(payload["element_orders"] == json({{"1", 1}, {"2", 3}, {"3", 2}}));
    CHECK(payload["chop"]["degrees"] == json({{"1", 2}, {"2", 2}}));
    CHECK(payload["chop"]["max_degree"] == 2);

    CliResult lemma = run_cli(dir, "finite quaternion:8 --lemma31" + cache_arg(dir));
    REQUIRE(lemma.code == 0);
    CHECK(json::parse(lemma.out)["lemma31"]["all_pass"] == true);

    CHECK(run_cli(dir, "finite nosuch:4 --no-cache").code == 2);
    CHECK(run_cli(dir, "finite sym:7 --lemma31 --no-cache").code == 2);   // sweep cap
    CHECK(run_cli(dir, "finite sym:6 --chop 2 --no-cache").code == 3);    // regular module cap
    CHECK(run_cli(dir, "nonsense --no-cache").code == 2);                 // unknown subcommand
}

TEST_CASE("check --all aggregates every suite through the worker pool") {
    TempDir dir;
    CliResult r = run_cli(dir, "check --all" + cache_arg(dir));
    CHECK(r.code == 0);
    const json payload = json::parse(r.out);
    CHECK(payload["all_pass"] == true);
    REQUIRE(payload["suites"].size() == 7);
    std::vector<std::string> seen;
    for (const json& s : payload["suites"]) seen.push_back(s["suite"].get<std::string>());
    CHECK(seen == std::vector<std::string>{"lemma31", "lemma32", "prop21", "sp", "foxdual",
                                           "boundpower", "almostprime"});
    for (const json& s : payload["suites"]) CHECK(s["all_pass"] == true);
}

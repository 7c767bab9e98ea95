#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gradlab {

inline constexpr const char* kArtifactVersion = "1.0.0";

// 64-bit FNV-1a content hash; the hex form is what manifests store.
std::uint64_t fnv1a64(const std::string& text);
std::string fnv1a64_hex(const std::string& text);

// Parses `text` as JSON and re-serializes it with sorted keys and no
// whitespace, so equal documents always have equal bytes.
std::string canonical_json(const std::string& text);

// Record of one command invocation: what ran, over which input, and what came
// out. The hashes cover the inputs and the payload but never the timestamp,
// so re-running a command with identical inputs reproduces them byte for
// byte.
struct RunManifest {
    std::string command;
    std::string parameters;    // canonical JSON object text
    std::string input_hash;    // fnv1a64_hex of the normalized input
    std::string version;       // artifact version, kArtifactVersion
    std::string timestamp;     // ISO-8601 UTC; excluded from all hashes
    std::string payload;       // canonical JSON text of the result
    std::string payload_hash;  // fnv1a64_hex(payload)

    void validate() const;
};

// Builds a manifest for the given run; `parameters_json` and `payload_json`
// are canonicalized, `normalized_input` is hashed as-is.
RunManifest make_manifest(const std::string& command, const std::string& parameters_json,
                          const std::string& normalized_input, const std::string& payload_json);

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

// Writes through a temporary file in the target directory followed by a
// rename, so concurrent readers never observe a half-written file.
void write_text_atomic(const std::string& path, const std::string& text);

std::optional<std::string> read_text_file(const std::string& path);

// File name for a cached record: a sanitized command prefix plus the content
// hash of command, parameters and input hash. The key deliberately ignores
// anything that does not change the result.
std::string cache_key(const std::string& command, const std::string& parameters_json,
                      const std::string& input_hash);

// Content-addressed store of JSON records in a flat directory. A
// default-constructed store is disabled: it loads nothing and drops writes.
class CacheStore {
  public:
    CacheStore() = default;
    explicit CacheStore(std::string directory) : directory_(std::move(directory)) {}

    // Resolution order: `disabled` wins, then an explicit directory, then the
    // GRADLAB_CACHE environment variable (empty value disables), then the
    // default ".gradlab-cache".
    static CacheStore resolve(const std::string& explicit_dir, bool disabled);

    bool enabled() const { return !directory_.empty(); }
    const std::string& directory() const { return directory_; }

    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& text) const;

  private:
    std::string directory_;
};

}  // namespace gradlab

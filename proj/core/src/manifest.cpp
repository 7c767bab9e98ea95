#include "gradlab/manifest.hpp"

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "gradlab/errors.hpp"

namespace gradlab {

namespace {

std::string iso_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_hex16(const std::string& s) {
    if (s.size() != 16) return false;
    for (char c : s)
        if (!(c >= '0' && c <= '9') && !(c >= 'a' && c <= 'f')) return false;
    return true;
}

std::string field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_string())
        throw_input(std::string("manifest: missing or non-string field '") + name + "'");
    return j[name].get<std::string>();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& text) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(text);
    std::string out(16, '0');
    for (size_t i = 16; i-- > 0; h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

std::string canonical_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_input("canonical_json: input is not valid JSON");
    return j.dump();
}

void RunManifest::validate() const {
    if (command.empty()) throw_input("manifest: command must not be empty");
    if (version.empty()) throw_input("manifest: version must not be empty");
    if (!is_hex16(input_hash)) throw_input("manifest: input_hash is not a 16-digit hex hash");
    if (!is_hex16(payload_hash)) throw_input("manifest: payload_hash is not a 16-digit hex hash");
    if (canonical_json(parameters) != parameters)
        throw_input("manifest: parameters are not canonical JSON");
    if (canonical_json(payload) != payload)
        throw_input("manifest: payload is not canonical JSON");
    if (fnv1a64_hex(payload) != payload_hash)
        throw_input("manifest: payload hash does not match the payload");
}

RunManifest make_manifest(const std::string& command, const std::string& parameters_json,
                          const std::string& normalized_input, const std::string& payload_json) {
    RunManifest m;
    m.command = command;
    m.parameters = canonical_json(parameters_json);
    m.input_hash = fnv1a64_hex(normalized_input);
    m.version = kArtifactVersion;
    m.timestamp = iso_utc_now();
    m.payload = canonical_json(payload_json);
    m.payload_hash = fnv1a64_hex(m.payload);
    m.validate();
    return m;
}

std::string manifest_to_json(const RunManifest& m) {
    nlohmann::json out;
    out["command"] = m.command;
    out["parameters"] = nlohmann::json::parse(m.parameters);
    out["input_hash"] = m.input_hash;
    out["version"] = m.version;
    out["timestamp"] = m.timestamp;
    out["payload"] = nlohmann::json::parse(m.payload);
    out["payload_hash"] = m.payload_hash;
    return out.dump();
}

RunManifest manifest_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw_input("manifest: malformed JSON record");
    if (!j.contains("parameters") || !j.contains("payload"))
        throw_input("manifest: missing parameters or payload");
    RunManifest m;
    m.command = field(j, "command");
    m.parameters = j["parameters"].dump();
    m.input_hash = field(j, "input_hash");
    m.version = field(j, "version");
    m.timestamp = field(j, "timestamp");
    m.payload = j["payload"].dump();
    m.payload_hash = field(j, "payload_hash");
    m.validate();
    return m;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    std::random_device rd;
    std::ostringstream tmp_name;
    tmp_name << path << ".tmp-" << std::hex << rd() << rd();
    const fs::path tmp(tmp_name.str());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_input("write_text_atomic: cannot open '" + tmp.string() + "' for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw_input("write_text_atomic: write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code cleanup;
        fs::remove(tmp, cleanup);
        throw_input("write_text_atomic: cannot rename into '" + path + "': " + ec.message());
    }
}

std::optional<std::string> read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cache_key(const std::string& command, const std::string& parameters_json,
                      const std::string& input_hash) {
    std::string prefix;
    for (char c : command)
        prefix += (std::isalnum(static_cast<unsigned char>(c)) != 0 ? c : '-');
    const std::string params = canonical_json(parameters_json);
    return prefix + "-" + fnv1a64_hex(command + "\n" + params + "\n" + input_hash) + ".json";
}

CacheStore CacheStore::resolve(const std::string& explicit_dir, bool disabled) {
    if (disabled) return CacheStore();
    if (!explicit_dir.empty()) return CacheStore(explicit_dir);
    if (const char* env = std::getenv("GRADLAB_CACHE")) return CacheStore(env);
    return CacheStore(".gradlab-cache");
}

std::optional<std::string> CacheStore::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    return read_text_file((std::filesystem::path(directory_) / key).string());
}

void CacheStore::store(const std::string& key, const std::string& text) const {
    if (!enabled()) return;
    write_text_atomic((std::filesystem::path(directory_) / key).string(), text);
}

}  // namespace gradlab

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "frobtor/cli.hpp"

namespace frobtor::cli {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned k = 0; k < len; ++k) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 15];
    }
    return out;
}

void write_atomically(const fs::path& path, std::string_view content) {
    fs::path tmp = path;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("FROBTOR_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "frobtor";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "frobtor";
    return fs::temp_directory_path() / "frobtor-cache";
}

namespace {

// Advisory lock on a sidecar file, held for the lifetime of the object.
class FileLock {
public:
    FileLock(const fs::path& path, int mode) {
        fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ >= 0 && ::flock(fd_, mode) != 0) {
            ::close(fd_);
            fd_ = -1;
        }
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;
    bool held() const noexcept { return fd_ >= 0; }

private:
    int fd_ = -1;
};

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

std::string Cache::key(std::string_view ring, std::string_view op, std::string_view params) {
    std::string material;
    material.append(ring).append("\n").append(op).append("\n").append(params);
    return sha256_hex(material);
}

std::optional<nlohmann::json> Cache::load(std::string_view ring, std::string_view op, std::string_view params) const {
    const auto k = key(ring, op, params);
    const fs::path entry = dir_ / (k + ".json");
    std::error_code ec;
    if (!fs::exists(entry, ec)) return std::nullopt;
    FileLock lock(dir_ / (k + ".lock"), LOCK_SH);
    if (!lock.held()) return std::nullopt;
    std::ifstream in(entry, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = nlohmann::json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (doc.value("format", "") != "frobtor-cache" || doc.value("version", -1) != kFormatVersion) return std::nullopt;
    if (doc.value("op", "") != op || doc.value("ring", "") != ring || doc.value("params", "") != params)
        return std::nullopt;
    if (!doc.contains("payload")) return std::nullopt;
    return doc["payload"];
}

void Cache::store(std::string_view ring, std::string_view op, std::string_view params,
                  const nlohmann::json& payload) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;
    const auto k = key(ring, op, params);
    FileLock lock(dir_ / (k + ".lock"), LOCK_EX);
    if (!lock.held()) return;
    nlohmann::json doc{{"format", "frobtor-cache"},
                       {"version", kFormatVersion},
                       {"tool_version", std::string(tool_version())},
                       {"op", std::string(op)},
                       {"ring", std::string(ring)},
                       {"params", std::string(params)},
                       {"payload", payload}};
    try {
        write_atomically(dir_ / (k + ".json"), doc.dump());
    } catch (const std::exception&) {
        // Write failures are ignored.
    }
}

}  // namespace frobtor::cli

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kcp/count_table.hpp"

namespace kcp {

// PKCACHE text format:
//   line 1: "PKCACHE 1 <k> <n_max>"
//   lines 2..n_max+2: p_k(0), p_k(1), ... in decimal, one per line.
// Every line newline-terminated, no padding. Writers emit exactly this, so
// identical tables produce byte-identical files.
std::string format_table(const CountTable& t);
CountTable parse_table(const std::string& text);

// Atomic write: create a temp file in the same directory, then rename.
void write_table_file(const CountTable& t, const std::filesystem::path& file);
CountTable read_table_file(const std::filesystem::path& file);

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& bytes);

struct CacheEntry {
    unsigned k = 0;
    std::size_t n_max = 0;
    std::string file;        // name within the cache directory
    std::uint64_t checksum = 0;
};

// Directory of PKCACHE files, one per k (file "p<k>.pkcache" holds the
// longest table built so far). Invalid files are ignored and reported via
// rejected(); they get overwritten by the next build for that k.
class CacheManifest {
public:
    explicit CacheManifest(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }
    const std::vector<CacheEntry>& entries() const { return entries_; }
    const std::vector<std::string>& rejected() const { return rejected_; }
    std::optional<CacheEntry> find(unsigned k) const;

    // Serves a table covering n_max: loads the cached file if long enough,
    // extends it if short, computes from scratch otherwise. The result is
    // written back whenever it is longer than what was stored.
    CountTable load_or_build(unsigned k, std::size_t n_max);

    void rescan();

private:
    std::filesystem::path dir_;
    std::vector<CacheEntry> entries_;
    std::vector<std::string> rejected_;
};

// $KCP_CACHE_DIR if set, else "kcp-cache" under the system temp directory.
std::filesystem::path default_cache_dir();

} // namespace kcp

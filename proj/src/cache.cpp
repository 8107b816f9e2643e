#include "kcp/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace kcp {

namespace {

std::string table_file_name(unsigned k)
{
    return "p" + std::to_string(k) + ".pkcache";
}

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

std::string format_table(const CountTable& t)
{
    std::string out = "PKCACHE 1 " + std::to_string(t.k()) + ' '
                    + std::to_string(t.n_max()) + '\n';
    for (const Int& v : t.values()) {
        out += v.get_str();
        out += '\n';
    }
    return out;
}

CountTable parse_table(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("PKCACHE: empty input");

    std::istringstream hdr(line);
    std::string magic;
    unsigned version = 0, k = 0;
    std::size_t n_max = 0;
    if (!(hdr >> magic >> version >> k >> n_max) || magic != "PKCACHE" || version != 1)
        throw std::invalid_argument("PKCACHE: bad header: " + line);
    std::string rest;
    if (hdr >> rest)
        throw std::invalid_argument("PKCACHE: trailing header fields: " + line);

    std::vector<Int> values;
    values.reserve(n_max + 1);
    while (std::getline(in, line)) {
        if (!all_digits(line))
            throw std::invalid_argument("PKCACHE: bad value line: " + line);
        values.emplace_back(line);
    }
    if (values.size() != n_max + 1)
        throw std::invalid_argument("PKCACHE: expected " + std::to_string(n_max + 1)
                                    + " values, got " + std::to_string(values.size()));
    return CountTable(k, std::move(values));
}

void write_table_file(const CountTable& t, const std::filesystem::path& file)
{
    std::string body = format_table(t);
    std::filesystem::path tmp = file;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
        if (!out)
            throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

CountTable read_table_file(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

std::uint64_t fnv1a64(const void* data, std::size_t len)
{
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& bytes)
{
    return fnv1a64(bytes.data(), bytes.size());
}

CacheManifest::CacheManifest(std::filesystem::path dir) : dir_(std::move(dir))
{
    rescan();
}

void CacheManifest::rescan()
{
    entries_.clear();
    rejected_.clear();
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec))
        return;
    for (const auto& de : std::filesystem::directory_iterator(dir_, ec)) {
        if (!de.is_regular_file())
            continue;
        if (de.path().extension() != ".pkcache")
            continue;
        try {
            std::ifstream in(de.path(), std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            std::string body = buf.str();
            CountTable t = parse_table(body);
            entries_.push_back({t.k(), t.n_max(), de.path().filename().string(),
                                fnv1a64(body)});
        } catch (const std::exception&) {
            rejected_.push_back(de.path().filename().string());
        }
    }
}

std::optional<CacheEntry> CacheManifest::find(unsigned k) const
{
    for (const CacheEntry& e : entries_)
        if (e.k == k)
            return e;
    return std::nullopt;
}

CountTable CacheManifest::load_or_build(unsigned k, std::size_t n_max)
{
    std::filesystem::create_directories(dir_);
    auto hit = find(k);
    if (hit) {
        CountTable cached = read_table_file(dir_ / hit->file);
        if (cached.n_max() >= n_max)
            return cached;
        CountTable grown = extended(cached, n_max);
        write_table_file(grown, dir_ / table_file_name(k));
        rescan();
        return grown;
    }
    CountTable fresh = partition_count_table(k, n_max);
    write_table_file(fresh, dir_ / table_file_name(k));
    rescan();
    return fresh;
}

std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("KCP_CACHE_DIR"))
        return std::filesystem::path(env);
    return std::filesystem::temp_directory_path() / "kcp-cache";
}

} // namespace kcp

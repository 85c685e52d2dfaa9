#ifndef INVAR_GBCACHE_HPP
#define INVAR_GBCACHE_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invar/format.hpp"
#include "invar/order.hpp"
#include "invar/util.hpp"

namespace invar {

// Disk cache for reduced Groebner bases, keyed by (ideal content, order).
// The full key text is stored inside each entry and compared byte-wise on
// load, so hash collisions and corrupted entries surface as errors.
struct GbCacheConfig {
    std::string dir;      // empty: disabled
    bool enabled = true;
};

inline GbCacheConfig& gb_cache_config()
{
    static GbCacheConfig cfg;
    return cfg;
}

namespace cachedetail {

template <class F>
std::string cache_key_text(const Ring<F>& ring, const std::vector<Polynomial<F>>& gens,
                           const MonomialOrder& order)
{
    std::vector<std::string> lines;
    lines.reserve(gens.size());
    for (const auto& g : gens)
        lines.push_back(print_polynomial(g));
    std::sort(lines.begin(), lines.end());
    std::string key = print_ring_decl(ring) + "\norder " + order.describe() + "\n";
    for (const auto& l : lines)
        key += l + "\n";
    return key;
}

} // namespace cachedetail

template <class F>
std::optional<std::vector<Polynomial<F>>> gb_cache_load(const RingPtr<F>& ring,
                                                        const std::vector<Polynomial<F>>& gens,
                                                        const MonomialOrder& order)
{
    const GbCacheConfig& cfg = gb_cache_config();
    if (!cfg.enabled || cfg.dir.empty())
        return std::nullopt;
    std::string key = cachedetail::cache_key_text(*ring, gens, order);
    std::filesystem::path path = std::filesystem::path(cfg.dir)
                               / (hex64(fnv1a(key)) + ".gb");
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::string line;
    require(static_cast<bool>(std::getline(in, line)) && line == "invar gb cache v1",
            "gb cache: corrupt entry ", path.string());
    require(static_cast<bool>(std::getline(in, line)) && line.rfind("key-bytes ", 0) == 0,
            "gb cache: corrupt entry ", path.string());
    size_t nbytes = std::stoull(line.substr(10));
    std::string stored(nbytes, '\0');
    in.read(stored.data(), static_cast<std::streamsize>(nbytes));
    require(static_cast<size_t>(in.gcount()) == nbytes, "gb cache: truncated entry ",
            path.string());
    require(stored == key, "gb cache: content hash collision or corruption in ", path.string());
    require(static_cast<bool>(std::getline(in, line)), "gb cache: truncated entry ", path.string());
    require(static_cast<bool>(std::getline(in, line)) && line.rfind("basis ", 0) == 0, "gb cache: corrupt entry ",
            path.string());
    size_t n = std::stoull(line.substr(6));
    std::vector<Polynomial<F>> basis;
    for (size_t i = 0; i < n; ++i) {
        require(static_cast<bool>(std::getline(in, line)), "gb cache: truncated entry ", path.string());
        basis.push_back(parse_polynomial(ring, line));
    }
    return basis;
}

template <class F>
void gb_cache_store(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                    const MonomialOrder& order, const std::vector<Polynomial<F>>& basis)
{
    const GbCacheConfig& cfg = gb_cache_config();
    if (!cfg.enabled || cfg.dir.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    std::string key = cachedetail::cache_key_text(*ring, gens, order);
    std::filesystem::path path = std::filesystem::path(cfg.dir)
                               / (hex64(fnv1a(key)) + ".gb");
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        return;
    out << "invar gb cache v1\n";
    out << "key-bytes " << key.size() << "\n" << key << "\n";
    out << "basis " << basis.size() << "\n";
    for (const auto& g : basis)
        out << print_polynomial(g) << "\n";
}

} // namespace invar

#endif

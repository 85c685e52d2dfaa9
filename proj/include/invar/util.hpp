#ifndef INVAR_UTIL_HPP
#define INVAR_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

namespace invar {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

template <typename... Args>
[[noreturn]] void fail(const Args&... args)
{
    std::ostringstream os;
    (os << ... << args);
    throw Error(os.str());
}

template <typename... Args>
void require(bool cond, const Args&... args)
{
    if (!cond)
        fail(args...);
}

// FNV-1a, used for cache keys and certificate section hashes.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull)
{
    const unsigned char* s = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= s[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ull)
{
    return fnv1a(s.data(), s.size(), h);
}

inline std::string hex64(uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string r(16, '0');
    for (int i = 15; i >= 0; --i) {
        r[i] = digits[v & 0xf];
        v >>= 4;
    }
    return r;
}

inline std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

inline std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Deterministic xorshift generator for the property-test suites.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed ? seed : 1) {}
    uint64_t next()
    {
        uint64_t x = state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state = x;
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

} // namespace invar

#endif

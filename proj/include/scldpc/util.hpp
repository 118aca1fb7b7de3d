#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace scldpc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stateless counter-based random stream. Streams keyed by (seed, stream) are
/// independent, so parallel workers never share generator state.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(seed ^ splitmix64(stream))) {}

    std::uint64_t next_u64() { return splitmix64(key_ + counter_++); }

    /// Uniform in (0, 1].
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are generated lazily.
    double next_gaussian();

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Worker count for parallel sections: SCLDPC_THREADS when set, otherwise the
/// hardware concurrency (at least 1). Results never depend on this value.
inline int default_thread_count() {
    if (const char* env = std::getenv("SCLDPC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// SHA-256 of a byte string, hex-encoded. Used for content digests in run
/// manifests and reproducibility checks.
std::string sha256_hex(const std::string& data);

}  // namespace scldpc

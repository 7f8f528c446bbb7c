#pragma once

// Counter-based pseudo-random generator. Output i is a pure hash of
// (key, i), so a generator can be split into independent streams with
// derive(); parallel sampling with per-sample derived seeds reproduces
// bit-identically regardless of scheduling.

#include <cstdint>

namespace arctic {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x7c159e3779b97f4aULL)) {}

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Independent stream; deterministic function of (key, stream id).
    Rng derive(std::uint64_t stream) const {
        Rng r(0);
        r.key_ = mix(key_ ^ mix(stream + 0x6a09e667f3bcc909ULL));
        r.counter_ = 0;
        return r;
    }

    bool coin() { return next() >> 63; }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, m). Lemire multiply-shift; bias < m / 2^64.
    std::uint64_t below(std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * m) >> 64);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace arctic

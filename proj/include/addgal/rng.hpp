#ifndef ADDGAL_RNG_HPP
#define ADDGAL_RNG_HPP

#include <cstdint>

namespace addgal {

// Counter-based pseudo-random stream. A stream is keyed by (seed, index),
// so independent trials can draw from independent streams without any
// coordination: stream(seed, i) is the same sequence no matter which
// thread runs trial i.
class RngStream {
public:
    RngStream() : state_(0x9e3779b97f4a7c15ULL) {}
    RngStream(std::uint64_t seed, std::uint64_t index) {
        state_ = mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^ mix(index + 0xbf58476d1ce4e5b9ULL));
        if (state_ == 0) state_ = 0x2545f4914f6cdd1dULL;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, n), n >= 1. Rejection sampling keeps the draw unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    bool next_bool() { return next_u64() & 1; }

    // Derive a child stream; used when one trial needs several independent
    // substreams (e.g. sampling and equal-degree splitting).
    RngStream fork(std::uint64_t tag) const {
        RngStream s;
        s.state_ = mix(state_ ^ mix(tag + 0x94d049bb133111ebULL));
        if (s.state_ == 0) s.state_ = 0x2545f4914f6cdd1dULL;
        return s;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace addgal

#endif

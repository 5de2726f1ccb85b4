#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace widomkit {

/// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
/// A (seed, stream) pair names an independent sequence; drawing never touches
/// shared state, so one stream per Monte Carlo repetition gives
/// reproducibility that is independent of the thread schedule.
class Philox {
  public:
    using result_type = std::uint32_t;

    Philox(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return 0xFFFFFFFFu; }

    result_type operator()() {
        if (have_ == 0) {
            block_ = round10(ctr_, key_);
            // 64-bit block counter in words 0..1
            if (++ctr_[0] == 0) ++ctr_[1];
            have_ = 4;
        }
        return block_[4 - have_--];
    }

    static std::array<std::uint32_t, 4> round10(std::array<std::uint32_t, 4> c,
                                                std::array<std::uint32_t, 2> k) {
        for (int r = 0; r < 10; ++r) {
            std::uint64_t p0 = 0xD2511F53ull * c[0];
            std::uint64_t p1 = 0xCD9E8D57ull * c[2];
            c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
                 static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
                 static_cast<std::uint32_t>(p0)};
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        return c;
    }

  private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> block_{};
    int have_ = 0;
};

/// Distribution helpers over a Philox stream. The transforms are written out
/// here (not taken from <random>) so that sequences are identical across
/// standard libraries.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    std::uint32_t next_u32() { return gen_(); }

    std::uint64_t next_u64() {
        std::uint64_t hi = gen_();
        return (hi << 32) | gen_();
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        // rejection to kill modulo bias
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Standard normal, Box-Muller.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Exponential with the given rate.
    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  private:
    Philox gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace widomkit

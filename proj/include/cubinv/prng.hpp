#ifndef CUBINV_PRNG_HPP
#define CUBINV_PRNG_HPP

#include <cstdint>
#include <random>

namespace cubinv {

/// Seeded deterministic random source. Bounded draws are implemented by
/// rejection on top of the raw 64-bit stream, so identical seeds produce
/// identical values on every platform and standard library.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % range);
    }

    /// Uniform nonzero integer in [lo, hi].
    std::int64_t nonzero_int(std::int64_t lo, std::int64_t hi) {
        std::int64_t v;
        do {
            v = uniform_int(lo, hi);
        } while (v == 0);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cubinv

#endif

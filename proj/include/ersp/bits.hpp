#ifndef ERSP_BITS_HPP_
#define ERSP_BITS_HPP_

#include <bitset>
#include <cstdint>
#include <ostream>

namespace ersp {

// Fixed-width node set. Dense node indices only; instances are rejected at
// load time if they exceed this width.
inline constexpr int kMaxNodes = 192;
using NodeSet = std::bitset<kMaxNodes>;

inline bool is_subset(const NodeSet& a, const NodeSet& b) {
    return (a & ~b).none();
}

// splitmix64: portable seedable generator, identical output on all platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // uniform integer in [0, n)
    uint64_t next_below(uint64_t n) {
        return next() % n;
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    uint64_t state_;
};

}  // namespace ersp

#endif  // ERSP_BITS_HPP_

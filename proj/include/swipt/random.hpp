#ifndef SWIPT_RANDOM_HPP
#define SWIPT_RANDOM_HPP

#include <array>
#include <cstdint>

namespace swipt {

// Philox4x32-10 block function (Salmon et al., counter-based RNG).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// A deterministic stream of uniforms. The 64-bit seed is the Philox key and
// the stream id occupies the upper half of the counter, so distinct stream ids
// can never produce overlapping blocks.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream_id);

    // Uniform on the open interval (0, 1) with 53 random bits.
    double uniform();

    std::uint64_t blocks_used() const { return block_index_; }

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_id_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int next_word_ = 4;
};

} // namespace swipt

#endif

// Deterministic random streams. Work is split into fixed logical blocks and
// each block draws from its own generator seeded by (master_seed, block_index),
// so results do not depend on thread count or scheduling.
#pragma once

#include <cstdint>
#include <random>

namespace trapoptics {

inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t block_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(block_index & 0xffffffffu),
                    static_cast<std::uint32_t>(block_index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace trapoptics

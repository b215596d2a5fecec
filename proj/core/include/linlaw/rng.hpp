#pragma once

#include <cstdint>
#include <random>

namespace linlaw {

/// Seeded stream of uniform variates on [0, 1).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Variates are built from the top 53 bits of each draw instead of
/// std::uniform_real_distribution, whose algorithm is implementation
/// defined. Together this makes simulations byte-identical across platforms
/// and standard libraries.
class UniformStream {
public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace linlaw

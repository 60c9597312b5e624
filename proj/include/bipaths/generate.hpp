#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "bipaths/bgf.hpp"

namespace bipaths {

/// Relative weights of the sign pairs (-,-), (-,+), (+,-), (+,+).
using SignWeights = std::array<std::uint32_t, 4>;

/// "mixed" (uniform), one pair such as "--" or "-+", or four comma-separated
/// weights "a,b,c,d". Throws InvalidParameter.
SignWeights parse_sign_weights(std::string_view text);

struct GeneratorParams {
    std::size_t vertices = 1;
    std::size_t edges = 0;
    double x_fraction = 0.5;
    SignWeights signs{1, 1, 1, 1};
    std::uint64_t seed = 0;
};

/// Reproducible random instance: vertices v0..v{n-1}, m loop-free edges with
/// uniform endpoints, ceil(x_fraction * n) terminals chosen uniformly.
/// Sampling uses only mt19937_64 output, so results match across standard
/// libraries. Throws InvalidParameter.
Instance generate_instance(const GeneratorParams& params);

/// Uniform integer in [0, bound) by rejection; bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace bipaths

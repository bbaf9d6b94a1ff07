#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperlsh/geometry.hpp"

namespace hyperlsh {

// Hamming cube {0,1}^d placed at a shared height z in half-space coordinates.
struct HammingEmbedding {
    std::size_t d;
    double z;
    double epsilon;
};

// enforces z >= sqrt(d / (2 epsilon)); no silent adjustment
HammingEmbedding make_hamming_embedding(std::size_t d, double z, double epsilon);

// bit-vector x -> (z, x)
HalfSpacePoint embed_hamming(const HammingEmbedding& emb, const std::vector<std::uint8_t>& x);

struct PuiseuxSandwich {
    double lower;  // sqrt(2x) (1 - x/12)
    double mid;    // arccosh(1 + x)
    double upper;  // sqrt(2x)
};
PuiseuxSandwich puiseux_sandwich(double x);  // 0 < x < 1

// sqrt(h) (1 - eps/12) <= d_H(p_i, p_j) * z <= sqrt(h) with h the Hamming
// distance, within 1e-12 slack
bool verify_sandwich(const HammingEmbedding& emb, const std::vector<std::uint8_t>& xi,
                     const std::vector<std::uint8_t>& xj);

// (1 - eps/12)^2 / c_h^2, the Hamming-side approximation ratio induced by a
// hyperbolic factor c_h
double induced_approximation_factor(double c_h, double epsilon);

}  // namespace hyperlsh

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperlsh/geometry.hpp"

namespace hyperlsh {

enum class Model { ball, halfspace };

// A tagged point set. Ball rows hold d coordinates; half-space rows hold
// (z, x_1, ..., x_{d-1}), also d values. ids are unique, parallel to coords.
struct Dataset {
    Model model = Model::ball;
    std::size_t dim = 2;
    std::vector<std::vector<double>> coords;
    std::vector<std::uint64_t> ids;

    std::size_t size() const { return coords.size(); }
};

// checks dim >= 2, row widths, per-point model validity and id uniqueness
void validate_dataset(const Dataset& data);

PoincarePoint row_to_poincare(const Dataset& data, std::size_t i);
HalfSpacePoint row_to_halfspace(const Dataset& data, std::size_t i);

// whole-set conversions into the representation used for hashing
std::vector<PoincarePoint> to_poincare(const Dataset& data);
std::vector<HalfSpacePoint> to_halfspace(const Dataset& data);

// parses one coordinate row in the dataset's model; converts when the row's
// model differs from the target used above
PoincarePoint coords_to_poincare(Model model, std::size_t dim, const std::vector<double>& coords);
HalfSpacePoint coords_to_halfspace(Model model, std::size_t dim, const std::vector<double>& coords);

}  // namespace hyperlsh

#include "hyperlsh/dataset.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hyperlsh {

void validate_dataset(const Dataset& data) {
    if (data.dim < 2) throw std::domain_error("dataset: dimension must be at least 2");
    if (data.coords.size() != data.ids.size())
        throw std::invalid_argument("dataset: ids and coords differ in length");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(data.ids.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data.coords[i].size() != data.dim)
            throw std::invalid_argument("dataset: row width differs from dimension");
        if (!seen.insert(data.ids[i]).second)
            throw std::invalid_argument("dataset: duplicate point id");
        if (data.model == Model::ball) {
            validate_point(row_to_poincare(data, i));
        } else {
            validate_point(row_to_halfspace(data, i));
        }
    }
}

PoincarePoint row_to_poincare(const Dataset& data, std::size_t i) {
    return coords_to_poincare(data.model, data.dim, data.coords[i]);
}

HalfSpacePoint row_to_halfspace(const Dataset& data, std::size_t i) {
    return coords_to_halfspace(data.model, data.dim, data.coords[i]);
}

std::vector<PoincarePoint> to_poincare(const Dataset& data) {
    std::vector<PoincarePoint> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.push_back(row_to_poincare(data, i));
    return out;
}

std::vector<HalfSpacePoint> to_halfspace(const Dataset& data) {
    std::vector<HalfSpacePoint> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.push_back(row_to_halfspace(data, i));
    return out;
}

PoincarePoint coords_to_poincare(Model model, std::size_t dim, const std::vector<double>& coords) {
    if (coords.size() != dim) throw std::invalid_argument("point: row width differs from dimension");
    if (model == Model::ball) {
        PoincarePoint p{coords};
        validate_point(p);
        return p;
    }
    return halfspace_to_poincare(coords_to_halfspace(model, dim, coords));
}

HalfSpacePoint coords_to_halfspace(Model model, std::size_t dim, const std::vector<double>& coords) {
    if (coords.size() != dim) throw std::invalid_argument("point: row width differs from dimension");
    if (model == Model::halfspace) {
        HalfSpacePoint p;
        p.z = coords[0];
        p.x.assign(coords.begin() + 1, coords.end());
        validate_point(p);
        return p;
    }
    return poincare_to_halfspace(coords_to_poincare(model, dim, coords));
}

}  // namespace hyperlsh


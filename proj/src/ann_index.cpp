#include "hyperlsh/ann_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hyperlsh/lsh2d.hpp"

namespace hyperlsh {

namespace {

// sampler radius floor keeping c r well inside pi sinh R
double radius_floor(double r, double c) {
    return std::asinh(2.0 * c * r / std::numbers::pi) + 1e-6;
}

double max_disk_norm(const ProjectionMap& map, const std::vector<HalfSpacePoint>& pts) {
    double best = 0.0;
    for (const auto& p : pts) {
        PoincarePoint u = projected_disk_point(map, p);
        double en = std::sqrt(u.coords[0] * u.coords[0] + u.coords[1] * u.coords[1]);
        best = std::max(best, 2.0 * std::atanh(std::min(en, 1.0 - 1e-16)));
    }
    return best;
}

struct BestCandidate {
    bool found = false;
    double dist = std::numeric_limits<double>::infinity();
    std::uint64_t id = 0;

    void offer(double d, std::uint64_t i) {
        if (!found || d < dist || (d == dist && i < id)) {
            found = true;
            dist = d;
            id = i;
        }
    }
};

}  // namespace

TableShape choose_params(std::size_t n, double p1, double p2) {
    if (!(p1 > 0.0 && p1 < 1.0) || !(p2 > 0.0 && p2 < 1.0))
        throw std::domain_error("choose_params: probabilities must lie in (0, 1)");
    if (!(p2 < p1)) throw std::domain_error("choose_params: p2 must be below p1");
    double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
    double ln_inv_p2 = -std::log(p2);
    TableShape shape;
    shape.rho = std::log(p1) / std::log(p2);
    shape.K = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ln_n / ln_inv_p2)));
    shape.L = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(
                  std::exp(shape.rho * ln_n))));
    return shape;
}

std::string table_key(const LshIndex& index, std::size_t l, const PoincarePoint& p) {
    std::size_t K = index.params.K;
    std::string key((K + 7) / 8, '\0');
    for (std::size_t k = 0; k < K; ++k)
        if (hash_side(index.geodesics[l * K + k], p) > 0)
            key[k >> 3] |= static_cast<char>(1 << (k & 7));
    return key;
}

std::string table_key(const LshIndex& index, std::size_t l, const HalfSpacePoint& p) {
    std::size_t K = index.params.K;
    std::string key((K + 7) / 8, '\0');
    for (std::size_t k = 0; k < K; ++k)
        if (hash_hd(index.hashers[l * K + k], p) > 0)
            key[k >> 3] |= static_cast<char>(1 << (k & 7));
    return key;
}

void finalize_index(LshIndex& index) {
    if (index.dim == 2) {
        index.disk_points = to_poincare(index.data);
        index.halfspace_points.clear();
    } else {
        index.halfspace_points = to_halfspace(index.data);
        index.disk_points.clear();
    }
}

LshIndex build_index(const Dataset& data, double r, double c, Rng& rng,
                     std::optional<std::pair<std::size_t, std::size_t>> overrides) {
    validate_dataset(data);
    if (!(r > 0.0)) throw std::domain_error("build_index: r must be positive");
    if (!(c > 1.0)) throw std::domain_error("build_index: c must exceed 1");

    LshIndex index;
    index.model = data.model;
    index.dim = data.dim;
    index.data = data;
    index.params.r = r;
    index.params.c = c;
    finalize_index(index);

    std::size_t n = data.size();
    if (index.dim == 2) {
        double max_norm = 0.0;
        for (const auto& p : index.disk_points) max_norm = std::max(max_norm, hyperbolic_norm(p));
        index.sampler_R = std::max(max_norm + 1e-6, radius_floor(r, c));
        index.p1 = collision_probability(r, index.sampler_R);
        index.p2 = collision_probability(c * r, index.sampler_R);
    } else {
        if (!overrides && !(alpha_constant() * c > 1.0))
            throw std::domain_error("build_index: c at most 1/alpha needs explicit (K, L) overrides");
        // size the tables from a conservative probe of the projected spread
        index.sampler_R = 0.0;
        double probe_R = radius_floor(r, c);
        for (int probe = 0; probe < 16; ++probe) {
            ProjectionMap row = gaussian_projection(index.dim - 1, 1, 1.0, rng);
            probe_R = std::max(probe_R, max_disk_norm(row, index.halfspace_points) + 1e-6);
        }
        probe_R = std::min(probe_R, 25.0);
        auto band_r = collision_bounds_hd(r, probe_R);
        auto band_cr = collision_bounds_hd(c * r, probe_R);
        index.p1 = band_r.first;    // lower edge at r
        index.p2 = band_cr.second;  // upper edge at c r
    }

    if (overrides) {
        index.params.K = std::max<std::size_t>(1, overrides->first);
        index.params.L = std::max<std::size_t>(1, overrides->second);
        index.rho = (index.p2 > 0.0 && index.p2 < 1.0 && index.p1 > index.p2)
                        ? std::log(index.p1) / std::log(index.p2)
                        : std::numeric_limits<double>::quiet_NaN();
    } else {
        TableShape shape = choose_params(std::max<std::size_t>(n, 1), index.p1, index.p2);
        index.params.K = shape.K;
        index.params.L = shape.L;
        index.rho = shape.rho;
    }

    std::size_t total = index.params.K * index.params.L;
    if (index.dim == 2) {
        KinematicSampler sampler(index.sampler_R);
        index.geodesics.reserve(total);
        for (std::size_t i = 0; i < total; ++i) index.geodesics.push_back(sample_geodesic(sampler, rng));
    } else {
        index.hashers.reserve(total);
        for (std::size_t i = 0; i < total; ++i) {
            HdHasher h;
            h.projection = gaussian_projection(index.dim - 1, 1, 1.0, rng);
            double R_h = std::max(max_disk_norm(h.projection, index.halfspace_points) + 1e-6, 1e-3);
            h.sampler_R = std::min(R_h, 25.0);
            h.geodesic = sample_geodesic(KinematicSampler(h.sampler_R), rng);
            index.hashers.push_back(std::move(h));
        }
    }

    index.tables.assign(index.params.L, {});
    for (std::size_t l = 0; l < index.params.L; ++l) {
        for (std::size_t i = 0; i < n; ++i) {
            std::string key = index.dim == 2 ? table_key(index, l, index.disk_points[i])
                                             : table_key(index, l, index.halfspace_points[i]);
            index.tables[l][key].push_back(static_cast<std::uint32_t>(i));
        }
    }
    return index;
}

std::optional<std::uint64_t> query(const LshIndex& index, const std::vector<double>& q,
                                   std::size_t budget) {
    if (budget == 0) throw std::invalid_argument("query: budget must be positive");
    std::size_t n = index.data.size();
    BestCandidate best;
    std::vector<char> seen(n, 0);
    std::size_t examined = 0;

    PoincarePoint q2;
    HalfSpacePoint qh;
    if (index.dim == 2)
        q2 = coords_to_poincare(index.model, index.dim, q);
    else
        qh = coords_to_halfspace(index.model, index.dim, q);

    for (std::size_t l = 0; l < index.params.L && examined < budget; ++l) {
        std::string key = index.dim == 2 ? table_key(index, l, q2) : table_key(index, l, qh);
        auto it = index.tables[l].find(key);
        if (it == index.tables[l].end()) continue;
        for (std::uint32_t pos : it->second) {
            if (seen[pos]) continue;
            seen[pos] = 1;
            double d = index.dim == 2 ? distance_poincare(q2, index.disk_points[pos])
                                      : distance_halfspace(qh, index.halfspace_points[pos]);
            best.offer(d, index.data.ids[pos]);
            if (++examined >= budget) break;
        }
    }
    if (best.found && best.dist <= index.params.c * index.params.r) return best.id;
    return std::nullopt;
}

std::optional<std::uint64_t> query(const LshIndex& index, const std::vector<double>& q) {
    return query(index, q, 3 * index.params.L);
}

std::pair<std::uint64_t, double> brute_force_nn(const Dataset& data, const std::vector<double>& q) {
    validate_dataset(data);
    if (data.size() == 0) throw std::invalid_argument("brute_force_nn: empty dataset");
    BestCandidate best;
    if (data.dim == 2) {
        PoincarePoint qq = coords_to_poincare(data.model, data.dim, q);
        for (std::size_t i = 0; i < data.size(); ++i)
            best.offer(distance_poincare(qq, row_to_poincare(data, i)), data.ids[i]);
    } else {
        HalfSpacePoint qq = coords_to_halfspace(data.model, data.dim, q);
        for (std::size_t i = 0; i < data.size(); ++i)
            best.offer(distance_halfspace(qq, row_to_halfspace(data, i)), data.ids[i]);
    }
    return {best.id, best.dist};
}

double query_distance(const LshIndex& index, const std::vector<double>& q, std::uint64_t id) {
    for (std::size_t i = 0; i < index.data.size(); ++i) {
        if (index.data.ids[i] != id) continue;
        if (index.dim == 2)
            return distance_poincare(coords_to_poincare(index.model, index.dim, q), index.disk_points[i]);
        return distance_halfspace(coords_to_halfspace(index.model, index.dim, q), index.halfspace_points[i]);
    }
    throw std::invalid_argument("query_distance: unknown id");
}

}  // namespace hyperlsh

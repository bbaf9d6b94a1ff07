#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlsh/dataset.hpp"
#include "hyperlsh/geodesic.hpp"
#include "hyperlsh/lsh_hd.hpp"
#include "hyperlsh/rng.hpp"

namespace hyperlsh {

struct IndexParams {
    std::size_t K = 1;  // concatenation width
    std::size_t L = 1;  // table count
    double r = 0.0;
    double c = 0.0;
};

// K = ceil(ln n / ln(1/p2)), rho = ln(1/p1)/ln(1/p2), L = ceil(n^rho),
// both floored at 1
struct TableShape {
    std::size_t K;
    std::size_t L;
    double rho;
};
TableShape choose_params(std::size_t n, double p1, double p2);

struct LshIndex {
    IndexParams params;
    Model model = Model::ball;
    std::size_t dim = 2;
    double p1 = 0.0;  // sizing collision probability at r
    double p2 = 0.0;  // sizing collision probability at c r
    double rho = 0.0;
    double sampler_R = 0.0;              // plane sampler radius (d = 2 only)
    std::vector<Geodesic> geodesics;     // d = 2: K*L hash functions
    std::vector<HdHasher> hashers;       // d >= 3: K*L hash functions
    Dataset data;
    // table l maps the packed K-bit key to point positions, insertion order
    std::vector<std::map<std::string, std::vector<std::uint32_t>>> tables;

    // hashing-side caches, rebuilt after deserialization
    std::vector<PoincarePoint> disk_points;       // d = 2
    std::vector<HalfSpacePoint> halfspace_points; // d >= 3
};

// packed sign bits of point `p` under table l's hashers: label +1 -> bit 1,
// least significant bit first within each byte
std::string table_key(const LshIndex& index, std::size_t l, const PoincarePoint& p);
std::string table_key(const LshIndex& index, std::size_t l, const HalfSpacePoint& p);

// Builds the index. For d >= 3 requires alpha c > 1 unless explicit (K, L)
// overrides are supplied. Deterministic given the rng seed.
LshIndex build_index(const Dataset& data, double r, double c, Rng& rng,
                     std::optional<std::pair<std::size_t, std::size_t>> overrides = std::nullopt);

// Probes q's bucket in each table, examining at most `budget` distinct
// candidates; returns the nearest examined candidate if its distance is at
// most c r (ties to the smaller id), otherwise nothing.
std::optional<std::uint64_t> query(const LshIndex& index, const std::vector<double>& q,
                                   std::size_t budget);
// same, with the default budget 3L
std::optional<std::uint64_t> query(const LshIndex& index, const std::vector<double>& q);

// exact nearest neighbor by linear scan, ties to the smaller id
std::pair<std::uint64_t, double> brute_force_nn(const Dataset& data, const std::vector<double>& q);

// distance from query coordinates (in the index's model) to a stored point
double query_distance(const LshIndex& index, const std::vector<double>& q, std::uint64_t id);

// recomputes the hashing-side caches; called by build and after deserialization
void finalize_index(LshIndex& index);

}  // namespace hyperlsh

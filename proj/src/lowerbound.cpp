#include "hyperlsh/lowerbound.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlsh {

HammingEmbedding make_hamming_embedding(std::size_t d, double z, double epsilon) {
    if (d == 0) throw std::domain_error("hamming embedding: cube dimension must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("hamming embedding: epsilon must lie in (0, 1)");
    if (!(z >= std::sqrt(static_cast<double>(d) / (2.0 * epsilon))))
        throw std::domain_error("hamming embedding: z below sqrt(d / (2 epsilon))");
    return HammingEmbedding{d, z, epsilon};
}

HalfSpacePoint embed_hamming(const HammingEmbedding& emb, const std::vector<std::uint8_t>& x) {
    if (x.size() != emb.d) throw std::invalid_argument("embed_hamming: wrong vector length");
    HalfSpacePoint p;
    p.z = emb.z;
    p.x.resize(emb.d);
    for (std::size_t i = 0; i < emb.d; ++i) {
        if (x[i] > 1) throw std::domain_error("embed_hamming: vector must be binary");
        p.x[i] = static_cast<double>(x[i]);
    }
    return p;
}

PuiseuxSandwich puiseux_sandwich(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("puiseux_sandwich: x must lie in (0, 1)");
    double root = std::sqrt(2.0 * x);
    return {root * (1.0 - x / 12.0), stable_arccosh1p(x), root};
}

bool verify_sandwich(const HammingEmbedding& emb, const std::vector<std::uint8_t>& xi,
                     const std::vector<std::uint8_t>& xj) {
    HalfSpacePoint pi = embed_hamming(emb, xi);
    HalfSpacePoint pj = embed_hamming(emb, xj);
    std::size_t h = 0;
    for (std::size_t k = 0; k < emb.d; ++k) h += xi[k] != xj[k];
    double lhs = std::sqrt(static_cast<double>(h)) * (1.0 - emb.epsilon / 12.0);
    double rhs = std::sqrt(static_cast<double>(h));
    double mid = distance_halfspace(pi, pj) * emb.z;
    double slack = 1e-12 * std::max(1.0, rhs);
    return lhs - slack <= mid && mid <= rhs + slack;
}

double induced_approximation_factor(double c_h, double epsilon) {
    if (!(c_h > 1.0)) throw std::domain_error("induced_approximation_factor: c_h must exceed 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("induced_approximation_factor: epsilon must lie in (0, 1)");
    double k = 1.0 - epsilon / 12.0;
    return k * k / (c_h * c_h);
}

}  // namespace hyperlsh

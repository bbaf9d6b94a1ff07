#include "hyperlsh/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperlsh {

namespace {

double sq_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return s;
}

[[noreturn]] void dim_mismatch(const char* what) {
    throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

}  // namespace

double stable_arccosh1p(double w) {
    if (!(w >= 0.0)) throw std::domain_error("stable_arccosh1p: argument below 0");
    if (w < 1e-8) {
        // arccosh(1+w) = sqrt(2w) * (1 - w/12 + 3w^2/160 - ...)
        return std::sqrt(2.0 * w) * (1.0 - w / 12.0 + 3.0 * w * w / 160.0);
    }
    // log1p form avoids the cancellation in log(1 + w + sqrt(...)) for small w
    return std::log1p(w + std::sqrt(w * (w + 2.0)));
}

void validate_point(const PoincarePoint& p) {
    if (p.coords.size() < 2) throw std::domain_error("ball point: dimension must be at least 2");
    double n2 = sq_norm(p.coords);
    if (!(n2 <= (1.0 - 1e-12) * (1.0 - 1e-12)))
        throw std::domain_error("ball point: norm must be at most 1 - 1e-12");
}

void validate_point(const HalfSpacePoint& p) {
    if (p.x.empty()) throw std::domain_error("half-space point: dimension must be at least 2");
    if (!(p.z > 0.0) || !std::isfinite(p.z))
        throw std::domain_error("half-space point: z must be positive and finite");
    for (double c : p.x)
        if (!std::isfinite(c)) throw std::domain_error("half-space point: coordinate not finite");
}

void validate_point(const HyperboloidPoint& p) {
    if (p.coords.size() < 3) throw std::domain_error("hyperboloid point: dimension must be at least 2");
    double x0 = p.coords[0];
    if (!(x0 >= 1.0)) throw std::domain_error("hyperboloid point: first coordinate must be at least 1");
    // evaluate the form in long double; storing x0 in a double already perturbs
    // x0^2 by ~2 eps x0^2, so the tolerance scales with that quantization floor
    long double q = -static_cast<long double>(x0) * static_cast<long double>(x0);
    for (std::size_t i = 1; i < p.coords.size(); ++i) {
        long double c = p.coords[i];
        if (!std::isfinite(p.coords[i]))
            throw std::domain_error("hyperboloid point: coordinate not finite");
        q += c * c;
    }
    double tol = std::max(1e-9, 8.0 * std::numeric_limits<double>::epsilon() * x0 * x0);
    if (!(std::fabs(static_cast<double>(q + 1.0L)) <= tol))
        throw std::domain_error("hyperboloid point: Minkowski norm differs from -1");
}

double distance_poincare(const PoincarePoint& a, const PoincarePoint& b) {
    validate_point(a);
    validate_point(b);
    if (a.coords.size() != b.coords.size()) dim_mismatch("ball distance");
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        double t = a.coords[i] - b.coords[i];
        d2 += t * t;
    }
    double w = 2.0 * d2 / ((1.0 - sq_norm(a.coords)) * (1.0 - sq_norm(b.coords)));
    return stable_arccosh1p(w);
}

double distance_halfspace(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    validate_point(a);
    validate_point(b);
    if (a.x.size() != b.x.size()) dim_mismatch("half-space distance");
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        double t = a.x[i] - b.x[i];
        d2 += t * t;
    }
    double dz = a.z - b.z;
    return stable_arccosh1p((d2 + dz * dz) / (2.0 * a.z * b.z));
}

double distance_hyperboloid(const HyperboloidPoint& a, const HyperboloidPoint& b) {
    validate_point(a);
    validate_point(b);
    if (a.coords.size() != b.coords.size()) dim_mismatch("hyperboloid distance");
    // cosh(d) = -<a,b> = 1 + <a-b, a-b>/2; the difference form stays accurate
    // where the direct inner product cancels catastrophically
    double dt = a.coords[0] - b.coords[0];
    double q = -dt * dt;
    for (std::size_t i = 1; i < a.coords.size(); ++i) {
        double t = a.coords[i] - b.coords[i];
        q += t * t;
    }
    return stable_arccosh1p(std::max(q, 0.0) / 2.0);
}

double minkowski_inner(const HyperboloidPoint& a, const HyperboloidPoint& b) {
    if (a.coords.size() != b.coords.size()) dim_mismatch("minkowski_inner");
    double s = -a.coords[0] * b.coords[0];
    for (std::size_t i = 1; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

double hyperbolic_norm(const PoincarePoint& p) {
    validate_point(p);
    return 2.0 * std::atanh(std::sqrt(sq_norm(p.coords)));
}

double hyperbolic_norm(const HalfSpacePoint& p) {
    validate_point(p);
    double dz = p.z - 1.0;
    return stable_arccosh1p((sq_norm(p.x) + dz * dz) / (2.0 * p.z));
}

double hyperbolic_norm(const HyperboloidPoint& p) {
    validate_point(p);
    return stable_arccosh1p(std::max(p.coords[0] - 1.0, 0.0));
}

HalfSpacePoint poincare_to_halfspace(const PoincarePoint& p) {
    validate_point(p);
    std::size_t d = p.coords.size();
    double last = p.coords[d - 1];
    double rest2 = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) rest2 += p.coords[i] * p.coords[i];
    // inversion through -e_d; (1 + last) is exact when last is near -1, so the
    // denominator keeps full relative accuracy near the pole
    double s = (1.0 + last) * (1.0 + last) + rest2;
    HalfSpacePoint out;
    out.z = (1.0 - sq_norm(p.coords)) / s;
    out.x.resize(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) out.x[i] = 2.0 * p.coords[i] / s;
    validate_point(out);
    return out;
}

PoincarePoint halfspace_to_poincare(const HalfSpacePoint& p) {
    validate_point(p);
    std::size_t d = p.x.size() + 1;
    double x2 = sq_norm(p.x);
    double t = x2 + (p.z + 1.0) * (p.z + 1.0);
    PoincarePoint out;
    out.coords.resize(d);
    for (std::size_t i = 0; i + 1 < d; ++i) out.coords[i] = 2.0 * p.x[i] / t;
    out.coords[d - 1] = (1.0 - p.z * p.z - x2) / t;
    validate_point(out);
    return out;
}

HyperboloidPoint poincare_to_hyperboloid(const PoincarePoint& p) {
    validate_point(p);
    double n2 = sq_norm(p.coords);
    double denom = 1.0 - n2;
    HyperboloidPoint out;
    out.coords.resize(p.coords.size() + 1);
    out.coords[0] = (1.0 + n2) / denom;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        out.coords[i + 1] = 2.0 * p.coords[i] / denom;
    return out;
}

PoincarePoint hyperboloid_to_poincare(const HyperboloidPoint& p) {
    validate_point(p);
    double denom = 1.0 + p.coords[0];
    PoincarePoint out;
    out.coords.resize(p.coords.size() - 1);
    for (std::size_t i = 1; i < p.coords.size(); ++i) out.coords[i - 1] = p.coords[i] / denom;
    validate_point(out);
    return out;
}

}  // namespace hyperlsh

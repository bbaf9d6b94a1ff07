#include <optional>
#include <utility>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperlsh/ann_index.hpp"
#include "hyperlsh/dataset.hpp"
#include "hyperlsh/dimreduce.hpp"
#include "hyperlsh/experiments.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/io.hpp"
#include "hyperlsh/lowerbound.hpp"
#include "hyperlsh/lsh2d.hpp"
#include "hyperlsh/lsh_hd.hpp"
#include "hyperlsh/validators.hpp"

namespace py = pybind11;
using namespace hyperlsh;

namespace {

PoincarePoint ball_point(const std::vector<double>& coords) {
    PoincarePoint p;
    p.coords = coords;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "geodesic hashing for hyperbolic near-neighbor search";

    py::register_exception<insufficient_pairs_error>(m, "InsufficientPairsError",
                                                     PyExc_RuntimeError);

    py::enum_<Model>(m, "Model")
        .value("ball", Model::ball)
        .value("halfspace", Model::halfspace);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("model", &Dataset::model)
        .def_readwrite("dim", &Dataset::dim)
        .def_readwrite("coords", &Dataset::coords)
        .def_readwrite("ids", &Dataset::ids)
        .def("__len__", &Dataset::size);

    // model distances and conversions over plain coordinate lists
    m.def("distance_ball", [](const std::vector<double>& a, const std::vector<double>& b) {
        return distance_poincare(ball_point(a), ball_point(b));
    }, py::arg("a"), py::arg("b"));
    m.def("distance_halfspace",
          [](double za, const std::vector<double>& xa, double zb, const std::vector<double>& xb) {
              return distance_halfspace(HalfSpacePoint{za, xa}, HalfSpacePoint{zb, xb});
          },
          py::arg("za"), py::arg("xa"), py::arg("zb"), py::arg("xb"));
    m.def("ball_to_halfspace", [](const std::vector<double>& a) {
        HalfSpacePoint h = poincare_to_halfspace(ball_point(a));
        return std::make_pair(h.z, h.x);
    }, py::arg("coords"));
    m.def("halfspace_to_ball", [](double z, const std::vector<double>& x) {
        return halfspace_to_poincare(HalfSpacePoint{z, x}).coords;
    }, py::arg("z"), py::arg("x"));

    // planar family closed forms
    m.def("collision_probability", &collision_probability, py::arg("r"), py::arg("R"));
    m.def("rho_exact", &rho_exact, py::arg("r"), py::arg("c"), py::arg("R"));
    m.def("rho_bound", &rho_bound, py::arg("c"));
    m.def("estimate_collision_mc",
          [](const std::vector<double>& x, const std::vector<double>& y, double R,
             std::size_t n_samples, std::uint64_t seed) {
              Rng rng(seed);
              return estimate_collision_mc(ball_point(x), ball_point(y), R, n_samples, rng);
          },
          py::arg("x"), py::arg("y"), py::arg("R"), py::arg("n_samples"), py::arg("seed"));

    py::class_<LshFamilyParams>(m, "LshFamilyParams")
        .def_readonly("r", &LshFamilyParams::r)
        .def_readonly("c", &LshFamilyParams::c)
        .def_readonly("R", &LshFamilyParams::R)
        .def_readonly("p1", &LshFamilyParams::p1)
        .def_readonly("p2", &LshFamilyParams::p2)
        .def_readonly("rho", &LshFamilyParams::rho);
    m.def("make_lsh_family_params", &make_lsh_family_params, py::arg("r"), py::arg("c"),
          py::arg("R"));

    // high-dimensional band
    m.def("alpha_constant", &alpha_constant);
    m.def("collision_bounds_hd", &collision_bounds_hd, py::arg("r"), py::arg("sampler_R"));

    // embedding arithmetic
    m.def("puiseux_sandwich", [](double x) {
        PuiseuxSandwich s = puiseux_sandwich(x);
        return py::make_tuple(s.lower, s.mid, s.upper);
    }, py::arg("x"));
    m.def("induced_approximation_factor", &induced_approximation_factor, py::arg("c_h"),
          py::arg("epsilon"));

    // experiments
    m.def("sample_uniform_ball",
          [](std::size_t d, double R_hyp, std::size_t n, std::uint64_t seed) {
              Rng rng(seed);
              return sample_uniform_ball(d, R_hyp, n, rng);
          },
          py::arg("d"), py::arg("R_hyp"), py::arg("n"), py::arg("seed"));

    py::class_<RhoEstimate>(m, "RhoEstimate")
        .def_readonly("c", &RhoEstimate::c)
        .def_readonly("p1_hat", &RhoEstimate::p1_hat)
        .def_readonly("p2_hat", &RhoEstimate::p2_hat)
        .def_readonly("rho_hat", &RhoEstimate::rho_hat)
        .def_readonly("n_near_pairs", &RhoEstimate::n_near_pairs)
        .def_readonly("n_far_pairs", &RhoEstimate::n_far_pairs);

    m.def("estimate_p1_p2",
          [](const Dataset& points, double r, double c, double R, std::size_t reps,
             std::uint64_t seed) {
              Rng rng(seed);
              return estimate_p1_p2(points, r, c, R, reps, rng);
          },
          py::arg("points"), py::arg("r"), py::arg("c"), py::arg("R"), py::arg("reps"),
          py::arg("seed"));
    m.def("boundary_pair_experiment",
          [](const Dataset& points, double r, double c, double R, std::size_t reps,
             std::uint64_t seed) {
              Rng rng(seed);
              return boundary_pair_experiment(points, r, c, R, reps, rng);
          },
          py::arg("points"), py::arg("r"), py::arg("c"), py::arg("R"), py::arg("reps"),
          py::arg("seed"));
    m.def("rho_curve",
          [](std::size_t d, std::size_t n, double R_hyp, double r, std::vector<double> c_grid,
             std::size_t reps, std::uint64_t seed) {
              ExperimentConfig config;
              config.d = d;
              config.n = n;
              config.R_hyp = R_hyp;
              config.r = r;
              config.c_grid = std::move(c_grid);
              config.reps = reps;
              config.seed = seed;
              return rho_curve(config);
          },
          py::arg("d"), py::arg("n"), py::arg("R_hyp"), py::arg("r"), py::arg("c_grid"),
          py::arg("reps"), py::arg("seed"));

    // table index
    py::class_<TableShape>(m, "TableShape")
        .def_readonly("K", &TableShape::K)
        .def_readonly("L", &TableShape::L)
        .def_readonly("rho", &TableShape::rho);
    m.def("choose_params", &choose_params, py::arg("n"), py::arg("p1"), py::arg("p2"));

    py::class_<LshIndex>(m, "LshIndex")
        .def_property_readonly("K", [](const LshIndex& i) { return i.params.K; })
        .def_property_readonly("L", [](const LshIndex& i) { return i.params.L; })
        .def_property_readonly("r", [](const LshIndex& i) { return i.params.r; })
        .def_property_readonly("c", [](const LshIndex& i) { return i.params.c; })
        .def_readonly("dim", &LshIndex::dim)
        .def_readonly("p1", &LshIndex::p1)
        .def_readonly("p2", &LshIndex::p2)
        .def_readonly("rho", &LshIndex::rho)
        .def("__len__", [](const LshIndex& i) { return i.data.size(); });
    m.def("build_index",
          [](const Dataset& data, double r, double c, std::uint64_t seed,
             std::optional<std::pair<std::size_t, std::size_t>> overrides) {
              Rng rng(seed);
              return build_index(data, r, c, rng, overrides);
          },
          py::arg("data"), py::arg("r"), py::arg("c"), py::arg("seed"),
          py::arg("overrides") = std::nullopt);
    m.def("query",
          [](const LshIndex& index, const std::vector<double>& q,
             std::optional<std::size_t> budget) {
              return budget ? query(index, q, *budget) : query(index, q);
          },
          py::arg("index"), py::arg("q"), py::arg("budget") = std::nullopt);
    m.def("query_distance", &query_distance, py::arg("index"), py::arg("q"), py::arg("id"));
    m.def("brute_force_nn", &brute_force_nn, py::arg("data"), py::arg("q"));
    m.def("save_index", &save_index, py::arg("path"), py::arg("index"));
    m.def("load_index", &load_index, py::arg("path"));

    // proved-property validators
    m.def("validator_names", [] { return validator_names(); });
    m.def("run_validator", [](const std::string& which) {
        py::list out;
        for (const auto& r : run_validator(which))
            out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
    }, py::arg("which"));
}

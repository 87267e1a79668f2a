#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ndtv/applications.hpp"
#include "ndtv/generate.hpp"
#include "ndtv/halving.hpp"
#include "ndtv/io.hpp"
#include "ndtv/sampling.hpp"
#include "ndtv/tverberg.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ndtv::PointSet to_points(const Array& a) {
  if (a.ndim() != 2) throw ndtv::DomainError("points must be a 2-d array of shape (n, d)");
  const auto n = static_cast<std::size_t>(a.shape(0));
  const auto d = static_cast<std::size_t>(a.shape(1));
  return ndtv::PointSet(n, d, std::vector<double>(a.data(), a.data() + n * d));
}

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw ndtv::DomainError("expected a 1-d array");
  return std::vector<double>(a.data(), a.data() + a.shape(0));
}

py::array_t<double> to_array(const ndtv::PointSet& p) {
  py::array_t<double> out({p.size(), p.dim()});
  std::copy(p.coords().begin(), p.coords().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_ndtv, m) {
  m.doc() = "No-dimensional Tverberg partitions, centerballs and mean sampling.";

  py::register_exception<ndtv::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ndtv::io::IoError>(m, "IoError", PyExc_OSError);

  py::class_<ndtv::Ball>(m, "Ball")
      .def_readonly("center", &ndtv::Ball::center)
      .def_readonly("radius", &ndtv::Ball::radius);

  py::class_<ndtv::HullWitness>(m, "HullWitness")
      .def_readonly("support", &ndtv::HullWitness::support)
      .def_readonly("weights", &ndtv::HullWitness::weights)
      .def_readonly("point", &ndtv::HullWitness::point);

  py::class_<ndtv::TverbergCertificate>(m, "Certificate")
      .def_readonly("dimension", &ndtv::TverbergCertificate::dimension)
      .def_readonly("n", &ndtv::TverbergCertificate::n)
      .def_readonly("eps", &ndtv::TverbergCertificate::eps)
      .def_property_readonly("radius_basis",
                             [](const ndtv::TverbergCertificate& c) {
                               return std::string(ndtv::to_string(c.radius_basis));
                             })
      .def_readonly("ball", &ndtv::TverbergCertificate::ball)
      .def_readonly("groups", &ndtv::TverbergCertificate::groups)
      .def_readonly("witnesses", &ndtv::TverbergCertificate::witnesses)
      .def_property_readonly("size_cap",
                             [](const ndtv::TverbergCertificate& c) { return c.claims.size_cap; })
      .def_property_readonly("min_groups",
                             [](const ndtv::TverbergCertificate& c) { return c.claims.min_groups; })
      .def_property_readonly("algo",
                             [](const ndtv::TverbergCertificate& c) { return c.trace.algo; })
      .def_property_readonly("rounds",
                             [](const ndtv::TverbergCertificate& c) { return c.trace.rounds; })
      .def("max_group_size", &ndtv::TverbergCertificate::max_group_size)
      .def("to_json", [](const ndtv::TverbergCertificate& c) {
        return ndtv::io::certificate_to_json(c);
      });

  py::class_<ndtv::SampleResult>(m, "SampleResult")
      .def_readonly("indices", &ndtv::SampleResult::indices)
      .def_readonly("centroid_dist", &ndtv::SampleResult::centroid_dist)
      .def_readonly("bound", &ndtv::SampleResult::bound);

  py::class_<ndtv::HalvingResult>(m, "HalvingResult")
      .def_readonly("first", &ndtv::HalvingResult::first)
      .def_readonly("second", &ndtv::HalvingResult::second)
      .def_readonly("centroid_dist", &ndtv::HalvingResult::centroid_dist)
      .def_readonly("rounds", &ndtv::HalvingResult::rounds);

  py::class_<ndtv::CaratheodoryResult>(m, "CaratheodoryResult")
      .def_readonly("point", &ndtv::CaratheodoryResult::point)
      .def_readonly("witness", &ndtv::CaratheodoryResult::witness)
      .def_readonly("error", &ndtv::CaratheodoryResult::error)
      .def_readonly("bound", &ndtv::CaratheodoryResult::bound)
      .def_readonly("r", &ndtv::CaratheodoryResult::r)
      .def_readonly("retry_exhausted", &ndtv::CaratheodoryResult::retry_exhausted);

  // core
  m.def("centroid", [](const Array& p) { return ndtv::centroid(to_points(p)); }, py::arg("points"));
  m.def("avg_price", [](const Array& p) { return ndtv::avg_price(to_points(p)); },
        py::arg("points"));
  m.def("diameter_exact", [](const Array& p) { return ndtv::diameter_exact(to_points(p)); },
        py::arg("points"));
  m.def("diameter_bound", [](const Array& p) { return ndtv::diameter_bound(to_points(p)); },
        py::arg("points"));
  m.def(
      "dist_to_hull",
      [](const Array& q, const Array& group, double tol) {
        const auto res = ndtv::dist_to_hull(to_vector(q), to_points(group), {tol, 0});
        return py::make_tuple(res.distance, res.witness);
      },
      py::arg("q"), py::arg("group"), py::arg("tol") = 0.0,
      "Distance from q to the convex hull of the rows of `group`, with a witness.");

  // sampling and halving
  m.def(
      "sample_mean",
      [](const Array& p, std::size_t r, std::optional<std::uint64_t> seed, bool replace) {
        const auto pts = to_points(p);
        if (!seed) return ndtv::derand_sample_fast(pts, r);
        ndtv::Rng rng(*seed);
        return replace ? ndtv::sample_mean_with_replacement(pts, r, rng)
                       : ndtv::sample_mean_without_replacement(pts, r, rng);
      },
      py::arg("points"), py::arg("r"), py::arg("seed") = py::none(), py::arg("replace") = false,
      "r points with centroid near c(P): derandomized when seed is None.");
  m.def("derand_sample_slow",
        [](const Array& p, std::size_t r) { return ndtv::derand_sample_slow(to_points(p), r); },
        py::arg("points"), py::arg("r"));
  m.def("derand_sample_by_halving",
        [](const Array& p, std::size_t target) {
          return ndtv::derand_sample_by_halving(to_points(p), target);
        },
        py::arg("points"), py::arg("target"));
  m.def(
      "halve",
      [](const Array& p, std::optional<std::uint64_t> seed) {
        const auto pts = to_points(p);
        if (!seed) return ndtv::derand_halving(pts);
        ndtv::Rng rng(*seed);
        return ndtv::random_halving(pts, rng);
      },
      py::arg("points"), py::arg("seed") = py::none());

  // partitions
  m.def(
      "partition",
      [](const Array& p, double eps, const std::string& algo, std::optional<std::uint64_t> seed) {
        const auto pts = to_points(p);
        if (algo == "det") return ndtv::halving_tree_partition(pts, eps).certificate;
        if (!seed) throw ndtv::DomainError("algorithm '" + algo + "' needs a seed");
        ndtv::Rng rng(*seed);
        ndtv::TverbergCertificate cert;
        if (algo == "random") {
          cert = ndtv::tverberg_partition(pts, eps, rng);
        } else if (algo == "fast") {
          cert = ndtv::tverberg_fast(pts, eps, rng);
        } else {
          throw ndtv::DomainError("unknown algorithm '" + algo + "'");
        }
        cert.trace.seed = *seed;
        return cert;
      },
      py::arg("points"), py::arg("eps"), py::arg("algo") = "random", py::arg("seed") = py::none(),
      "Tverberg partition certificate; algo is 'random', 'fast' or 'det'.");
  m.def(
      "verify",
      [](const Array& p, const ndtv::TverbergCertificate& cert, double tol) {
        const auto report = ndtv::verify_certificate(to_points(p), cert, tol);
        py::list checks;
        for (const auto& c : report.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
        return py::make_tuple(report.passed, checks);
      },
      py::arg("points"), py::arg("certificate"), py::arg("tol") = 1e-7);
  m.def("certificate_from_json", &ndtv::io::certificate_from_json, py::arg("text"));

  // applications
  m.def(
      "centerball",
      [](const Array& p, double eps, std::optional<std::uint64_t> seed) {
        ndtv::Rng rng(seed.value_or(0));
        const auto res = ndtv::centerball(to_points(p), eps, rng, !seed);
        return py::make_tuple(res.ball, res.depth_lower_bound, res.certificate);
      },
      py::arg("points"), py::arg("eps"), py::arg("seed") = py::none(),
      "(ball, depth lower bound, certificate); deterministic backend when seed is None.");
  m.def(
      "halfspace_depth_check_2d",
      [](const Array& p, const ndtv::Ball& ball, std::size_t angles) {
        return ndtv::halfspace_depth_check_2d(to_points(p), ball, angles);
      },
      py::arg("points"), py::arg("ball"), py::arg("angles") = 3600);
  m.def(
      "weak_epsilon_net",
      [](const Array& p, double eps_frac, double eps_rad) {
        const auto net = ndtv::weak_epsilon_net(to_points(p), eps_frac, eps_rad);
        return net.balls;
      },
      py::arg("points"), py::arg("eps_frac"), py::arg("eps_rad"));
  m.def(
      "caratheodory",
      [](const Array& p, const Array& weights, double eps, std::uint64_t seed) {
        const auto pts = to_points(p);
        const auto w = to_vector(weights);
        ndtv::IndexList all(pts.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const auto target = ndtv::combine(pts, all, w);
        ndtv::Rng rng(seed);
        return ndtv::caratheodory_approx(target, pts, w, eps, rng);
      },
      py::arg("points"), py::arg("weights"), py::arg("eps"), py::arg("seed"));

  m.def(
      "generate",
      [](const std::string& kind, std::size_t n, std::size_t d, std::uint64_t seed) {
        return to_array(ndtv::generate_points(ndtv::distribution_from_string(kind), n, d, seed));
      },
      py::arg("kind"), py::arg("n"), py::arg("d"), py::arg("seed"));
}

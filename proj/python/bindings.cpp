#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewtrace/errors.hpp"
#include "skewtrace/harness.hpp"
#include "skewtrace/json_io.hpp"
#include "skewtrace/skew_info.hpp"

namespace py = pybind11;
using namespace skewtrace;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& array) {
  if (array.ndim() != 2 || array.shape(0) != array.shape(1)) {
    throw DimensionMismatch("expected a square 2-D array");
  }
  const auto n = static_cast<std::size_t>(array.shape(0));
  ComplexMatrix m(n);
  std::copy(array.data(), array.data() + n * n, m.data().begin());
  return m;
}

ComplexArray to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  ComplexArray out({n, n});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(to_python(item));
      return std::move(out);
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return std::move(out);
    }
    default:
      throw InvalidArgument("unsupported JSON value");
  }
}

DensityMatrix density(const ComplexArray& rho) { return DensityMatrix::from_matrix(to_matrix(rho)); }
Observable observable(const ComplexArray& h) { return Observable(to_matrix(h)); }

InequalityId inequality_id(const std::string& name) {
  const auto id = parse_inequality_id(name);
  if (!id) throw InvalidArgument("unknown inequality id \"" + name + "\"");
  return *id;
}

CampaignConfig make_config(std::vector<std::size_t> dims, std::size_t trials, std::uint64_t seed,
                           std::optional<std::vector<double>> alphas, std::size_t alpha_draws,
                           double tol, const std::string& rank_policy, const std::string& family,
                           unsigned threads) {
  CampaignConfig c;
  c.dims = std::move(dims);
  c.trials = trials;
  c.seed = seed;
  if (alphas) c.alphas = *alphas;
  c.alpha_draws = alpha_draws;
  c.tol = tol;
  const auto policy = parse_rank_policy(rank_policy);
  if (!policy) throw InvalidArgument("unknown rank policy \"" + rank_policy + "\"");
  c.rank_policy = *policy;
  const auto fam = parse_instance_family(family);
  if (!fam) throw InvalidArgument("unknown instance family \"" + family + "\"");
  c.family = *fam;
  c.threads = threads;
  return c;
}

#define CAMPAIGN_ARGS                                                                         \
  py::kw_only(), py::arg("dims") = std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8},             \
      py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("alphas") = py::none(),          \
      py::arg("alpha_draws") = 11, py::arg("tol") = kDefaultMarginTol,                        \
      py::arg("rank_policy") = "full-rank", py::arg("family") = "ginibre", py::arg("threads") = 0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew-information quantities and uncertainty-relation checks";

  static py::exception<Error> base(m, "SkewtraceError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<NonFiniteEntry>(m, "NonFiniteEntry", base.ptr());
  py::register_exception<NotHermitian>(m, "NotHermitian", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<NotPSD>(m, "NotPSD", base.ptr());
  py::register_exception<ZeroTrace>(m, "ZeroTrace", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());

  m.def("eigh", [](const ComplexArray& h) {
    const SpectralDecomposition s = eigh(to_matrix(h));
    return py::make_tuple(py::array_t<double>(py::ssize_t(s.eigenvalues.size()), s.eigenvalues.data()),
                          to_array(s.eigenvectors));
  }, py::arg("h"), "Eigenvalues (descending) and unitary eigenvectors of a Hermitian matrix.");

  m.def("density_matrix", [](const ComplexArray& m) { return to_array(density(m).matrix()); },
        py::arg("matrix"), "Validate a PSD matrix and normalise it to unit trace.");
  m.def("random_density", [](std::size_t dim, std::size_t rank, std::uint64_t seed) {
    return to_array(random_density(dim, rank, seed).matrix());
  }, py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("random_observable", [](std::size_t dim, std::uint64_t seed) {
    return to_array(random_observable(dim, seed).matrix());
  }, py::arg("dim"), py::arg("seed"));

  m.def("variance", [](const ComplexArray& rho, const ComplexArray& h) {
    return variance(density(rho), observable(h));
  }, py::arg("rho"), py::arg("h"));

#define QUANTITY(name, fn)                                                    \
  m.def(name, [](const ComplexArray& rho, const ComplexArray& h, double alpha) { \
    return fn(density(rho), observable(h), alpha);                            \
  }, py::arg("rho"), py::arg("h"), py::arg("alpha"))
  QUANTITY("wyd_I", wyd_I);
  QUANTITY("wyd_I_eigensum", wyd_I_eigensum);
  QUANTITY("wyd_J", wyd_J);
  QUANTITY("wyd_U", wyd_U);
  QUANTITY("K_alpha", K_alpha);
  QUANTITY("L_alpha", L_alpha);
  QUANTITY("W_alpha", W_alpha);
#undef QUANTITY

  m.def("compute_all", [](const ComplexArray& rho, const ComplexArray& h, double alpha) {
    return to_python(to_json(compute_all(density(rho), observable(h), alpha)));
  }, py::arg("rho"), py::arg("h"), py::arg("alpha"));

  m.def("check", [](const ComplexArray& rho_in, const ComplexArray& a, const ComplexArray& b,
                    double alpha, double tol, std::optional<std::string> only) {
    const DensityMatrix rho = density(rho_in);
    std::optional<InequalityId> id;
    if (only) id = inequality_id(*only);
    std::vector<InequalityCheck> checks = evaluate_checks(rho, observable(a), observable(b), alpha, tol, id);
    for (InequalityCheck& c : evaluate_spectrum_checks(rho, alpha, tol, id)) checks.push_back(std::move(c));
    py::list out;
    for (const InequalityCheck& c : checks) out.append(to_python(to_json(c)));
    return out;
  }, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("alpha"),
     py::arg("tol") = kDefaultMarginTol, py::arg("only") = py::none());

  m.def("scalar_F", &scalar_F, py::arg("t"), py::arg("alpha"));
  m.def("is_conjecture", [](const std::string& id) { return is_conjecture(inequality_id(id)); },
        py::arg("id"));
  m.def("inequality_ids", [] {
    std::vector<std::string> out;
    for (InequalityId id : kAllInequalityIds) out.emplace_back(to_string(id));
    return out;
  });

  m.def("reproduce_published_instance", [] { return to_python(to_json(reproduce_published_instance())); });

  m.def("run_campaign", [](std::vector<std::size_t> dims, std::size_t trials, std::uint64_t seed,
                           std::optional<std::vector<double>> alphas, std::size_t alpha_draws,
                           double tol, const std::string& rank_policy, const std::string& family,
                           unsigned threads) {
    const CampaignConfig c = make_config(std::move(dims), trials, seed, std::move(alphas),
                                         alpha_draws, tol, rank_policy, family, threads);
    CampaignReport report;
    {
      py::gil_scoped_release release;
      report = run_campaign(c);
    }
    return to_python(to_json(report));
  }, CAMPAIGN_ARGS);

  m.def("search_violations", [](const std::string& id, std::vector<std::size_t> dims,
                                std::size_t trials, std::uint64_t seed,
                                std::optional<std::vector<double>> alphas, std::size_t alpha_draws,
                                double tol, const std::string& rank_policy,
                                const std::string& family, unsigned threads) {
    const CampaignConfig c = make_config(std::move(dims), trials, seed, std::move(alphas),
                                         alpha_draws, tol, rank_policy, family, threads);
    const InequalityId target = inequality_id(id);
    SearchResult result;
    {
      py::gil_scoped_release release;
      result = search_violations(target, c);
    }
    return to_python(to_json(result));
  }, py::arg("id"), CAMPAIGN_ARGS);

  m.def("replay_margin", [](const py::object& record) {
    const std::string text = py::module_::import("json").attr("dumps")(record).cast<std::string>();
    return replay_margin(violation_from_json(json::parse(text)));
  }, py::arg("record"), "Recompute the margin of a violation record dict.");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repgrowth/checks.hpp"
#include "repgrowth/config.hpp"
#include "repgrowth/gaussian.hpp"

namespace py = pybind11;
using namespace repgrowth;

namespace {

py::object big_to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Weight weight_from_seq(const RootDatum& rd, const py::sequence& seq) {
  if (static_cast<int>(py::len(seq)) != rd.rank())
    throw ConfigError("expected " + std::to_string(rd.rank()) + " coordinates for " +
                      rd.type().str());
  Weight w(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) w[i] = seq[i].cast<int32_t>();
  return w;
}

py::tuple weight_to_tuple(const Weight& w) {
  py::tuple t(w.size());
  for (int i = 0; i < w.size(); ++i) t[i] = w[i];
  return t;
}

py::dict character_to_dict(const Character& chi) {
  py::dict d;
  for (const auto& [w, c] : chi.sorted_terms()) d[weight_to_tuple(w)] = big_to_py(c);
  return d;
}

py::dict decomposition_to_dict(const Decomposition& dec) {
  py::dict d;
  for (const auto& [w, m] : dec.mult) d[weight_to_tuple(w)] = big_to_py(m);
  return d;
}

// RepSpec plus lazily computed Gaussian moments.
struct PyRepSpec {
  PyRepSpec(const std::string& group, const std::vector<std::pair<std::vector<int32_t>, int64_t>>& rep)
      : spec(make_spec(group, rep)) {}

  static RepSpec make_spec(const std::string& group,
                           const std::vector<std::pair<std::vector<int32_t>, int64_t>>& rep) {
    auto datum = make_root_datum(CartanType::parse(group));
    std::vector<Summand> summands;
    for (const auto& [hw, mult] : rep) {
      if (static_cast<int>(hw.size()) != datum->rank())
        throw ConfigError("highest weight needs " + std::to_string(datum->rank()) +
                          " coordinates for " + datum->type().str());
      summands.push_back({Weight(hw), mult});
    }
    return RepSpec(std::move(datum), std::move(summands));
  }

  const MomentData& moments() {
    if (!md) md = weight_moments(spec);
    return *md;
  }

  Character power(int n) {
    if (n < 1) throw ConfigError("n must be >= 1");
    const Character chi_v = rep_character(spec);
    Character chi = chi_v;
    for (int k = 2; k <= n; ++k) chi = char_mul(chi, chi_v);
    return chi;
  }

  RepSpec spec;
  std::optional<MomentData> md;
};

const RootDatum& datum_of(const std::string& group, std::shared_ptr<const RootDatum>& keep) {
  keep = make_root_datum(CartanType::parse(group));
  return *keep;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and Gaussian growth of tensor power decompositions";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<DegenerateModelError>(m, "DegenerateModelError", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);

  m.def("group_info", [](const std::string& group) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    py::dict d;
    d["type"] = rd.type().str();
    d["r"] = rd.rank();
    d["rank_ss"] = rd.rank_ss();
    d["rank_torus"] = rd.rank_torus();
    d["u"] = rd.u();
    py::list cartan;
    for (int i = 0; i < rd.rank_ss(); ++i) {
      py::list row;
      for (int j = 0; j < rd.rank_ss(); ++j) row.append(rd.cartan(i, j));
      cartan.append(row);
    }
    d["cartan"] = cartan;
    py::list roots;
    for (const auto& pr : rd.positive_roots()) roots.append(weight_to_tuple(pr.fund));
    d["positive_roots"] = roots;
    d["delta"] = weight_to_tuple(rd.delta());
    return d;
  });

  m.def("weyl_dimension", [](const std::string& group, const py::sequence& hw) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    return big_to_py(weyl_dimension(rd, weight_from_seq(rd, hw)));
  });

  m.def("irreducible_character", [](const std::string& group, const py::sequence& hw) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    return character_to_dict(irreducible_character(rd, weight_from_seq(rd, hw)));
  });

  m.def("simple_reflection", [](const std::string& group, int i, const py::sequence& w) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    return weight_to_tuple(simple_reflection(rd, i, weight_from_seq(rd, w)));
  });

  m.def("to_dominant", [](const std::string& group, const py::sequence& w) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    const DominantResult res = to_dominant(rd, weight_from_seq(rd, w));
    return py::make_tuple(weight_to_tuple(res.weight), res.sign);
  });

  m.def("to_dominant_strict", [](const std::string& group, const py::sequence& w) {
    std::shared_ptr<const RootDatum> keep;
    const RootDatum& rd = datum_of(group, keep);
    const DominantResult res = to_dominant_strict(rd, weight_from_seq(rd, w));
    return py::make_tuple(weight_to_tuple(res.weight), res.sign);
  });

  py::class_<PyRepSpec>(m, "RepSpec")
      .def(py::init<const std::string&, const std::vector<std::pair<std::vector<int32_t>, int64_t>>&>(),
           py::arg("group"), py::arg("rep"))
      .def_property_readonly("group", [](PyRepSpec& s) { return s.spec.datum->type().str(); })
      .def_property_readonly("r", [](PyRepSpec& s) { return s.spec.datum->rank(); })
      .def_property_readonly("u", [](PyRepSpec& s) { return s.spec.datum->u(); })
      .def_property_readonly("dim", [](PyRepSpec& s) { return big_to_py(rep_dimension(s.spec)); })
      .def("character", [](PyRepSpec& s) { return character_to_dict(rep_character(s.spec)); })
      .def("moments", [](PyRepSpec& s) {
        const MomentData& md = s.moments();
        py::dict d;
        py::list mean, cov;
        for (int i = 0; i < md.r; ++i) mean.append(md.mean_d[static_cast<size_t>(i)]);
        for (int i = 0; i < md.r; ++i) {
          py::list row;
          for (int j = 0; j < md.r; ++j) row.append(md.sigma(i, j));
          cov.append(row);
        }
        d["mean"] = mean;
        d["covariance"] = cov;
        d["spanning"] = md.spanning;
        d["covolume"] = md.covolume;
        d["det_sigma"] = md.det_sigma;
        d["base_point"] = weight_to_tuple(md.base_point);
        return d;
      });

  m.def(
      "growth_series",
      [](PyRepSpec& s, int n_max, const std::string& mode, uint64_t memory_budget) {
        GrowthOptions opt;
        if (mode == "exact")
          opt.mode = Mode::exact;
        else if (mode == "normalized")
          opt.mode = Mode::normalized;
        else
          throw ConfigError("mode must be 'exact' or 'normalized'");
        opt.n_max = n_max;
        opt.memory_budget_bytes = memory_budget;
        const GrowthSeries series = growth_series(s.spec, opt);
        py::list rows;
        for (const auto& row : series.rows) {
          py::dict d;
          d["n"] = row.n;
          d["b"] = series.mode == Mode::exact ? big_to_py(row.b_exact) : py::object(py::none());
          d["b_normalized"] = row.b_normalized;
          d["support_size"] = row.support_size;
          rows.append(d);
        }
        return rows;
      },
      py::arg("spec"), py::arg("n_max"), py::arg("mode") = "exact",
      py::arg("memory_budget") = uint64_t{8} << 30);

  m.def("decompose", [](PyRepSpec& s, int n) {
    return decomposition_to_dict(extract_multiplicities(s.power(n)));
  });

  m.def("peel_decompose", [](PyRepSpec& s, int n) {
    return decomposition_to_dict(peel_oracle(s.power(n)));
  });

  m.def("local_clt", [](PyRepSpec& s, int64_t n, const py::sequence& chi) {
    return local_clt_weight_estimate(s.moments(), n, weight_from_seq(*s.spec.datum, chi));
  });

  m.def("approx_a_lambda", [](PyRepSpec& s, int64_t n, const py::sequence& lam) {
    return approx_a_lambda(s.spec, s.moments(), n, weight_from_seq(*s.spec.datum, lam));
  });

  m.def(
      "approx_b_n",
      [](PyRepSpec& s, int64_t n, double truncation) {
        return approx_b_n(s.spec, s.moments(), n, truncation);
      },
      py::arg("spec"), py::arg("n"), py::arg("truncation") = 40.0);

  m.def(
      "fit_exponent",
      [](const std::vector<int>& ns, const std::vector<double>& b_normalized, int n_lo, int n_hi,
         double target) {
        if (ns.size() != b_normalized.size())
          throw ConfigError("n and b_normalized lists must have equal length");
        std::vector<GrowthRow> rows(ns.size());
        for (size_t i = 0; i < ns.size(); ++i) {
          rows[i].n = ns[i];
          rows[i].b_normalized = b_normalized[i];
        }
        const FitResult fit = fit_exponent(rows, n_lo, n_hi, target);
        py::dict d;
        d["r_hat"] = fit.r_hat;
        d["C_hat"] = fit.c_hat;
        d["residual_rms"] = fit.residual_rms;
        d["target"] = fit.target;
        d["window"] = py::make_tuple(fit.n_lo, fit.n_hi);
        return d;
      },
      py::arg("n"), py::arg("b_normalized"), py::arg("n_lo"), py::arg("n_hi"), py::arg("target"));

  m.def(
      "run_checks",
      [](PyRepSpec& s, int n_max, uint64_t seed) {
        const CheckReport report = run_power_checks(s.spec, n_max, seed);
        py::list items;
        for (const auto& item : report.items) {
          py::dict d;
          d["name"] = item.name;
          d["pass"] = item.pass;
          d["witness"] = item.witness;
          items.append(d);
        }
        return items;
      },
      py::arg("spec"), py::arg("n_max"), py::arg("seed") = 0);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}

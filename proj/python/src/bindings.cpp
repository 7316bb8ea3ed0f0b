#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chord/checks.hpp"
#include "chord/evolution.hpp"
#include "chord/freeprob.hpp"
#include "chord/json_io.hpp"
#include "chord/matrix_model.hpp"
#include "chord/oracle.hpp"
#include "chord/recursion.hpp"
#include "chord/specialize.hpp"

namespace py = pybind11;
using namespace chord;

namespace {

SpectrumKind kind_of(const std::string& model) {
  if (model == "point") return SpectrumKind::Point;
  if (model == "length") return SpectrumKind::Length;
  if (model == "vertex") return SpectrumKind::Vertex;
  throw std::invalid_argument("model must be point, length or vertex");
}

Variant variant_of(const std::string& name) {
  if (name == "orientable") return Variant::Orientable;
  if (name == "non-orientable") return Variant::NonOrientable;
  throw std::invalid_argument("variant must be orientable or non-orientable");
}

Spectrum spectrum_of(const std::vector<std::pair<int, int>>& entries) {
  Spectrum s;
  for (const auto& [i, m] : entries) s.bump(i, m);
  return s;
}

py::list spectrum_to_py(const Spectrum& s) {
  py::list out;
  for (const auto& [i, m] : s.entries()) out.append(py::make_tuple(i, m));
  return out;
}

py::list rows_to_py(const std::vector<CountRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["variant"] = r.variant;
    d["model"] = r.model;
    d["g_or_h"] = r.gOrH;
    d["k"] = r.k;
    d["l"] = r.l;
    d["b_spec"] = spectrum_to_py(r.bSpec);
    d["n_or_p_spec"] = spectrum_to_py(r.nOrP);
    d["count"] = r.count.get_str();
    out.append(d);
  }
  return out;
}

std::vector<Rat> rats_of(const std::vector<std::string>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(rat_from_string(v));
  return out;
}

py::list series_to_py(const RatSeries& s) {
  py::list out;
  for (int i = 0; i < s.order(); ++i) out.append(rat_to_string(s.at(i)));
  return out;
}

RatSeries series_of(const std::vector<std::string>& values, int order) {
  RatSeries s(order);
  for (int i = 0; i < order && i < static_cast<int>(values.size()); ++i)
    s.set(i, rat_from_string(values[i]));
  return s;
}

}  // namespace

PYBIND11_MODULE(_chordcount, m) {
  m.doc() = "Exact chord-diagram enumeration with matrix-model and "
            "free-probability cross checks";

  m.def(
      "evolve_table",
      [](const std::string& model, const std::string& variant, int maxK, int maxB,
         long maxW, int oneBackbone) {
        ModelSpec spec;
        spec.kind = kind_of(model);
        spec.variant = variant_of(variant);
        if (spec.kind == SpectrumKind::Point) {
          spec.singleBackboneSize = oneBackbone;
          spec.trunc = {maxK, maxB, oneBackbone > 0 ? oneBackbone : maxW};
        } else {
          spec.trunc = {maxK, maxB, std::max<long>(maxB, 1)};
        }
        EvolutionState state = evolve(spec);
        state.check_integrality();
        return rows_to_py(state_to_rows(state));
      },
      py::arg("model"), py::arg("variant"), py::arg("max_k"),
      py::arg("max_backbones") = 1, py::arg("max_weight") = 8,
      py::arg("one_backbone") = 0);

  m.def(
      "oracle_table",
      [](const std::vector<int>& backbones, int k, const std::string& variant,
         bool connectedOnly) {
        TypeHistogram hist =
            count_types(backbones, k, variant_of(variant), connectedOnly);
        py::list out;
        for (const auto& [key, cnt] : hist) {
          py::dict d;
          d["g_or_h"] = key.gOrH;
          d["n_spec"] = spectrum_to_py(key.n);
          if (key.hasP)
            d["p_spec"] = spectrum_to_py(key.p);
          else
            d["p_spec"] = py::none();
          d["count"] = cnt.get_str();
          out.append(d);
        }
        return out;
      },
      py::arg("backbones"), py::arg("k"), py::arg("variant") = "orientable",
      py::arg("connected_only") = true);

  m.def(
      "one_backbone_count",
      [](int g, int k, const std::vector<std::pair<int, int>>& n) {
        OneBackboneMemo memo;
        return one_backbone_count(g, k, spectrum_of(n), memo).get_str();
      },
      py::arg("g"), py::arg("k"), py::arg("n_spec"));

  m.def(
      "validate_type",
      [](const std::string& variant, int gOrH, int k, long l,
         const std::vector<std::pair<int, int>>& b,
         const std::vector<std::pair<int, int>>& n,
         const std::optional<std::vector<std::pair<int, int>>>& p) {
        DiagramType t;
        t.orient = variant_of(variant) == Variant::NonOrientable
                       ? Orientability::NonOrientableAllowed
                       : Orientability::Orientable;
        t.genusOrH = gOrH;
        t.k = k;
        t.l = l;
        t.bSpec = spectrum_of(b);
        t.nSpec = spectrum_of(n);
        if (p) t.pSpec = spectrum_of(*p);
        return validate_type(t);
      },
      py::arg("variant"), py::arg("g_or_h"), py::arg("k"), py::arg("l"),
      py::arg("b_spec"), py::arg("n_spec"), py::arg("p_spec") = py::none());

  m.def(
      "exact_moment",
      [](int mm, const std::string& variant) {
        return exact_moment(mm, variant_of(variant)).to_string();
      },
      py::arg("m"), py::arg("variant") = "orientable");

  m.def(
      "sample_trace_powers",
      [](const std::string& ensemble, int N, int p, double s, int mm, long samples,
         std::uint64_t seed) {
        EnsembleConfig cfg;
        cfg.ensemble = ensemble == "real" ? Ensemble::RealSymmetricOrthogonal
                                          : Ensemble::HermitianUnitary;
        cfg.N = N;
        cfg.p = p;
        cfg.s = s;
        cfg.samples = samples;
        cfg.seed = seed;
        MCEstimate est = sample_trace_powers(cfg, mm);
        return py::make_tuple(est.mean, est.stderr_);
      },
      py::arg("ensemble"), py::arg("N"), py::arg("p"), py::arg("s"), py::arg("m"),
      py::arg("samples") = 10000, py::arg("seed") = 1);

  m.def(
      "r_transform",
      [](const std::vector<std::string>& moments, int order) {
        return series_to_py(
            r_transform(series_of(moments, static_cast<int>(moments.size())), order));
      },
      py::arg("moments"), py::arg("order"));

  m.def(
      "free_add",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         int order) {
        return series_to_py(
            free_add(series_of(a, order), series_of(b, order), order));
      },
      py::arg("a"), py::arg("b"), py::arg("order"));

  m.def(
      "free_mul",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         int order) {
        return series_to_py(
            free_mul(series_of(a, order), series_of(b, order), order));
      },
      py::arg("a"), py::arg("b"), py::arg("order"));

  m.def(
      "genus0_length_gf",
      [](const std::vector<std::string>& weights, int order) {
        return series_to_py(genus0_length_gf(rats_of(weights), order));
      },
      py::arg("weights"), py::arg("order"));

  m.def("semicircle_moments",
        [](int order) { return series_to_py(semicircle_moments(order)); },
        py::arg("order"));

  m.def("marchenko_pastur_moments",
        [](int order) { return series_to_py(marchenko_pastur_moments(order)); },
        py::arg("order"));

  m.def(
      "run_checks",
      [](const std::string& suite, long samples, std::uint64_t seed) {
        SuiteOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        py::list out;
        for (const auto& r : run_suite(suite, opt)) {
          py::dict d;
          d["criterion"] = r.criterion;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("samples") = 200000, py::arg("seed") = 7);
}

// JSON-string bindings; the Python package decodes them into dicts.

#include "rectpack/container_search.hpp"
#include "rectpack/gap.hpp"
#include "rectpack/greedy.hpp"
#include "rectpack/instance_lab.hpp"
#include "rectpack/json_io.hpp"
#include "rectpack/oracle.hpp"
#include "rectpack/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rectpack;

namespace {

Instance parse_instance(const std::string& s) { return instance_from_json(Json::parse(s)); }

Packing parse_packing(const std::string& s) { return packing_from_json(Json::parse(s), ""); }

std::string validate(const std::string& packing, bool containers, bool lcstar, const std::string& eps) {
  const Json j = Json::parse(packing);
  const Packing p = packing_from_json(j, "");
  const Rational e = parse_rational(eps);
  std::vector<Container> cs;
  if (j.contains("containers")) cs = containers_from_json(j.at("containers"));
  if (lcstar) {
    const LShape L = j.contains("lshape") ? lshape_from_json(j.at("lshape")) : LShape{};
    return to_json(validate_lc_packing(p, L, cs, e)).dump();
  }
  if (containers) return to_json(validate_container_packing(p, cs, e)).dump();
  return to_json(validate_packing(p)).dump();
}

std::string solve(const std::string& instance, const std::string& algo, int c, const std::string& eps,
                  std::size_t budget) {
  const Instance inst = parse_instance(instance);
  const Rational e = parse_rational(eps);
  const Container all{0, 0, inst.N, inst.N, ContainerLabel::Area};
  if (algo == "container") {
    ContainerPacking r = solve_container(inst, c, e, budget);
    Json j = to_json(r.packing);
    j["containers"] = containers_to_json(r.containers);
    return j.dump();
  }
  if (algo == "lc_star") {
    LcPacking r = solve_lc_star(inst, c, e, budget);
    Json j = to_json(r.packing);
    j["containers"] = containers_to_json(r.containers);
    j["lshape"] = to_json(r.lshape);
    return j.dump();
  }
  if (algo == "nfdh") return to_json(nfdh(all, inst.items), inst).dump();
  if (algo == "steinberg") return to_json(steinberg(all, inst.items), inst).dump();
  if (algo == "oracle") {
    OracleResult r = solve_exact(inst);
    Json j = to_json(r.packing);
    j["certified"] = r.certified;
    return j.dump();
  }
  throw InvalidArgument("unknown algorithm '" + algo + "'");
}

std::string gap(const std::string& instance) {
  return to_json(solve_gap(gap_instance_from_json(Json::parse(instance)))).dump();
}

std::string generate_random(std::size_t n, i64 N, std::uint64_t seed, const std::string& profile, bool rotation) {
  RandomSpec spec;
  spec.n = n;
  spec.N = N;
  spec.seed = seed;
  spec.profile = parse_profile(profile);
  spec.rotation_allowed = rotation;
  return to_json(gen_random(spec)).dump();
}

std::string generate_lowerbound(int n) {
  const Instance inst = gen_lowerbound_family(n);
  return to_json(construct_lowerbound_packing(inst)).dump();
}

std::string generate_yes_hardness(int k, i64 max_value, std::size_t distractors, std::uint64_t seed) {
  const YesInstance y = gen_yes_partsum(k, max_value, distractors, seed);
  Json j = to_json(construct_yes_packing(y.ps, y.split));
  j["partsum"] = to_json(y.ps);
  j["split"] = to_json(y.split);
  return j.dump();
}

std::string extract(const std::string& packing, int k) { return to_json(extract_partition(parse_packing(packing), k)).dump(); }

std::string render(const std::string& packing, int size) {
  const Json j = Json::parse(packing);
  RenderOptions opts;
  opts.size = size;
  if (j.contains("containers")) opts.containers = containers_from_json(j.at("containers"));
  if (j.contains("lshape")) opts.lshape = lshape_from_json(j.at("lshape"));
  return render_svg(packing_from_json(j, ""), opts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-dimensional geometric knapsack core";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<StateBudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotExtractable>(m, "NotExtractable", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);

  m.def("validate", &validate, py::arg("packing"), py::arg("containers") = false, py::arg("lcstar") = false,
        py::arg("eps") = "1/4");
  m.def("solve", &solve, py::arg("instance"), py::arg("algo") = "container", py::arg("c") = 2,
        py::arg("eps") = "1/4", py::arg("budget") = 2000, py::call_guard<py::gil_scoped_release>());
  m.def("solve_gap", &gap, py::arg("instance"), py::call_guard<py::gil_scoped_release>());
  m.def("generate_random", &generate_random, py::arg("n"), py::arg("N"), py::arg("seed") = 0,
        py::arg("profile") = "uniform", py::arg("rotation") = false);
  m.def("generate_lowerbound", &generate_lowerbound, py::arg("n"));
  m.def("generate_yes_hardness", &generate_yes_hardness, py::arg("k") = 9, py::arg("max_value") = 1000,
        py::arg("distractors") = 3, py::arg("seed") = 0);
  m.def("extract_partition", &extract, py::arg("packing"), py::arg("k") = 0);
  m.def("render_svg", &render, py::arg("packing"), py::arg("size") = 600);
}

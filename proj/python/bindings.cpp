#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fvect/characters.hpp"
#include "fvect/cli.hpp"
#include "fvect/dieudonne.hpp"
#include "fvect/hopf_oracle.hpp"
#include "fvect/json_io.hpp"
#include "fvect/od_modules.hpp"
#include "fvect/raynaud.hpp"

namespace py = pybind11;
using namespace fvect;
using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string(what) + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(); }

std::string exp_f_py(const std::string& charsum) {
  return dump(charsum_to_json(exp_F(charsum_from_json(parse(charsum, "charsum")))));
}

std::string cha_py(const std::string& module) {
  return dump(charsum_to_json(cha(module_from_json(parse(module, "module")))));
}

std::string big_char_py(const std::string& module) {
  return dump(charsum_to_json(big_char(module_from_json(parse(module, "module")))));
}

std::string dual_py(const std::string& module) {
  return dump(module_to_json(dual(module_from_json(parse(module, "module")))));
}

std::string direct_sum_py(const std::string& a, const std::string& b) {
  return dump(module_to_json(
      direct_sum(module_from_json(parse(a, "module")), module_from_json(parse(b, "module")))));
}

std::string oracle_compare_py(const std::string& module) {
  GradedModule M = module_from_json(parse(module, "module"));
  CharSum crystal = big_char(M);
  AdditiveHopfAlgebra A = from_additive_module(M);
  CharSum monomial = isotypic_dims_monomial(A);
  CharSum projector = isotypic_dims_projector(A);
  bool ok = crystal == monomial && monomial == projector;
  json j;
  j["crystal"] = charsum_to_json(crystal);
  j["monomial"] = charsum_to_json(monomial);
  j["projector"] = charsum_to_json(projector);
  j["verdict"] = ok ? "PASS" : "FAIL";
  return dump(j);
}

std::string raynaud_iso_py(const std::string& ring, const std::string& left,
                           const std::string& right, i64 gate) {
  GaloisRing R = ring_from_json(parse(ring, "ring"));
  RaynaudParams P = raynaud_from_json(R, parse(left, "left"));
  RaynaudParams Q = raynaud_from_json(R, parse(right, "right"));
  return dump(witness_to_json(is_isomorphic(P, Q, gate)));
}

std::string raynaud_check_py(const std::string& charsum) {
  CharSum f = charsum_from_json(parse(charsum, "charsum"));
  json j;
  j["is_raynaud"] = is_raynaud_from_crystal(f);
  j["primitive_coefficients"] = raynaud_from_primitive_coefficients(f);
  return dump(j);
}

std::string od_check_py(const std::string& module, std::optional<i64> twist_shift) {
  ODModule M = od_from_json(parse(module, "module"), twist_shift);
  bool divcar = divcar_check(M);
  bool lemma = lemma_identity_check(M);
  auto [direct, criterion] = theorem_check(M);
  json j;
  j["h"] = od_height(M);
  j["lie"] = coeffs_to_json(lie_char(M));
  j["torsion1"] = coeffs_to_json(torsion_char(M, 1));
  j["divcar"] = divcar;
  j["lemma"] = lemma;
  j["theorem_direct"] = direct;
  j["theorem_criterion"] = criterion;
  return dump(j);
}

std::string special_drinfeld_py(i64 p) {
  return dump(od_to_json(make_special_drinfeld(p)));
}

std::string random_od_py(u64 seed, i64 p, i64 f, i64 d, i64 m, i64 height) {
  ODGenConfig cfg;
  cfg.p = p;
  cfg.f = f;
  cfg.d = d;
  cfg.m = m;
  cfg.h = height;
  return dump(od_to_json(random_od(seed, cfg)));
}

py::tuple run_cli_py(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character computations for graded modules over finite fields. "
            "Inputs and outputs are JSON strings in the same formats the CLI uses.";

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<size_gate_error>(m, "SizeGateError", PyExc_RuntimeError);

  m.def("exp_f", &exp_f_py, py::arg("charsum"),
        "Exponential of an effective character sum; returns a character sum.");
  m.def("cha", &cha_py, py::arg("module"),
        "Algebra character of a graded module.");
  m.def("big_char", &big_char_py, py::arg("module"),
        "Group character of a graded module.");
  m.def("dual", &dual_py, py::arg("module"),
        "Dual module, with F and V exchanged.");
  m.def("direct_sum", &direct_sum_py, py::arg("a"), py::arg("b"),
        "Direct sum of two graded modules over the same field.");
  m.def("oracle_compare", &oracle_compare_py, py::arg("module"),
        "Compare the crystal character of a V = 0 module with both "
        "algebra-side counts.");
  m.def("raynaud_iso", &raynaud_iso_py, py::arg("ring"), py::arg("left"),
        py::arg("right"), py::arg("gate") = i64(10'000'000),
        "Decide isomorphism of two presentations over a ring; returns a "
        "witness with the scalars when one exists.");
  m.def("raynaud_check", &raynaud_check_py, py::arg("charsum"),
        "Test a group character for the one-per-orbit shape.");
  m.def("od_check", &od_check_py, py::arg("module"),
        py::arg("twist_shift") = std::nullopt,
        "Characters and structure verdicts of a module with Pi.");
  m.def("special_drinfeld", &special_drinfeld_py, py::arg("p"),
        "The height one special module at p with f = 1, d = 2.");
  m.def("random_od", &random_od_py, py::arg("seed"), py::arg("p") = 2,
        py::arg("f") = 1, py::arg("d") = 2, py::arg("m") = 2,
        py::arg("height") = 1,
        "Deterministic pseudorandom module with Pi; same seed, same module.");
  m.def("run_cli", &run_cli_py, py::arg("args"),
        "Run the command line interface in process; returns "
        "(exit_code, stdout, stderr).");
}

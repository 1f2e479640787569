// Copyright 2026 The indist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "indist/audit.hpp"
#include "indist/construction.hpp"
#include "indist/errors.hpp"
#include "indist/exact_dist.hpp"
#include "indist/games.hpp"
#include "indist/serialize.hpp"
#include "indist/subsets.hpp"

namespace py = pybind11;
using namespace indist;

namespace {

py::int_ pyint(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(pyint(q.get_num()), pyint(q.get_den()));
}

// Accepts int, Fraction, or a "p/q" / decimal string.
Rational rational_arg(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return parse_rational(py::str(h).cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return make_rational(parse_bigint(py::str(h.attr("numerator")).cast<std::string>()),
                         parse_bigint(py::str(h.attr("denominator")).cast<std::string>()));
  }
  throw DomainError("expected an int, a Fraction or a rational string");
}

BigInt bigint_arg(const py::handle& h) { return parse_bigint(py::str(h).cast<std::string>()); }

Tuple tuple_arg(const py::handle& h) {
  Tuple t;
  if (py::isinstance<py::int_>(h)) return {bigint_arg(h)};
  for (const auto& e : h) t.push_back(bigint_arg(e));
  return t;
}

py::tuple tuple_out(const Tuple& t) {
  py::tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = pyint(t[i]);
  return out;
}

py::object json_out(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ExactDist dist_from_atoms(const std::string& kind, std::size_t arity, const py::iterable& atoms) {
  std::vector<std::pair<Tuple, Rational>> v;
  for (const auto& a : atoms) {
    auto pair = a.cast<py::tuple>();
    v.emplace_back(tuple_arg(pair[0]), rational_arg(pair[1]));
  }
  return ExactDist(parse_value_kind(kind), arity, std::move(v));
}

}  // namespace

PYBIND11_MODULE(_indist, m) {
  m.doc() = "Exact distributions with indistinguishable subsets";

  py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", m.attr("Error"));
  py::register_exception<CapacityError>(m, "CapacityError", m.attr("Error"));
  py::register_exception<NormalizationError>(m, "NormalizationError", m.attr("Error"));
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));

  py::class_<ExactDist>(m, "ExactDist")
      .def(py::init(&dist_from_atoms), py::arg("kind"), py::arg("arity"), py::arg("atoms"))
      .def_property_readonly("kind", [](const ExactDist& d) { return to_string(d.kind()); })
      .def_property_readonly("arity", &ExactDist::arity)
      .def("__len__", &ExactDist::size)
      .def("atoms",
           [](const ExactDist& d) {
             py::list out;
             for (const auto& [x, p] : d) out.append(py::make_tuple(tuple_out(x), fraction(p)));
             return out;
           })
      .def("prob", [](const ExactDist& d, const py::object& x) { return fraction(d.prob(tuple_arg(x))); })
      .def("max_value", [](const ExactDist& d) { return pyint(d.max_value()); })
      .def("to_jsonl",
           [](const ExactDist& d) {
             std::ostringstream s;
             write_dist(s, d);
             return s.str();
           })
      .def_static("from_jsonl",
                  [](const std::string& text) {
                    std::istringstream s(text);
                    return read_dist(s);
                  })
      .def(py::self == py::self);

  m.def("uniform_int", [](const py::object& lo, const py::object& hi) {
    return uniform_int(bigint_arg(lo), bigint_arg(hi));
  });
  m.def("tvd", [](const ExactDist& a, const ExactDist& b) { return fraction(tvd(a, b)); });
  m.def("convolve", &convolve);
  m.def("project", [](const ExactDist& d, const SubsetIndex& s) { return project(d, s); });
  m.def("drop_index", &drop_index);

  auto witness = [](const SubsetWitness& w) { return py::make_tuple(fraction(w.tvd), w.first, w.second); };
  m.def("neighboring_nm1_max_tvd", [witness](const ExactDist& d, std::size_t workers) {
    SubsetOptions o;
    o.workers = workers;
    return witness(neighboring_nm1_max_tvd(d, o));
  }, py::arg("d"), py::arg("workers") = 1);
  m.def("all_nm1_max_tvd", [witness](const ExactDist& d, std::size_t workers) {
    SubsetOptions o;
    o.workers = workers;
    return witness(all_nm1_max_tvd(d, o));
  }, py::arg("d"), py::arg("workers") = 1);

  m.def("build_n2", [](const py::object& eps) { return build_n2(rational_arg(eps)); });
  m.def("exact_joint", [](int n, const py::object& eps, std::uint64_t cap) {
    ConstructionParams p;
    p.n = n;
    p.eps = rational_arg(eps);
    p.enumeration_cap = cap;
    py::gil_scoped_release nogil;
    return exact_joint(p);
  }, py::arg("n"), py::arg("eps"), py::arg("cap") = 10'000'000);
  m.def("certificate", [](int n, const py::object& eps) {
    return json_out(to_json(certificate(n, rational_arg(eps))));
  });
  m.def("sample_tuple", [](int n, const py::object& eps, std::uint64_t seed, std::uint64_t index) {
    ConstructionParams p;
    p.n = n;
    p.eps = rational_arg(eps);
    p.seed = seed;
    p.mode = ConstructionMode::kSample;
    return json_out(to_json(sample_tuple(p, index)));
  });

  m.def("tower_bound", [](int n, const py::object& eps) {
    return json_out(to_json(tower_bound(n, rational_arg(eps))));
  });
  m.def("compare_with_tower", [](const py::object& v, int height, const py::object& top) {
    return compare_with_tower(bigint_arg(v), height, rational_arg(top));
  });
  m.def("classify_gap_case", [](const py::object& a, const py::object& b, const py::object& c,
                                const py::object& d) {
    return std::string(to_string(
        classify_gap_case(rational_arg(a), rational_arg(b), rational_arg(c), rational_arg(d))));
  });
  m.def("check_gap_monotonicity", [](const py::iterable& xs) {
    std::vector<Rational> v;
    for (const auto& x : xs) v.push_back(rational_arg(x));
    return json_out(to_json(check_gap_monotonicity(v)));
  });
  m.def("audit_distribution", [](const ExactDist& d) { return json_out(to_json(audit_distribution(d))); });
  m.def("audit_injected", [](const py::object& eps_star, int n, const py::object& max_value) {
    return json_out(to_json(audit_injected(rational_arg(eps_star), n, bigint_arg(max_value))));
  });

  m.def("solve_game", [](int game, int n, int horizon, const py::object& tol) {
    SolveOptions o;
    o.tolerance = rational_arg(tol);
    ValueReport r;
    {
      py::gil_scoped_release nogil;
      r = game == 1 ? solve_game1(n, horizon, o) : solve_game2(n, horizon, o);
    }
    return json_out(to_json(r));
  }, py::arg("game"), py::arg("n"), py::arg("horizon"), py::arg("tol") = "1/1000");
  m.def("play_betting_game", [](const ExactDist& a, const ExactDist& b, std::uint64_t trials,
                                std::uint64_t seed, std::size_t workers) {
    MonteCarloEstimate e;
    {
      py::gil_scoped_release nogil;
      e = play_betting_game(a, b, optimal_guesser(a, b), trials, seed, workers);
    }
    return py::make_tuple(e.mean, e.std_error);
  }, py::arg("a"), py::arg("b"), py::arg("trials"), py::arg("seed") = 0, py::arg("workers") = 1);
}

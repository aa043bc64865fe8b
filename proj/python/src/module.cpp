// Copyright 2026 The nilsem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"
#include "nilsem/io.hpp"
#include "nilsem/partition.hpp"
#include "nilsem/search.hpp"
#include "nilsem/semigroup.hpp"
#include "nilsem/treeops.hpp"

namespace py = pybind11;
using namespace nilsem;

// Python sees 1-based image tuples throughout.
using Tuple = std::vector<Point>;

namespace {

  Transformation from_tuple(Tuple const& t) {
    return Transformation::from_one_based(std::span<Point const>(t));
  }

  py::tuple to_tuple(Transformation const& f) {
    py::tuple out(f.degree());
    for (std::size_t x = 0; x < f.degree(); ++x) {
      out[x] = f[x] + 1;
    }
    return out;
  }

  std::vector<Transformation> from_tuples(std::vector<Tuple> const& maps) {
    std::vector<Transformation> out;
    for (auto const& t : maps) {
      out.push_back(from_tuple(t));
    }
    return out;
  }

  py::list elements(Semigroup const& s) {
    py::list out;
    for (auto const& f : s) {
      out.append(to_tuple(f));
    }
    return out;
  }

  std::vector<Point> to_zero_based(std::vector<Point> pts) {
    for (auto& x : pts) {
      if (x == 0) {
        throw RangeError("points are numbered from 1");
      }
      --x;
    }
    return pts;
  }

  std::vector<Point> to_one_based(std::vector<Point> pts) {
    for (auto& x : pts) {
      ++x;
    }
    return pts;
  }

  py::int_ big(BigInt const& v) {
    return py::int_(py::str(v.str()));
  }

  py::dict report_dict(SearchReport const& r) {
    py::dict d;
    d["n"]                        = r.n;
    d["mode"]                     = to_string(r.mode);
    d["certified"]                = r.certified;
    d["max_size"]                 = r.max_size;
    d["max_equals_xi"]            = r.max_equals_xi;
    d["maximizers_null"]          = r.maximizers_null;
    d["maximizers_characterized"] = r.maximizers_characterized;
    d["maximizer_t"]              = r.maximizer_t;
    d["xi_bound_violations"]      = r.xi_bound_violations;
    d["nodes_explored"]           = r.nodes_explored;
    d["elapsed_seconds"]          = r.elapsed_seconds;
    py::list maximizers;
    for (auto const& m : r.maximizers) {
      maximizers.append(py::cast(m));
    }
    d["maximizers"] = maximizers;
    return d;
  }

}  // namespace

PYBIND11_MODULE(_nilsem, m) {
  m.doc() = "Commutative nilpotent transformation semigroups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def(
      "compose",
      [](Tuple const& f, Tuple const& g) { return to_tuple(compose(from_tuple(f), from_tuple(g))); },
      py::arg("f"), py::arg("g"), "Apply f, then g.");
  m.def(
      "power", [](Tuple const& f, std::size_t k) { return to_tuple(power(from_tuple(f), k)); },
      py::arg("f"), py::arg("m"));
  m.def("rank", [](Tuple const& f) { return from_tuple(f).rank(); }, py::arg("f"));

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init([](std::size_t n, std::vector<Tuple> const& maps) {
             return Semigroup::from_elements(n, from_tuples(maps));
           }),
           py::arg("n"), py::arg("maps"))
      .def_property_readonly("n", &Semigroup::degree)
      .def("__len__", &Semigroup::size)
      .def("elements", &elements)
      .def("__contains__",
           [](Semigroup const& s, Tuple const& f) { return s.contains(from_tuple(f)); })
      .def("__eq__", [](Semigroup const& a, Semigroup const& b) { return a == b; })
      .def("zero",
           [](Semigroup const& s) -> py::object {
             auto z = zero_of(s);
             return z ? py::object(to_tuple(*z)) : py::object(py::none());
           })
      .def("is_commutative", [](Semigroup const& s) { return is_commutative(s); })
      .def("nilpotency_index", [](Semigroup const& s) { return nilpotency_index(s); })
      .def("is_nilpotent", [](Semigroup const& s) { return is_nilpotent(s); })
      .def("is_null", [](Semigroup const& s) { return is_null(s); })
      .def("structure_ok", [](Semigroup const& s) { return check_structure(s).ok(); })
      .def("to_text", [](Semigroup const& s) { return format_semigroup(s, FileFormat::text); })
      .def("to_json", [](Semigroup const& s) { return format_semigroup(s, FileFormat::json); })
      .def("__repr__", [](Semigroup const& s) {
        return "<Semigroup n=" + std::to_string(s.degree()) + " size=" + std::to_string(s.size())
               + ">";
      });

  m.def(
      "closure",
      [](std::size_t n, std::vector<Tuple> const& gens) {
        return Semigroup::closure(n, from_tuples(gens));
      },
      py::arg("n"), py::arg("generators"));
  m.def(
      "parse",
      [](std::string const& text) {
        auto maps = parse_maps(text);
        return Semigroup::from_elements(maps.n, std::move(maps.maps));
      },
      py::arg("text"), "Parse a closed semigroup from text or JSON.");

  m.def("xi", [](std::size_t n) { return big(xi(n)); }, py::arg("n"));
  m.def("alpha", &alpha, py::arg("n"));
  m.def("check_xi_inequalities", &check_xi_inequalities, py::arg("max_n"));
  m.def(
      "max_null",
      [](std::size_t n, std::size_t t, std::vector<Point> const& block, Point base) {
        auto const b = to_zero_based(block);
        return max_null(n, t, b, to_zero_based({base})[0]);
      },
      py::arg("n"), py::arg("t"), py::arg("block"), py::arg("base"));

  m.def(
      "s_partition",
      [](Semigroup const& s) {
        auto const p = s_partition(s);
        py::list   blocks;
        for (auto const& b : p.blocks) {
          blocks.append(to_one_based(b));
        }
        return py::make_tuple(blocks, to_one_based(p.ordering));
      },
      py::arg("s"), "Blocks A0, A1, ... and the point ordering, 1-based.");
  m.def(
      "words",
      [](Semigroup const& s) {
        auto const               p = s_partition(s);
        std::vector<std::string> out;
        for (auto const& f : s) {
          out.push_back(word_string(ordered_word(s, p, f), s.degree()));
        }
        return out;
      },
      py::arg("s"));
  m.def(
      "tree_levels",
      [](Semigroup const& s) {
        auto const  tree = build_tree(s);
        std::string out;
        for (auto k : tree.levels()) {
          out += k == LevelKind::linear ? 'L' : 'B';
        }
        return out;
      },
      py::arg("s"));
  m.def("branching_lemmas_ok", [](Semigroup const& s) {
    return check_branching_lemmas(build_tree(s)).ok();
  });
  m.def("nullify", &nullify, py::arg("s"));
  m.def(
      "export_dot",
      [](Semigroup const& s, std::string const& stage) {
        auto st = TreeStage::original;
        if (stage == "stripped") {
          st = TreeStage::stripped;
        } else if (stage == "relabelled") {
          st = TreeStage::relabelled;
        } else if (stage != "original") {
          throw ArgumentError("stage must be original, stripped or relabelled");
        }
        return export_dot(build_tree(s), st);
      },
      py::arg("s"), py::arg("stage") = "original");

  m.def(
      "certify_max",
      [](std::size_t n, std::string const& mode, double budget_seconds, unsigned threads) {
        SearchOptions o;
        if (mode == "all") {
          o.mode = SearchMode::all_zeros;
        } else if (mode != "rank1") {
          throw ArgumentError("mode must be rank1 or all");
        }
        o.budget  = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1e3));
        o.threads = threads;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = certify_max(n, o);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("mode") = "rank1", py::arg("budget_seconds") = 60.0,
      py::arg("threads") = 1);
  m.def("random_cn", &random_cn, py::arg("n"), py::arg("seed"), py::arg("size") = 16);
}

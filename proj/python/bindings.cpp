#include "tricluster/boundary.hpp"
#include "tricluster/braid.hpp"
#include "tricluster/cli.hpp"
#include "tricluster/higgs.hpp"
#include "tricluster/ice.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tc;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

Quiver make_quiver(const std::string& type, const std::string& orient) {
    JobSpec j;
    j.type = type;
    j.orient = orient;
    return job_quiver(j);
}

BraidWord word(const DynkinType& t, const std::vector<int>& letters) {
    BraidWord w;
    for (int x : letters) {
        if (x == 0 || std::abs(x) > t.rank) throw ParseError("braid letter out of range: " + std::to_string(x));
        w.push_back({std::abs(x), x > 0 ? 1 : -1});
    }
    return w;
}

std::vector<int> letters(const BraidWord& w) {
    std::vector<int> out;
    for (const auto& b : w) out.push_back(b.sign * b.gen);
    return out;
}

DynkinType braid_type(const std::string& type) {
    DynkinType t = parse_type(type);
    check_braid_rank(t);
    return t;
}

std::map<int, int> graded(const GradedDim& g) { return g.entries; }

}

PYBIND11_MODULE(tricluster, m) {
    m.doc() = "Dynkin quiver combinatorics: AR quivers, mpr, ice quivers, boundary homs, Higgs objects, braids";

    static py::exception<GuardError> guard(m, "GuardError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GuardError& e) {
            py::set_error(guard, e.what());
        } catch (const ParseError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("run", [](const std::string& command, const std::string& type, py::object options, const std::string& format,
                    const std::string& orient) {
              JobSpec j;
              j.command = command;
              j.type = type;
              j.orient = orient;
              j.format = format;
              if (!options.is_none()) j.options = from_py(options);
              return execute(j);
          },
          py::arg("command"), py::arg("type"), py::arg("options") = py::none(), py::arg("format") = "text",
          py::arg("orient") = "", "the CLI artifact for one job, as a string");
    m.def("cache_key", [](const std::string& command, const std::string& type, py::object options, const std::string& format,
                          const std::string& orient) {
              JobSpec j;
              j.command = command;
              j.type = type;
              j.orient = orient;
              j.format = format;
              if (!options.is_none()) j.options = from_py(options);
              return cache_key(j);
          },
          py::arg("command"), py::arg("type"), py::arg("options") = py::none(), py::arg("format") = "text",
          py::arg("orient") = "");

    m.def("quiver", [](const std::string& type, const std::string& orient) { return to_py(quiver_to_json(make_quiver(type, orient))); },
          py::arg("type"), py::arg("orient") = "");
    m.def("coxeter_number", [](const std::string& type) { return coxeter_number(parse_type(type)); });
    m.def("ar_quiver", [](const std::string& type, const std::string& orient) {
              return to_py(ar_to_json(knit_ar_quiver(make_quiver(type, orient))));
          },
          py::arg("type"), py::arg("orient") = "");
    m.def("mpr_ar_quiver", [](const std::string& type, const std::string& orient) {
              return to_py(mpr_to_json(mpr_ar_quiver(make_quiver(type, orient))));
          },
          py::arg("type"), py::arg("orient") = "");
    m.def("ice_quiver", [](const std::string& type, const std::string& orient) {
              return to_py(Json::parse(export_ice(build_ice_quiver(make_quiver(type, orient)), "json")));
          },
          py::arg("type"), py::arg("orient") = "");
    m.def("f_power", [](const std::string& type, const std::string& label, int power, const std::string& orient) {
              return f_power_label(make_quiver(type, orient), parse_mpr_label(label), power).str();
          },
          py::arg("type"), py::arg("label"), py::arg("power") = 1, py::arg("orient") = "");

    m.def("gamma_hom", [](const std::string& type, const std::string& x, const std::string& y, int floor, const std::string& orient) {
              return graded(gamma_hom(make_quiver(type, orient), parse_mpr_label(x), parse_mpr_label(y), floor));
          },
          py::arg("type"), py::arg("x"), py::arg("y"), py::arg("floor") = kDefaultFloor, py::arg("orient") = "",
          "degree -> dimension, truncated below at floor");
    m.def("hom_table", [](const std::string& type, int floor, const std::string& orient) {
              return to_py(hom_table_to_json(hom_table(make_quiver(type, orient), floor)));
          },
          py::arg("type"), py::arg("floor") = kDefaultFloor, py::arg("orient") = "");
    m.def("thm1_hom", [](const std::string& type, int i, int a, int j, int b, int floor) {
              Quiver q = default_quiver(parse_type(type));
              return graded(thm1_hom(q, i, {projective_stalk(q, a)}, j, {projective_stalk(q, b)}, floor));
          },
          py::arg("type"), py::arg("i"), py::arg("a"), py::arg("j"), py::arg("b"), py::arg("floor") = kDefaultFloor);

    m.def("preprojective_dim", [](const std::string& type) { return preprojective_algebra(default_quiver(parse_type(type))).dim; });
    m.def("tq_algebra", [](const std::string& type, bool twisted) {
              TQAlgebra a = tq_algebra(default_quiver(parse_type(type)), twisted);
              py::dict d;
              d["lambda_dim"] = a.lambda_dim;
              d["total_dim"] = a.total_dim;
              d["nakayama_perm"] = a.nakayama_perm;
              d["selfinjective"] = a.selfinjective;
              d["nakayama_order"] = a.nakayama_order;
              d["automorphism_order"] = a.automorphism_order;
              return d;
          },
          py::arg("type"), py::arg("twisted") = true);
    m.def("phi_image", [](const std::string& type, const std::string& label) {
              Quiver q = default_quiver(parse_type(type));
              return to_py(higgs_to_json(q, phi_image(q, parse_mpr_label(label))));
          });
    m.def("omega_orbit", [](const std::string& type, const std::string& label) {
              Quiver q = default_quiver(parse_type(type));
              MprLabel x = parse_mpr_label(label);
              std::vector<std::string> out{x.str()};
              for (MprLabel y = omega_action(q, x); !(y == x); y = omega_action(q, y)) out.push_back(y.str());
              return out;
          });

    m.def("garside_normal_form", [](const std::string& type, const std::vector<int>& w) {
              DynkinType t = braid_type(type);
              return to_py(garside_to_json(t, garside_normal_form(t, word(t, w))));
          });
    m.def("braid_equal", [](const std::string& type, const std::vector<int>& a, const std::vector<int>& b) {
              DynkinType t = braid_type(type);
              return braid_equal(t, word(t, a), word(t, b));
          });
    m.def("star", [](const std::string& type, const std::vector<int>& w) {
              DynkinType t = braid_type(type);
              return letters(star_involution(t, word(t, w)));
          });
    m.def("in_b_star", [](const std::string& type, const std::vector<int>& w) {
              DynkinType t = braid_type(type);
              return is_in_B_star(t, word(t, w));
          });
    m.def("k0_action", [](const std::string& type, const std::vector<int>& w) {
              DynkinType t = braid_type(type);
              return k0_action(t, word(t, w));
          });
}

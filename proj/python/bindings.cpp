// Python view of the library: exact values cross the boundary as
// fractions.Fraction (or int), reports as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twoside/analysis_brackets.hpp"
#include "twoside/cli.hpp"
#include "twoside/combinatorics.hpp"
#include "twoside/divisors.hpp"
#include "twoside/euclid_checks.hpp"
#include "twoside/jordan_measure.hpp"
#include "twoside/lattice_pick.hpp"
#include "twoside/polyform.hpp"
#include "twoside/probability_games.hpp"
#include "twoside/registry.hpp"
#include "twoside/serialize.hpp"
#include "twoside/sums_fib.hpp"

namespace py = pybind11;
using namespace twoside;

namespace {

// int, Fraction or "p/q" string; floats are refused to keep everything exact
Rational to_rational(const py::handle& h)
{
    if (py::isinstance<py::float_>(h))
        throw py::type_error("floats are not accepted; pass int, Fraction or a 'p/q' string");
    return Rational::parse(py::str(h).cast<std::string>());
}

py::object fraction(const Rational& r)
{
    // leaked on purpose: a static py::object would be released after the interpreter is gone
    static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*cls)(r.str());
}

py::object integer(const BigInt& n)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::tuple bracket(const Bracket& b)
{
    return py::make_tuple(fraction(b.lo()), fraction(b.hi()));
}

py::object json_to_py(const Json& j)
{
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

py::object report(const IdentityReport& r)
{
    return json_to_py(report_json(r));
}

template <typename Kind, std::size_t N>
Kind kind_from(const std::array<Kind, N>& all, std::string_view (*name)(Kind), const std::string& s)
{
    for (Kind k : all)
        if (name(k) == s)
            return k;
    throw py::value_error("unknown kind: " + s);
}

LatticePolygon lattice_polygon(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts)
{
    std::vector<LatticePoint> v;
    for (const auto& [x, y] : pts)
        v.push_back({x, y});
    return LatticePolygon::normalized(std::move(v));
}

} // namespace

PYBIND11_MODULE(twoside, m)
{
    m.doc() = "Exact two-sided checks: identities, enclosures and counts";

    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<ModelError>(m, "ModelError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("fibonacci", [](long n) { return integer(fibonacci(n)); }, py::arg("n"));
    m.def("binomial", [](long n, long k) { return integer(binomial(n, k)); }, py::arg("n"), py::arg("k"));

    m.def("sum_identity_check",
          [](const std::string& kind, long n) {
              return report(sum_identity_check(kind_from(all_sum_kinds, sum_kind_name, kind), n));
          },
          py::arg("kind"), py::arg("n"));
    m.def("binom_identity_check",
          [](const std::string& kind, const std::vector<long>& params) {
              return report(binom_identity_check(kind_from(all_binom_kinds, binom_kind_name, kind), params));
          },
          py::arg("kind"), py::arg("params"));
    m.def("divisor_counts", [](long n) { return divisor_counts(n).d; }, py::arg("n"));
    m.def("partitions", [](long n) {
        std::vector<std::vector<long>> out;
        for (const auto& p : partitions_enumerate(n))
            out.push_back(p.parts);
        return out;
    }, py::arg("n"));

    m.def("real_power_bracket",
          [](const py::object& a, long digits) { return bracket(real_power_bracket(to_rational(a), digits)); },
          py::arg("a"), py::arg("digits"));
    m.def("pi_bracket",
          [](long doublings, const py::object& eps) { return bracket(pi_bracket(doublings, to_rational(eps))); },
          py::arg("doublings"), py::arg("eps") = "1/1000000000000");
    m.def("riemann_bracket",
          [](int k, long n, const py::object& c, const py::object& b) {
              return bracket(riemann_bracket(MonomialIntegrand{to_rational(c), k, to_rational(b)}, n));
          },
          py::arg("k"), py::arg("n"), py::arg("c") = 1, py::arg("b") = 1);
    m.def("jordan_disk_bracket",
          [](const py::object& r, long n) { return bracket(jordan_bracket(make_disk({0, 0}, to_rational(r)), n)); },
          py::arg("r"), py::arg("n"));

    m.def("pick_check",
          [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
              const auto p = lattice_polygon(pts);
              py::dict d;
              d["area"] = fraction(shoelace_area(p));
              d["h"] = boundary_count(p);
              d["b"] = interior_count(p);
              d["triangles"] = empty_triangulation(p).triangles.size();
              d["pass"] = pick_check(p).pass;
              return d;
          },
          py::arg("vertices"));

    m.def("mixture_concentration",
          [](const py::object& m1, const py::object& m2, const py::object& c2, const py::object& c_mix) {
              return fraction(mixture_concentration(to_rational(m1), to_rational(m2), to_rational(c2), to_rational(c_mix)));
          },
          py::arg("m1"), py::arg("m2"), py::arg("c2"), py::arg("c_mix"));
    m.def("squares_intersection",
          [](const py::object& a, const py::object& b) {
              const auto s = squares_intersection_check(to_rational(a), to_rational(b));
              return py::make_tuple(fraction(s.x), fraction(s.y), s.pass);
          },
          py::arg("a"), py::arg("b"));

    m.def("dice_exact", [] { return fraction(absorbing_chain_solve(dice_chain()).at("S")); });
    m.def("coin_game_exact", [](long n) { return fraction(coin_game_exact(n)); }, py::arg("n"));

    m.def("suite_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : suite_registry())
            ids.push_back(e.id);
        return ids;
    });
    m.def("run_suite",
          [](const std::string& selector, long max_n, std::uint64_t seed) {
              const auto suites = select_suites(selector);
              if (suites.empty())
                  throw py::value_error("unknown suite: " + selector);
              SuiteParams params;
              params.max_n = max_n;
              params.seed = seed;
              py::list out;
              for (const auto* s : suites) {
                  std::vector<IdentityReport> reports;
                  {
                      py::gil_scoped_release release;
                      reports = s->run(params);
                  }
                  for (const auto& r : reports)
                      out.append(report(r));
              }
              return out;
          },
          py::arg("selector"), py::arg("max_n") = 200, py::arg("seed") = 42);

    m.def("cli",
          [](const std::vector<std::string>& args) {
              std::vector<const char*> argv{"twoside"};
              for (const auto& a : args)
                  argv.push_back(a.c_str());
              std::ostringstream out, err;
              int code;
              {
                  py::gil_scoped_release release;
                  code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}

#include <gjms6/beta_ratio.hpp>
#include <gjms6/bubble.hpp>
#include <gjms6/commands.hpp>
#include <gjms6/green_expansion.hpp>
#include <gjms6/sphere_spectral.hpp>
#include <gjms6/weyl.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gjms6;

namespace {

// Exact values cross the boundary as "p/q" strings; the Python side turns them
// into fractions.Fraction.
std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(q.get_str());
    return out;
}

std::string run_json(const std::string& subcommand, const py::kwargs& kw) {
    RunConfig c;
    c.subcommand = subcommand;
    for (const auto& item : kw) {
        const auto key = item.first.cast<std::string>();
        const auto& v = item.second;
        if (key == "n") c.n = v.cast<int>();
        else if (key == "ell_max") c.ell_max = v.cast<int>();
        else if (key == "eps") c.eps = v.cast<double>();
        else if (key == "rho") c.rho = v.cast<double>();
        else if (key == "quad_points") c.quad_points = v.cast<int>();
        else if (key == "seed") c.seed = v.cast<std::uint64_t>();
        else if (key == "tol") c.tol = v.cast<double>();
        else if (key == "perturb") c.perturb = v.cast<std::string>();
        else if (key == "k") c.k = v.cast<int>();
        else if (key == "max_order") c.max_order = v.cast<int>();
        else if (key == "K") c.k_map = v.cast<std::string>();
        else if (key == "scan") c.scan = v.cast<bool>();
        else if (key == "f") c.f_spec = v.cast<std::string>();
        else throw UsageError("unknown option '" + key + "'");
    }
    return to_json(run_command(c)).dump();
}

} // namespace

PYBIND11_MODULE(_gjms6, m) {
    m.attr("__version__") = std::string(kVersion);

    m.def("beta_ratio", [](int a1, int b1, int a2, int b2, long n) { return beta_ratio(a1, b1, a2, b2)(n).get_str(); },
          py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"), py::arg("n"));
    m.def("beta_ratio_symbolic", [](int a1, int b1, int a2, int b2) { return beta_ratio(a1, b1, a2, b2).str(); });

    m.def("sphere_eigenvalues", [](int n, int ell_max) { return strings(sphere_spectrum(n, ell_max).eigenvalues); },
          py::arg("n"), py::arg("ell_max"));
    m.def("q_sphere", [](long n) { return q_sphere()(n).get_str(); });
    m.def("y6_sphere", &y6_sphere);
    m.def("factorization_ok", [] { return verify_factorization().ok; });

    m.def("psi4_coefficients", [](int n, std::uint64_t seed) {
        const auto w = random_weyl(n, seed);
        const auto res = solve_psi4(n, build_source(n, w, random_schouten_jet(w, seed)));
        return strings({res.coefficients.begin(), res.coefficients.end()});
    }, py::arg("n"), py::arg("seed") = 1);
    m.def("log_coefficient_n10", [](std::uint64_t seed) {
        const auto w = random_weyl(10, seed);
        const auto lc = log_coefficient_n10(w, random_schouten_jet(w, seed));
        return py::dict(py::arg("raw_over_norm") = lc.raw_over_norm.get_str(), py::arg("cn_over_norm") = lc.cn_over_norm,
                        py::arg("f4_h0") = lc.f4_h0.get_str(), py::arg("divisor") = lc.divisor.get_str());
    }, py::arg("seed") = 1);

    m.def("sobolev_quotient", [](int n, double eps) { return sobolev_quotient(n, eps); }, py::arg("n"), py::arg("eps") = 1.0);
    m.def("coefficient_A", [](int n, double eps, double rho) { return coefficient_A(BubbleParams{n, eps, rho, {}}); },
          py::arg("n"), py::arg("eps"), py::arg("rho") = 1.0);
    m.def("coefficient_A_limit", &coefficient_A_limit);
    m.def("limit_bracket", [](int n) { return limit_bracket(n).get_str(); });
    m.def("remainder_exponent", [](int n, std::vector<double> grid, double rho) {
        return remainder_scaling(n, grid, rho).fitted_exponent;
    }, py::arg("n"), py::arg("eps_grid"), py::arg("rho") = 1.0);

    m.def("run", &run_json, py::arg("subcommand"),
          "Run a CLI subcommand in-process and return its JSON report as a string.");

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
}

#include <gjms6/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gjms6;

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical checks for the sixth-order GJMS operator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    RunConfig c;
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", c.output, "Write the report here instead of stdout");
    app.add_option("--seed", c.seed, "Seed for random Weyl tensors and jets");
    app.add_option("--tol", c.tol, "Newton tolerance");
    app.add_option("--quad-points", c.quad_points, "Quadrature nodes on the sphere (0 = default)");

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the operator on the round sphere, Q and Y6");
    spectrum->add_option("--n", c.n)->required();
    spectrum->add_option("--ell-max", c.ell_max);

    auto* factorization = app.add_subcommand("factorization", "Symbolic check of the Einstein factorization");
    factorization->add_flag("--symbolic", "Exact rational functions of n (the only mode)");
    factorization->add_option("--perturb", c.perturb, "Rational added to the first factor constant");
    factorization->add_option("--k", c.k, "Also check the general order-2k product");

    auto* green = app.add_subcommand("green", "psi_4 or the n = 10 log coefficient for a random Weyl tensor");
    green->add_option("--n", c.n)->required();

    auto* expand = app.add_subcommand("expand", "Degree-by-degree Green's function expansion");
    expand->add_option("--n", c.n)->required();
    expand->add_option("--max-order", c.max_order);
    expand->add_option("--K", c.k_map, "Metric part: zero or r2")->check(CLI::IsMember({"zero", "r2"}));

    auto* bubble = app.add_subcommand("bubble", "Bubble integrals, the A-coefficient and its limit");
    bubble->add_option("--n", c.n)->required();
    bubble->add_option("--eps", c.eps);
    bubble->add_option("--rho", c.rho);
    bubble->add_flag("--scan", c.scan, "Sweep eps over three decades and fit");
    bubble->add_option("--sweep-csv", c.sweep_csv, "Write the eps sweep as CSV");

    auto* mountain = app.add_subcommand("mountain", "Zonal Galerkin critical point and mountain-pass level");
    mountain->add_option("--n", c.n)->required();
    mountain->add_option("--f", c.f_spec, "const or const:<value>");
    mountain->add_option("--ell-max", c.ell_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    Report report;
    try {
        report = run_command(c);
    } catch (const std::invalid_argument& e) {
        std::cerr << "gjms6 " << c.subcommand << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gjms6 " << c.subcommand << ": " << e.what() << "\n";
        return 1;
    }

    const std::string text = c.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.output);
        if (!out) {
            std::cerr << "gjms6: cannot write " << c.output << "\n";
            return 2;
        }
        out << text;
    }
    return exit_code(report);
}

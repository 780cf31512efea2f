#include <doctest.h>

#include <gjms6/commands.hpp>

using namespace gjms6;

TEST_CASE("report records and exit codes") {
    Report r;
    r.add_exact("a", make_rational(1, 3), make_rational(2, 6), Provenance::derived);
    r.add("b", "1/17280", "1/4320", Status::documented_discrepancy, Provenance::paper);
    r.add_close("c", 1.0, 1.0 + 1e-12, 1e-10, Provenance::trivial);
    CHECK(exit_code(r) == 0);
    CHECK(r.claims[0].expected == "1/3");
    r.add_exact("d", Rational(1), Rational(2), Provenance::derived);
    CHECK(r.claims.back().status == Status::mismatch);
    CHECK(exit_code(r) == 1);

    const auto j = to_json(r);
    CHECK(j.at("version") == kVersion);
    CHECK(j.at("claims").size() == 4);
    CHECK(j.at("claims")[1].at("status") == "documented-discrepancy");
    CHECK(j.at("claims")[2].at("provenance") == "trivial");
    CHECK(nlohmann::json::parse(j.dump()) == j);

    const auto csv = to_csv(r);
    CHECK(csv.rfind("claim_id,expected,computed,status,provenance\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("float formatting keeps 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("CSV quoting") {
    Report r;
    r.add("x", ">= 1, strictly", "say \"2\"", Status::match, Provenance::derived);
    CHECK(to_csv(r).find("\">= 1, strictly\",\"say \"\"2\"\"\"") != std::string::npos);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational(" 1/100 ") == make_rational(1, 100));
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("0.5"), UsageError);
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
}

TEST_CASE("commands") {
    RunConfig c;
    c.subcommand = "spectrum";
    c.n = 10;
    const auto s = run_command(c);
    CHECK(exit_code(s) == 0);
    CHECK(s.claims[0].computed == "5040");
    CHECK(s.claims[1].computed == "20160");
    CHECK(s.config.at("n") == 10);

    c.n = 6;
    CHECK_THROWS_AS(run_command(c), UsageError);

    RunConfig f;
    f.subcommand = "factorization";
    CHECK(exit_code(run_command(f)) == 0);
    f.perturb = "1/7";
    CHECK(exit_code(run_command(f)) == 1);
    f.perturb = "0";
    f.k = 3;
    CHECK(exit_code(run_command(f)) == 0);
    f.k = 2;
    CHECK_THROWS_AS(run_command(f), UsageError);

    RunConfig g;
    g.subcommand = "green";
    g.n = 12;
    g.seed = 7;
    const auto gr = run_command(g);
    CHECK(exit_code(gr) == 0);
    int discrepancies = 0;
    for (const auto& rec : gr.claims) discrepancies += rec.status == Status::documented_discrepancy;
    CHECK(discrepancies == 2);

    RunConfig e;
    e.subcommand = "expand";
    e.n = 40;
    e.max_order = 12;
    CHECK_THROWS_AS(run_command(e), UsageError);
    e.n = 9;
    e.max_order = 6;
    e.k_map = "r2";
    CHECK(exit_code(run_command(e)) == 0);
    e.k_map = "other";
    CHECK_THROWS_AS(run_command(e), UsageError);

    RunConfig m;
    m.subcommand = "mountain";
    m.f_spec = "linear";
    CHECK_THROWS_AS(run_command(m), UsageError);

    c.subcommand = "nope";
    CHECK_THROWS_AS(run_command(c), UsageError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strobs/report.hpp"
#include "strobs/verify.hpp"

using namespace strobs;

namespace {
const Metric kEta;
} // namespace

TEST_CASE("jacobi sweep passes at small rank sum") {
    SweepResult r = verify_jacobi(4, 5, kEta);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
    CHECK(r.dims.at("triples") > 0);
}

TEST_CASE("naive rank-1 control finds violations") {
    SweepResult r = verify_jacobi_naive_control(4, 5, kEta);
    CHECK(r.pass);
    CHECK(r.dims.at("violations") > 0);
    CHECK(!r.counterexample.empty());

    // at rank sum 4 nothing can involve the extension nontrivially enough
    SweepResult low = verify_jacobi_naive_control(4, 4, kEta);
    CHECK_FALSE(low.pass);
}

TEST_CASE("delta well-definedness at small rank") {
    SweepResult r = verify_delta_well_defined(4, 4, kEta);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("delta derivation rule at small rank sum") {
    SweepResult r = verify_delta_leibniz(4, 5, kEta);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("z2 sweep at rank 3-4") {
    SweepResult r = verify_z2(4, 4, kEta);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
    CHECK(r.dims.at("words") == 64 + 256);
}

TEST_CASE("pi intertwining on random pairs") {
    SweepResult r = verify_pi_intertwine(4, 25, 5, kEta, 2024, ExecMode::Serial);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("parallel and serial sweeps agree") {
    SweepResult a = verify_jacobi(4, 5, kEta, ExecMode::Serial);
    SweepResult b = verify_jacobi(4, 5, kEta, ExecMode::Parallel);
    CHECK(a.pass == b.pass);
    CHECK(a.dims == b.dims);
    CHECK(a.counterexample == b.counterexample);

    SweepResult c = verify_z2(3, 4, kEta, ExecMode::Serial);
    SweepResult d = verify_z2(3, 4, kEta, ExecMode::Parallel);
    CHECK(c.pass == d.pass);
    CHECK(c.dims == d.dims);
}

TEST_CASE("report serialization is deterministic and sorted") {
    SuiteReport rep;
    rep.config = {{"dim", "4"}, {"metric", "+---"}};
    CheckRecord r1{"zeta", "b", "s", "PASS", {{"n", 3}}, "", 1.5};
    CheckRecord r2{"alpha", "a", "s", "FAIL", {}, "boom", 2.5};
    rep.add(r1);
    rep.add(r2);
    rep.sort_records();
    CHECK(rep.checks[0].suite == "alpha");
    CHECK_FALSE(rep.all_pass());

    const std::string j1 = rep.to_json(false);
    const std::string j2 = rep.to_json(false);
    CHECK(j1 == j2);
    CHECK(j1.find("wall_ms") == std::string::npos);
    CHECK(rep.to_json(true).find("wall_ms") != std::string::npos);
    CHECK(rep.to_csv(false).find("alpha") != std::string::npos);
    CHECK(rep.to_text(false).find("1/2 checks passed") != std::string::npos);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "borelred/json_io.hpp"
#include "borelred/verify.hpp"

using namespace borelred;

TEST_CASE("instances are deterministic per (n, seed)") {
    for (int n = 1; n <= 5; ++n) {
        const Quad a = generate_instance(n, 42, GenMode::Fiber);
        const Quad b = generate_instance(n, 42, GenMode::Fiber);
        CHECK(a == b);
        CHECK(quadruple_to_json(a).dump() == quadruple_to_json(b).dump());
    }
    CHECK(!(generate_instance(3, 1, GenMode::Fiber) == generate_instance(3, 2, GenMode::Fiber)));
}

TEST_CASE("fiber instances live in the fiber") {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            CHECK(in_zero_fiber_rss(generate_instance(n, seed, GenMode::Fiber)));
        }
    }
}

TEST_CASE("fiber instances exercise nonzero covectors") {
    // The subset construction should produce points with both blocks active,
    // not only j = 0.
    bool saw_nonzero_j = false;
    bool saw_nonzero_subdiagonal = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Quad q = generate_instance(4, seed, GenMode::Fiber);
        saw_nonzero_j = saw_nonzero_j || !is_zero_vector(q.j);
        saw_nonzero_subdiagonal = saw_nonzero_subdiagonal || !q.s.matrix().is_diagonal();
    }
    CHECK(saw_nonzero_j);
    CHECK(saw_nonzero_subdiagonal);
}

TEST_CASE("free instances are shaped but unconstrained") {
    const Quad q = generate_instance(4, 7, GenMode::Free);
    CHECK(q.dim() == 4);
    CHECK(is_regular_semisimple(q.r));
}

TEST_CASE("n = 1 fiber instance forces the product to vanish") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Quad q = generate_instance(1, seed, GenMode::Fiber);
        CHECK((q.i[0] * q.j[0]).is_zero());
    }
}

TEST_CASE("generation rejects nonsense dimensions") {
    CHECK_THROWS_AS(generate_instance(0, 1, GenMode::Free), DimensionError);
}

TEST_CASE("zero trials produce an empty passing report") {
    SuiteOptions opt;
    opt.n_max = 4;
    opt.trials = 0;
    const VerificationReport rep = run_suite("idempotents", opt);
    CHECK(rep.trials == 0);
    CHECK(rep.laws.empty());
    CHECK(rep.all_pass());
    CHECK(!rep.counterexample.has_value());
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), DomainError);
    CHECK_THROWS_AS(run_suite("all", SuiteOptions{}), DomainError);
}

TEST_CASE("every law sees every trial") {
    SuiteOptions opt;
    opt.n_max = 3;
    opt.trials = 4;
    opt.seed = 5;
    for (const std::string& name : suite_names()) {
        const VerificationReport rep = run_suite(name, opt);
        CHECK(!rep.laws.empty());
        for (const auto& [law, tally] : rep.laws) {
            CHECK(tally.passed + tally.failed == rep.trials);
        }
        CHECK(rep.all_pass());
        // The recorded laws are exactly the declared ones.
        std::vector<std::string> declared = suite_laws(name);
        std::sort(declared.begin(), declared.end());
        std::vector<std::string> recorded;
        for (const auto& [law, tally] : rep.laws) recorded.push_back(law);
        CHECK(declared == recorded);
    }
}

TEST_CASE("reports are byte reproducible") {
    SuiteOptions opt;
    opt.n_max = 3;
    opt.trials = 3;
    opt.seed = 11;
    const std::string a = run_suite("solver", opt).to_json().dump(2);
    const std::string b = run_suite("solver", opt).to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("per-trial sink sees one object per trial") {
    SuiteOptions opt;
    opt.n_max = 3;
    opt.trials = 2;
    std::vector<Json> seen;
    opt.per_trial_sink = [&](const Json& j) { seen.push_back(j); };
    run_suite("idempotents", opt);
    REQUIRE(seen.size() == 4); // n = 2, 3 with 2 trials each
    for (const Json& j : seen) {
        CHECK(j.contains("n"));
        CHECK(j.contains("seed"));
        CHECK(j.at("laws").contains("orthogonality"));
        CHECK(j.at("laws").at("orthogonality") == "pass");
    }
}

TEST_CASE("run_suites expands all") {
    SuiteOptions opt;
    opt.n_max = 2;
    opt.trials = 1;
    const auto reports = run_suites("all", opt);
    CHECK(reports.size() == suite_names().size());
}

#include "arraykit/design.hpp"

#include <doctest.h>

using namespace arraykit;

TEST_CASE("default candidate layout") {
    const DesignCandidate c =
        synthesize_candidate(DesignGoals::defaults(), Substrate::rt5880());
    REQUIRE(c.bands.size() == 2);

    const BandDesign& low = c.bands[0];
    CHECK(low.center_hz == 5.9e9);
    CHECK(low.elements_x == 2);
    CHECK(low.elements_y == 2);
    CHECK(low.spacing_m == doctest::Approx(25.4061405e-3).epsilon(1e-6));
    CHECK(low.patch.length_m == doctest::Approx(17.1288164e-3).epsilon(1e-6));

    const BandDesign& high = c.bands[1];
    CHECK(high.center_hz == 28e9);
    CHECK(high.elements_x == 4);
    CHECK(high.elements_y == 1);
    CHECK(high.spacing_m == doctest::Approx(5.35343675e-3).epsilon(1e-6));
    // 1x4 extent: 3 half-wave gaps plus the patch width
    CHECK(high.extent_x_m() == doctest::Approx(20.2925736e-3).epsilon(1e-6));

    // stacked footprint fits the default 60 x 60 mm keep-out
    CHECK(c.footprint_x_m == doctest::Approx(45.4908128e-3).epsilon(1e-6));
    CHECK(c.footprint_y_m == doctest::Approx(51.1442432e-3).epsilon(1e-6));
    CHECK(c.footprint_x_m < 60e-3);
    CHECK(c.footprint_y_m < 60e-3);
}

TEST_CASE("shape overrides") {
    const DesignCandidate c = synthesize_candidate(
        DesignGoals::defaults(), Substrate::rt5880(),
        {std::nullopt, ArrayShape{8, 2}});
    CHECK(c.bands[0].elements_x == 2); // default kept
    CHECK(c.bands[1].elements_x == 8);
    CHECK(c.bands[1].elements_y == 2);

    CHECK_THROWS_AS(synthesize_candidate(DesignGoals::defaults(), Substrate::rt5880(),
                                         {ArrayShape{0, 1}}),
                    std::domain_error);
}

TEST_CASE("default candidate verdicts") {
    const DesignGoals goals = DesignGoals::defaults();
    const DesignCandidate c = synthesize_candidate(goals, Substrate::rt5880());
    const ComplianceReport report = check_goals(c, goals);

    REQUIRE(report.results.size() == 6); // footprint + 2x(steering, gain) + isolation
    CHECK(report.results[0].goal == "footprint");
    CHECK(report.results[0].verdict == Verdict::pass);
    int steering = 0, gain = 0;
    for (const auto& r : report.results) {
        if (r.goal.rfind("steering", 0) == 0) {
            ++steering;
            CHECK(r.verdict == Verdict::pass);
        }
        if (r.goal.rfind("gain", 0) == 0) {
            ++gain;
            // the lossless revolved-cut directivity proxy lands well below the
            // published gains, so these goals fail honestly under the model
            CHECK(r.verdict == Verdict::fail);
            REQUIRE(r.computed.has_value());
            CHECK(*r.computed < r.threshold);
        }
    }
    CHECK(steering == 2);
    CHECK(gain == 2);
    // isolation is not evaluable without measured data
    CHECK(report.results.back().goal == "isolation");
    CHECK(report.results.back().verdict == Verdict::not_evaluable);
    CHECK_FALSE(report.all_evaluable_pass());

    // with gain goals the proxy can meet, everything evaluable passes
    DesignGoals relaxed = goals;
    relaxed.bands[0].min_gain_dbi = 3.0;
    relaxed.bands[1].min_gain_dbi = 3.0;
    CHECK(check_goals(c, relaxed).all_evaluable_pass());
}

TEST_CASE("goal failures are reported") {
    DesignGoals tight = DesignGoals::defaults();
    tight.max_footprint_x_mm = 10.0;
    tight.max_footprint_y_mm = 10.0;
    const DesignCandidate c = synthesize_candidate(tight, Substrate::rt5880());
    const ComplianceReport report = check_goals(c, tight);
    CHECK_FALSE(report.all_evaluable_pass());
    CHECK(report.results[0].verdict == Verdict::fail);

    DesignGoals greedy = DesignGoals::defaults();
    greedy.bands[1].min_gain_dbi = 30.0; // out of reach for a 1x4
    const ComplianceReport r2 =
        check_goals(synthesize_candidate(greedy, Substrate::rt5880()), greedy);
    CHECK_FALSE(r2.all_evaluable_pass());
}

TEST_CASE("isolation goal with measured data") {
    SParameterSet s;
    s.n_ports = 2;
    s.frequencies_hz = {5.9e9, 28e9};
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 1) = a(1, 0) = Complex{0.0195, 0.0}; // about -34.2 dB
    b(0, 1) = b(1, 0) = Complex{0.0166, 0.0}; // about -35.6 dB
    s.data = {a, b};

    DesignGoals goals = DesignGoals::defaults();
    goals.bands[0].min_gain_dbi = 3.0;
    goals.bands[1].min_gain_dbi = 3.0;
    const DesignCandidate c = synthesize_candidate(goals, Substrate::rt5880());
    const ComplianceReport report = check_goals(c, goals, s);
    CHECK(report.results.back().goal == "isolation");
    CHECK(report.results.back().verdict == Verdict::pass);
    REQUIRE(report.results.back().computed.has_value());
    CHECK(*report.results.back().computed > 25.0);
    CHECK(report.all_evaluable_pass());

    // coupling above the goal flips the verdict
    ComplexMatrix hot(2, 2);
    hot(0, 1) = hot(1, 0) = Complex{0.2, 0.0}; // about -14 dB
    s.data = {a, hot};
    const ComplianceReport bad = check_goals(c, goals, s);
    CHECK(bad.results.back().verdict == Verdict::fail);
    CHECK_FALSE(bad.all_evaluable_pass());
}

TEST_CASE("comparison table join") {
    const std::vector<LabeledMetric> sim = {
        {"gain_5p9", 7.2, "dBi"},
        {"gain_28", 10.6, "dBi"},
        {"hpbw_28", 13.0, "deg"},
    };
    const std::vector<LabeledMetric> meas = {
        {"gain_28", 10.3, "dBi"},
        {"gain_5p9", 6.9, "dBi"},
        {"isolation", -34.2, "dB"},
    };
    const ComparisonTable t = comparison_table(sim, meas);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].parameter == "gain_5p9");
    CHECK(t.rows[0].delta == doctest::Approx(-0.3).epsilon(1e-12));
    CHECK(t.rows[1].parameter == "gain_28");
    CHECK(t.rows[1].delta == doctest::Approx(-0.3).epsilon(1e-9));
    REQUIRE(t.unmatched_simulated.size() == 1);
    CHECK(t.unmatched_simulated[0] == "hpbw_28");
    REQUIRE(t.unmatched_measured.size() == 1);
    CHECK(t.unmatched_measured[0] == "isolation");
}

TEST_CASE("goal validation") {
    DesignGoals g = DesignGoals::defaults();
    g.bands.clear();
    CHECK_THROWS_AS(g.validate(), std::domain_error);
    g = DesignGoals::defaults();
    g.steering_range_deg = 0.0;
    CHECK_THROWS_AS(g.validate(), std::domain_error);
    g = DesignGoals::defaults();
    g.bands[0].min_gain_dbi = 0.0;
    CHECK_THROWS_AS(g.validate(), std::domain_error);
}

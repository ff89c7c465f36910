#include "arraykit/network.hpp"

#include <doctest.h>

#include <random>

using namespace arraykit;

TEST_CASE("reflection coefficient") {
    CHECK(std::abs(reflection_coefficient({Complex{50.0, 0.0}})) < 1e-15);
    CHECK(reflection_coefficient({Complex{100.0, 0.0}}).real() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(reflection_coefficient({Complex{0.0, 0.0}}).real() ==
          doctest::Approx(-1.0).epsilon(1e-15));
    // purely reactive load reflects everything
    CHECK(std::abs(reflection_coefficient({Complex{0.0, 75.0}})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    const Impedance negative{Complex{-1.0, 0.0}};
    CHECK_THROWS_AS(negative.validate(), std::domain_error);
}

TEST_CASE("s11 in dB") {
    CHECK(s11_db(Complex{1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s11_db(Complex{0.1, 0.0}) == doctest::Approx(-20.0).epsilon(1e-12));
    CHECK(s11_db(Complex{0.0, 0.0}) == db_floor);
    CHECK_THROWS_AS(s11_db(Complex{1.1, 0.0}), std::domain_error);
}

TEST_CASE("passivity of gamma for passive loads") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> re(0.0, 500.0);
    std::uniform_real_distribution<double> im(-500.0, 500.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Complex g = reflection_coefficient({Complex{re(rng), im(rng)}});
        CHECK(std::abs(g) <= 1.0 + 1e-12);
        CHECK(s11_db(g) <= 1e-9);
    }
}

TEST_CASE("band extraction on a V trace") {
    // linear V centered at 28 GHz: -10 dB crossings at 27.2 and 28.8 GHz
    std::vector<std::pair<double, double>> sweep;
    for (int i = 0; i <= 40; ++i) {
        const double f = 26e9 + i * 0.1e9;
        sweep.emplace_back(f, -2.0 - 20.0 * (1.0 - std::abs(f - 28e9) / 2e9));
    }
    const BandReport r = extract_bands(sweep, -10.0);
    REQUIRE(r.bands.size() == 1);
    // V slope is 10 dB/GHz from -22 dB at the vertex: edges 1.2 GHz out
    CHECK(r.bands[0].f_low_hz == doctest::Approx(26.8e9).epsilon(1e-9));
    CHECK(r.bands[0].f_high_hz == doctest::Approx(29.2e9).epsilon(1e-9));
    CHECK_FALSE(r.bands[0].truncated_low);
    CHECK_FALSE(r.bands[0].truncated_high);
}

TEST_CASE("band extraction edge cases") {
    // never dips below threshold
    CHECK(extract_bands({{1e9, -3.0}, {2e9, -5.0}, {3e9, -4.0}}, -10.0).bands.empty());

    // below threshold across the whole sweep: truncated on both sides
    const BandReport all = extract_bands({{1e9, -15.0}, {2e9, -18.0}, {3e9, -14.0}}, -10.0);
    REQUIRE(all.bands.size() == 1);
    CHECK(all.bands[0].truncated_low);
    CHECK(all.bands[0].truncated_high);
    CHECK(all.bands[0].f_low_hz == 1e9);
    CHECK(all.bands[0].f_high_hz == 3e9);

    // two separate dips
    const BandReport two = extract_bands(
        {{1e9, -5.0}, {2e9, -15.0}, {3e9, -5.0}, {4e9, -15.0}, {5e9, -5.0}}, -10.0);
    CHECK(two.bands.size() == 2);

    // sample exactly at threshold does not open a band (strictly below)
    CHECK(extract_bands({{1e9, -10.0}, {2e9, -10.0}}, -10.0).bands.empty());

    CHECK_THROWS_AS(extract_bands({{2e9, -5.0}, {1e9, -5.0}}, -10.0), std::invalid_argument);
    CHECK_THROWS_AS(extract_bands({{1e9, -5.0}}, -10.0), std::invalid_argument);
}

TEST_CASE("touchstone: one-port MA with defaults") {
    const std::string text =
        "! measured port\n"
        "# GHz S MA R 50\n"
        "1.0 0.5 0.0\n"
        "2.0 0.25 90.0\n";
    const SParameterSet s = parse_touchstone(text);
    CHECK(s.n_ports == 1);
    CHECK(s.reference_impedance == 50.0);
    REQUIRE(s.frequencies_hz.size() == 2);
    CHECK(s.frequencies_hz[0] == doctest::Approx(1e9).epsilon(1e-12));
    CHECK(std::abs(s.data[0](0, 0) - Complex{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(s.data[1](0, 0) - Complex{0.0, 0.25}) < 1e-12);
}

TEST_CASE("touchstone: missing option line falls back to GHz S MA R 50") {
    const SParameterSet s = parse_touchstone("3.5 1.0 180.0\n");
    CHECK(s.n_ports == 1);
    CHECK(s.frequencies_hz[0] == doctest::Approx(3.5e9).epsilon(1e-12));
    CHECK(std::abs(s.data[0](0, 0) - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("touchstone: two-port RI, column order S11 S21 S12 S22") {
    const std::string text =
        "# MHz S RI R 75\n"
        "100 0.1 0 0.2 0 0.3 0 0.4 0\n";
    const SParameterSet s = parse_touchstone(text);
    CHECK(s.n_ports == 2);
    CHECK(s.reference_impedance == 75.0);
    CHECK(s.frequencies_hz[0] == doctest::Approx(100e6).epsilon(1e-12));
    CHECK(s.data[0](0, 0).real() == doctest::Approx(0.1));
    CHECK(s.data[0](1, 0).real() == doctest::Approx(0.2)); // S21 comes second
    CHECK(s.data[0](0, 1).real() == doctest::Approx(0.3));
    CHECK(s.data[0](1, 1).real() == doctest::Approx(0.4));
}

TEST_CASE("touchstone: DB format") {
    const std::string text =
        "# Hz S DB R 50\n"
        "1e9 -6.0205999 0\n";
    const SParameterSet s = parse_touchstone(text);
    CHECK(std::abs(s.data[0](0, 0) - Complex{0.5, 0.0}) < 1e-7);
}

TEST_CASE("touchstone: wrapped four-port rows") {
    std::string text = "# GHz S RI R 50\n";
    // frequency + first row (9 tokens), then three continuation rows of 8
    text += "1.0 1 0 2 0 3 0 4 0\n";
    text += "    5 0 6 0 7 0 8 0\n";
    text += "    9 0 10 0 11 0 12 0\n";
    text += "    13 0 14 0 15 0 16 0\n";
    const SParameterSet s = parse_touchstone(text);
    CHECK(s.n_ports == 4);
    CHECK(s.data[0](0, 0).real() == doctest::Approx(1.0));
    CHECK(s.data[0](3, 3).real() == doctest::Approx(16.0));
}

TEST_CASE("touchstone: rejects what it cannot represent") {
    CHECK_THROWS_AS(parse_touchstone("[Version] 2.0\n"), parse_error);
    CHECK_THROWS_AS(parse_touchstone("# GHz Y MA R 50\n1 0.5 0\n"), parse_error);
    CHECK_THROWS_AS(parse_touchstone("# GHz S MA R 50\n1 0.5\n"), parse_error);
    CHECK_THROWS_AS(parse_touchstone("# GHz S MA R 50\n2 0.5 0\n1 0.5 0\n"), parse_error);
    CHECK_THROWS_AS(parse_touchstone(""), parse_error);
    CHECK_THROWS_AS(parse_touchstone("# GHz S MA R 50\n1 bogus 0\n"), parse_error);

    try {
        parse_touchstone("# GHz S MA R 50\n1 0.5 0\n2 oops 0\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("port count from filename") {
    CHECK(port_count_from_filename("meas.s1p") == 1);
    CHECK(port_count_from_filename("path/to/array.s2p") == 2);
    CHECK(port_count_from_filename("ARRAY.S4P") == 4);
    CHECK_FALSE(port_count_from_filename("array.csv").has_value());
    CHECK_FALSE(port_count_from_filename("array.sxp").has_value());
}

TEST_CASE("touchstone write/parse round trip") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (TouchstoneFormat fmt :
         {TouchstoneFormat::MA, TouchstoneFormat::RI, TouchstoneFormat::DB}) {
        SParameterSet s;
        s.n_ports = 2;
        for (int i = 0; i < 5; ++i) {
            s.frequencies_hz.push_back(26e9 + i * 1e9);
            ComplexMatrix m(2, 2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) m(r, c) = Complex{u(rng), u(rng)};
            s.data.push_back(m);
        }
        const SParameterSet back = parse_touchstone(write_touchstone(s, fmt), 2);
        REQUIRE(back.n_ports == 2);
        REQUIRE(back.frequencies_hz.size() == 5);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(back.frequencies_hz[k] ==
                  doctest::Approx(s.frequencies_hz[k]).epsilon(1e-9));
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    CHECK(std::abs(back.data[k](r, c) - s.data[k](r, c)) < 1e-6);
        }
    }
}

TEST_CASE("isolation report") {
    SParameterSet s;
    s.n_ports = 2;
    s.frequencies_hz = {1e9, 2e9};
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 1) = a(1, 0) = Complex{0.01, 0.0};  // -40 dB
    b(0, 1) = b(1, 0) = Complex{0.03, 0.0};  // ~-30.5 dB
    s.data = {a, b};

    const IsolationReport ok = isolation_report(s, -25.0);
    CHECK(ok.all_pass);
    REQUIRE(ok.pairs.size() == 2);
    CHECK(ok.pairs[0].worst_frequency_hz == 2e9);
    CHECK(ok.pairs[0].worst_db == doctest::Approx(20.0 * std::log10(0.03)).epsilon(1e-12));

    const IsolationReport bad = isolation_report(s, -35.0);
    CHECK_FALSE(bad.all_pass);

    SParameterSet one;
    one.n_ports = 1;
    one.frequencies_hz = {1e9};
    one.data = {ComplexMatrix(1, 1)};
    CHECK_THROWS_AS(isolation_report(one, -25.0), std::domain_error);
}

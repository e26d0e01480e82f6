#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "draughts/csvio.hpp"
#include "draughts/winmatrix.hpp"

using namespace draughts;

namespace {

WinningMatrix synthetic_matrix(std::vector<double> thetas, std::vector<double> elements,
                               long n_per_cell) {
    WinningMatrix m;
    m.grid.theta_values = std::move(thetas);
    m.grid.n_per_cell = n_per_cell;
    m.elements = std::move(elements);
    m.draw_counts.assign(m.elements.size(), 0);
    return m;
}

}  // namespace

TEST_CASE("matrix_element arithmetic") {
    CHECK(matrix_element(75000, 25000, 100000) == 0.5);
    CHECK(matrix_element(31234, 31234, 100000) == 0.0);
    CHECK(matrix_element(1000, 0, 1000) == 1.0);
    CHECK_THROWS(matrix_element(1, 0, 0));
    CHECK_THROWS(matrix_element(600, 500, 1000));
}

TEST_CASE("default grid covers 0..1 in 0.05 steps") {
    const SweepGrid g = SweepGrid::default_grid();
    REQUIRE(g.size() == 21);
    CHECK(g.theta_values.front() == 0.0);
    CHECK(g.theta_values.back() == 1.0);
    CHECK(g.index_of(0.35) == 7);
    CHECK(g.index_of(0.17) == -1);
    CHECK(g.n_per_cell == 100000);
    g.validate();

    SweepGrid bad = g;
    bad.theta_values[3] = 1.5;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("equal expertise: diagonal elements vanish within noise") {
    SweepGrid grid;
    grid.theta_values = {0.0, 0.5, 1.0};
    grid.n_per_cell = 2000;
    const Expertise e{0.5, 0.5};
    const WinningMatrix m = build_winning_matrix(e, e, grid, 2718, kDefaultMaxPlies, 1);
    for (int i = 0; i < grid.size(); ++i)
        CHECK(std::abs(m.at(i, i)) <= 4.0 * m.sigma());
}

TEST_CASE("label swap transposes and negates the matrix up to noise") {
    SweepGrid grid;
    grid.theta_values = {0.0, 0.5, 1.0};
    grid.n_per_cell = 2000;
    const Expertise e1{0.75, 0.3}, e2{0.2, 0.9};
    const WinningMatrix ab = build_winning_matrix(e1, e2, grid, 11, kDefaultMaxPlies, 1);
    const WinningMatrix ba = build_winning_matrix(e2, e1, grid, 12, kDefaultMaxPlies, 1);
    for (int i = 0; i < grid.size(); ++i)
        for (int j = 0; j < grid.size(); ++j)
            CHECK(std::abs(ab.at(i, j) + ba.at(j, i)) <= 4.0 * ab.sigma());
}

TEST_CASE("every cell is recomputable in isolation from its seed") {
    SweepGrid grid;
    grid.theta_values = {0.0, 1.0};
    grid.n_per_cell = 500;
    const Expertise e1{0.75, 0.75}, e2{0.25, 0.5};
    const WinningMatrix m = build_winning_matrix(e1, e2, grid, 404, kDefaultMaxPlies, 2);
    for (int i = 0; i < grid.size(); ++i) {
        for (int j = 0; j < grid.size(); ++j) {
            const BatchResult cell = run_batch(
                AgentSpec::complementary(e1.d, e1.o, grid.theta_values[size_t(i)]),
                AgentSpec::complementary(e2.d, e2.o, grid.theta_values[size_t(j)]),
                grid.n_per_cell, cell_seed(404, i, j), kDefaultMaxPlies,
                Retention::CountsOnly, 1);
            CHECK(m.at(i, j) == matrix_element(cell.wins1, cell.wins2, cell.n));
            CHECK(m.draws_at(i, j) == cell.draws);
        }
    }
}

TEST_CASE("best_response reads maxima along the opponent's fixed theta") {
    // rows: theta1 in {0, 0.5, 1}; columns: theta2
    const WinningMatrix m = synthetic_matrix({0.0, 0.5, 1.0},
                                             {0.0, -0.2, -0.5,   //
                                              0.1, 0.0, -0.1,    //
                                              0.5, 0.3, 0.2},
                                             10000);
    // player 1 against theta2 = 1: column (-0.5, -0.1, 0.2), max at theta1 = 1
    CHECK(best_response(m, Player::One, 1.0) == std::vector<double>{1.0});
    // player 2 against theta1 = 1: row negated (-0.5, -0.3, -0.2), max at theta2 = 1
    CHECK(best_response(m, Player::Two, 1.0) == std::vector<double>{1.0});
    // tie band: values within 2 sigma of the maximum are all reported
    CHECK(best_response(m, Player::Two, 0.0) == std::vector<double>{1.0});
    CHECK_THROWS(best_response(m, Player::One, 0.3));
}

TEST_CASE("best_response on an all-equal matrix is the whole grid") {
    const WinningMatrix m = synthetic_matrix({0.0, 0.5, 1.0},
                                             std::vector<double>(9, 0.25), 10000);
    const std::vector<double> all{0.0, 0.5, 1.0};
    CHECK(best_response(m, Player::One, 0.5) == all);
    CHECK(best_response(m, Player::Two, 0.5) == all);
}

TEST_CASE("matrix CSV and PPM emission are shaped and deterministic") {
    const WinningMatrix m = synthetic_matrix({0.0, 0.5, 1.0},
                                             {1.0, 0.5, 0.0,    //
                                              -0.5, 0.25, 0.75, //
                                              -1.0, 0.0, 1.0},
                                             100);
    const std::string csv = matrix_csv(m);
    CHECK(csv.substr(0, csv.find('\n')) == "theta1,0,0.5,1");
    CHECK(csv.find("\n0,1.000000,0.500000,0.000000\n") != std::string::npos);
    CHECK(csv == matrix_csv(m));

    const std::string ppm = matrix_ppm(m);
    CHECK(ppm.substr(0, 11) == "P6\n3 3\n255\n");
    CHECK(ppm.size() == 11 + 3 * 9);
    // top-left pixel is the theta1 = 1, theta2 = 0 cell: -1 is saturated blue
    CHECK(uint8_t(ppm[11]) == 0);
    CHECK(uint8_t(ppm[12]) == 0);
    CHECK(uint8_t(ppm[13]) == 255);
}

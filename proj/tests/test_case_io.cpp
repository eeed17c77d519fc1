#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "acuc/case_io.hpp"
#include "test_support.hpp"

using namespace acuc;

namespace {
constexpr double kPi = 3.14159265358979323846;

const char* kTinyCase = R"(function mpc = tiny
mpc.baseMVA = 100;
mpc.bus = [
	1	3	0	0	0	0	1	1	0	345	1	1.1	0.9;
	2	1	50	10	2	5	1	1	0	345	1	1.05	0.95;
	3	1	30	-5	0	0	1	1	0	345	1	1.1	0.9;
];
mpc.gen = [
	1	0	0	100	-100	1	100	1	150	20;
	1	0	0	50	-50	1	100	0	80	10;
	3	0	0	40	-40	1	100	1	60	5;
];
mpc.branch = [
	1	2	0.01	0.1	0.02	120	0	0	0	0	1	-30	30;
	2	3	0.02	0.2	0	80	0	0	0.98	2	1	-25	25;
	1	2	0.01	0.1	0	90	0	0	0	0	1	-30	30;
	1	3	0.05	0.3	0	60	0	0	0	0	0	-30	30;
];
mpc.gencost = [
	2	100	0	3	0.04	30	10;
	2	100	0	3	0.01	10	0;
	2	50	0	2	25	5;
];
)";
}  // namespace

TEST_CASE("branch admittance of a pure reactance") {
  const auto y = branch_admittance(0.0, 1.0, 0.0, 1.0, 0.0);
  CHECK(y.gff == doctest::Approx(0.0));
  CHECK(y.bff == doctest::Approx(-1.0));
  CHECK(y.gft == doctest::Approx(0.0));
  CHECK(y.bft == doctest::Approx(1.0));
  CHECK(y.gtf == doctest::Approx(0.0));
  CHECK(y.btf == doctest::Approx(1.0));
  CHECK(y.gtt == doctest::Approx(0.0));
  CHECK(y.btt == doctest::Approx(-1.0));
}

TEST_CASE("branch admittance with x=0.1") {
  const auto y = branch_admittance(0.0, 0.1, 0.0, 1.0, 0.0);
  CHECK(y.gff == doctest::Approx(0.0));
  CHECK(y.bff == doctest::Approx(-10.0));
  CHECK(y.gft == doctest::Approx(0.0));
  CHECK(y.bft == doctest::Approx(10.0));
}

TEST_CASE("branch admittance with a quarter-turn phase shift") {
  // complex arithmetic by hand: ys = -j, Yft = -ys e^{j pi/2} = -1
  const auto y = branch_admittance(0.0, 1.0, 0.0, 1.0, kPi / 2.0);
  CHECK(y.gft == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(y.bft == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(y.gtf == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(y.btf == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("branch admittance with off-nominal tap") {
  const auto y = branch_admittance(0.0, 1.0, 0.0, 2.0, 0.0);
  CHECK(y.bff == doctest::Approx(-0.25));
  CHECK(y.bft == doctest::Approx(0.5));
  CHECK(y.btf == doctest::Approx(0.5));
  CHECK(y.btt == doctest::Approx(-1.0));
}

TEST_CASE("zero impedance rejected") {
  CHECK_THROWS_AS(branch_admittance(0.0, 0.0, 0.1, 1.0, 0.0), ValidationError);
}

TEST_CASE("parse small case with conversions and status filtering") {
  const Network net = parse_case(kTinyCase);
  CHECK(net.base_mva == 100.0);
  CHECK(net.buses.size() == 3);
  CHECK(net.generators.size() == 2);  // one gen out of service
  CHECK(net.branches.size() == 3);    // one branch out of service, parallel pair kept

  CHECK(net.buses[1].pd == doctest::Approx(0.5));
  CHECK(net.buses[1].qd == doctest::Approx(0.1));
  CHECK(net.buses[1].gs_shunt == doctest::Approx(0.02));
  CHECK(net.buses[1].bs_shunt == doctest::Approx(0.05));
  CHECK(net.buses[2].qd == doctest::Approx(-0.05));

  CHECK(net.generators[0].pmax == doctest::Approx(1.5));
  CHECK(net.generators[0].pmin == doctest::Approx(0.2));
  CHECK(net.generators[0].cost_quadratic == doctest::Approx(0.04 * 100 * 100));
  CHECK(net.generators[0].cost_linear == doctest::Approx(30 * 100));
  CHECK(net.generators[0].cost_constant == doctest::Approx(10));
  // two-coefficient polynomial
  CHECK(net.generators[1].cost_quadratic == 0.0);
  CHECK(net.generators[1].cost_linear == doctest::Approx(2500));
  CHECK(net.generators[1].cost_constant == doctest::Approx(5));

  const BranchRecord& taped = net.branches[1];
  CHECK(taped.tap == doctest::Approx(0.98));
  CHECK(taped.shift == doctest::Approx(2.0 * kPi / 180.0));
  CHECK(taped.s_max == doctest::Approx(0.8));
  CHECK(taped.angle_max == doctest::Approx(25.0 * kPi / 180.0));
}

TEST_CASE("9-bus case has expected shape") {
  const Network net = parse_case(test::read_file(test::data_path("case9.m")));
  CHECK(net.buses.size() == 9);
  CHECK(net.branches.size() == 9);
  CHECK(net.generators.size() == 3);
}

TEST_CASE("missing gencost is a parse error") {
  std::string text = kTinyCase;
  text.replace(text.find("mpc.gencost"), 11, "mpc.nothing");
  CHECK_THROWS_AS(parse_case(text), ParseError);
}

TEST_CASE("disconnected network rejected") {
  CHECK_THROWS_AS(
      test::make_network(
          {test::bus(1, BusType::Ref, 0, 0), test::bus(2, BusType::PQ, 0.1, 0),
           test::bus(3, BusType::PQ, 0.1, 0)},
          {test::line(1, 2, 0.01, 0.1)}, {test::gen(1, 0, 1, -1, 1, 0, 100)}),
      ValidationError);
}

TEST_CASE("round trip through the canonical serialization is exact") {
  const Network net = parse_case(test::read_file(test::data_path("case9.m")));
  const Network back = parse_network_json(serialize_network(net));
  REQUIRE(back.buses.size() == net.buses.size());
  REQUIRE(back.branches.size() == net.branches.size());
  REQUIRE(back.generators.size() == net.generators.size());
  for (std::size_t i = 0; i < net.buses.size(); ++i) {
    CHECK(back.buses[i].pd == net.buses[i].pd);
    CHECK(back.buses[i].qd == net.buses[i].qd);
    CHECK(back.buses[i].vmin == net.buses[i].vmin);
  }
  for (std::size_t l = 0; l < net.branches.size(); ++l) {
    CHECK(back.branches[l].x == net.branches[l].x);
    CHECK(std::abs(back.branches[l].y.bff - net.branches[l].y.bff) <= 1e-12);
    CHECK(std::abs(back.branches[l].y.gft - net.branches[l].y.gft) <= 1e-12);
  }
  for (std::size_t g = 0; g < net.generators.size(); ++g)
    CHECK(back.generators[g].cost_linear == net.generators[g].cost_linear);
}

TEST_CASE("admittance blocks reconstruct the two-port matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(0.0, 0.2);
  std::uniform_real_distribution<double> ux(0.05, 0.5);
  std::uniform_real_distribution<double> ub(0.0, 0.4);
  std::uniform_real_distribution<double> utap(0.9, 1.1);
  std::uniform_real_distribution<double> ushift(-0.2, 0.2);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = ur(rng), x = ux(rng), b = ub(rng), tap = utap(rng),
                 shift = ushift(rng);
    const auto y = branch_admittance(r, x, b, tap, shift);
    const std::complex<double> ys = 1.0 / std::complex<double>(r, x);
    const std::complex<double> ysh(0.0, b / 2.0);
    const std::complex<double> tc = std::polar(tap, shift);
    const std::complex<double> yff = (ys + ysh) / std::norm(tc);
    const std::complex<double> yft = -ys / std::conj(tc);
    CHECK(std::abs(std::complex<double>(y.gff, y.bff) - yff) <= 1e-12);
    CHECK(std::abs(std::complex<double>(y.gft, y.bft) - yft) <= 1e-12);
  }
}

TEST_CASE("adjacency is symmetric") {
  const Network net = parse_case(kTinyCase);
  for (std::size_t i = 0; i < net.buses.size(); ++i) {
    for (std::size_t l : net.adjacency[i]) {
      const BranchRecord& br = net.branches[l];
      const std::size_t j =
          net.index_of(br.from) == i ? net.index_of(br.to) : net.index_of(br.from);
      const auto& peer = net.adjacency[j];
      CHECK(std::find(peer.begin(), peer.end(), l) != peer.end());
    }
  }
}

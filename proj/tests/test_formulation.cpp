#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "acuc/case_io.hpp"
#include "acuc/formulation.hpp"
#include "test_support.hpp"

using namespace acuc;

namespace {

UcInstance nine_bus_instance() {
  const Network net = parse_case(test::read_file(test::data_path("case9.m")));
  return generate_instance(net, 1);
}

template <typename Model>
std::set<RowTag> tags_of(const Model& model) {
  std::set<RowTag> tags;
  if constexpr (std::is_same_v<Model, NlpModel>) {
    for (RowTag t : model.ir.emitted_tags()) tags.insert(t);
    for (const NonlinearRow& row : model.nonlinear) tags.insert(row.tag);
  } else {
    for (RowTag t : model.emitted_tags()) tags.insert(t);
  }
  return tags;
}

}  // namespace

TEST_CASE("dispatch model variable count per period") {
  const UcInstance inst = nine_bus_instance();
  const NlpModel model = build_mopf(inst);
  // 9 c_ii + 9 c_ij + 9 s_ij + 9 theta + 3 p + 3 q + 36 flows per period
  CHECK(model.ir.variables.size() == 78u * 24u);
  CHECK(model.quadratic_objective.size() == 3u * 24u);
  CHECK(model.nonlinear.size() == 2u * 9u * 24u);
}

TEST_CASE("commitment model has three binaries per generator-period") {
  const UcInstance inst = nine_bus_instance();
  const ModelIR model = build_misocp(inst);
  CHECK(model.binary_indices().size() == 3u * 3u * 24u);
}

TEST_CASE("emitted tags match the expected constraint lists") {
  const UcInstance inst = nine_bus_instance();
  auto expect = [&](Formulation kind, const std::set<RowTag>& got) {
    const auto want_list = expected_tags(kind, inst);
    const std::set<RowTag> want(want_list.begin(), want_list.end());
    CHECK(got == want);
  };
  expect(Formulation::Mopf, tags_of(build_mopf(inst)));
  expect(Formulation::Socp, tags_of(build_socp(inst)));
  expect(Formulation::DcMopf, tags_of(build_dc_mopf(inst)));
  expect(Formulation::UcMinlp, tags_of(build_uc_minlp(inst)));
  expect(Formulation::Misocp, tags_of(build_misocp(inst)));
  expect(Formulation::DcUc, tags_of(build_dc_uc(inst)));
}

TEST_CASE("conic relaxation shares the linear core of the dispatch model") {
  const UcInstance inst = nine_bus_instance();
  const NlpModel nlp = build_mopf(inst);
  const ModelIR socp = build_socp(inst);
  auto count = [](const std::vector<LinearRow>& rows, RowTag tag) {
    return std::count_if(rows.begin(), rows.end(),
                         [tag](const LinearRow& r) { return r.tag == tag; });
  };
  for (RowTag tag : {RowTag::PBalance, RowTag::QBalance, RowTag::FlowPFwd,
                     RowTag::FlowPBwd, RowTag::FlowQFwd, RowTag::FlowQBwd,
                     RowTag::RampUp, RowTag::GenPLimit})
    CHECK(count(nlp.ir.linear, tag) == count(socp.linear, tag));
  CHECK(socp.rsoc.size() ==
        nlp.nonlinear.size() / 2 + 3u * 24u);  // relaxed products + cost epigraphs
  CHECK(socp.soc.size() == nlp.ir.soc.size());
}

TEST_CASE("all-on schedule implies no startups or shutdowns") {
  const UcInstance inst = nine_bus_instance();
  const CommitmentSchedule sched = all_on_schedule(inst);
  for (const auto& row : sched.v)
    for (int value : row) CHECK(value == 0);
  for (const auto& row : sched.w)
    for (int value : row) CHECK(value == 0);
  CHECK(schedule_is_logical(sched, inst));
}

TEST_CASE("startups equal shutdowns around the cycle") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 0.4, 0.1)}, {},
      {test::gen(1, 0.1, 1.0, -1, 1, 0, 10)});
  UcInstance inst = test::desk_instance(net, 8);
  for (const auto& u : {std::vector<int>{1, 1, 0, 0, 1, 1, 0, 0},
                        std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0},
                        std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1}}) {
    const CommitmentSchedule sched = schedule_from_commitment(inst, {u});
    int startups = 0, shutdowns = 0;
    for (int t = 0; t < 8; ++t) {
      startups += sched.v[0][t];
      shutdowns += sched.w[0][t];
    }
    CHECK(startups == shutdowns);
  }
}

TEST_CASE("logically feasible four-period patterns with min-up two") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 0.4, 0.1)}, {},
      {test::gen(1, 0.1, 1.0, -1, 1, 0, 10)});
  UcInstance inst = test::desk_instance(net, 4);
  inst.gen_params[0].min_up = 2;
  inst.gen_params[0].min_down = 2;
  std::vector<std::vector<int>> feasible;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> u(4);
    for (int t = 0; t < 4; ++t) u[t] = (mask >> t) & 1;
    const CommitmentSchedule sched = schedule_from_commitment(inst, {u});
    if (schedule_is_logical(sched, inst)) feasible.push_back(u);
  }
  // constant patterns plus the four rotations of on-on-off-off
  CHECK(feasible.size() == 6);
  CHECK(std::find(feasible.begin(), feasible.end(), std::vector<int>{1, 0, 1, 0}) ==
        feasible.end());
}

TEST_CASE("direct-current flow definition uses the inverse reactance") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 0.0, 0.0), test::bus(2, BusType::PQ, 0.1, 0.0)},
      {test::line(1, 2, 0.0, 0.1)}, {test::gen(1, 0.0, 1.0, -1, 1, 0, 10)});
  const UcInstance inst = test::desk_instance(net, 2);
  const ModelIR model = build_dc_mopf(inst);
  const auto row = std::find_if(model.linear.begin(), model.linear.end(),
                                [](const LinearRow& r) {
                                  return r.tag == RowTag::DcFlowDef && r.period == 0;
                                });
  REQUIRE(row != model.linear.end());
  // f - 10*(theta_i - theta_j) = 0, so theta difference 0.01 gives f = 0.1
  double coeff_f = 0, coeff_ti = 0, coeff_tj = 0;
  for (const Term& term : row->terms) {
    const VariableRef& var = model.variables[term.var];
    if (var.kind == VarKind::DcFlow) coeff_f = term.coeff;
    if (var.kind == VarKind::Theta && var.entity == 0) coeff_ti = term.coeff;
    if (var.kind == VarKind::Theta && var.entity == 1) coeff_tj = term.coeff;
  }
  CHECK(coeff_f == doctest::Approx(1.0));
  CHECK(coeff_ti == doctest::Approx(-10.0));
  CHECK(coeff_tj == doctest::Approx(10.0));
}

TEST_CASE("gating rows force shut generators to zero") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 0.4, 0.1)}, {},
      {test::gen(1, 0.1, 1.0, -0.5, 0.5, 0, 10)});
  UcInstance inst = test::desk_instance(net, 2);
  CommitmentSchedule off;
  off.u = {{0, 0}};
  off.v = {{0, 0}};
  off.w = {{0, 0}};
  const NlpModel model = build_mopf(inst, &off);
  int zero_cap_rows = 0;
  for (const auto& row : model.ir.linear) {
    if (row.tag == RowTag::GenPLimit || row.tag == RowTag::GenQLimit) {
      CHECK(row.rhs == 0.0);
      ++zero_cap_rows;
    }
  }
  CHECK(zero_cap_rows == 8);  // two-sided p and q rows over two periods
}

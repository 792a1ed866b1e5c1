#include "gds/transforms.hpp"

#include "doctest.h"
#include "gds/audit.hpp"
#include "gds/errors.hpp"
#include "gds/phase_space.hpp"
#include "oracles.hpp"

using namespace gds;

namespace {

SystemDescription or_system() {
  Graph g(2, {{1, 2}});
  return SystemDescription(g, {LocalFunction::threshold(2, 1), LocalFunction::threshold(2, 1)});
}

SystemDescription swap_system() {
  Graph g(2, {{1, 2}});
  return SystemDescription(g, {LocalFunction::table(2, "0101"), LocalFunction::table(2, "0011")});
}

}  // namespace

TEST_CASE("parallelize the OR edge system") {
  SystemDescription par = parallelize(or_system(), UpdateSchedule::identity(2));
  // Both coordinates become x1 OR x2, and the parallel map equals the
  // sequential one pointwise.
  for (std::uint32_t u = 0; u < 4; ++u) {
    State x(2, u);
    CHECK(pds_step(par, x) == sds_step(or_system(), UpdateSchedule::identity(2), x));
  }
  CHECK(par.monotone());
  CHECK(par.graph().edges().size() == 1);  // still depends on each other
}

TEST_CASE("parallelizing projections is the identity transform") {
  Graph g(3, {{1, 2}, {2, 3}});
  std::vector<LocalFunction> proj;
  proj.push_back(LocalFunction::table(2, "0011"));
  proj.push_back(LocalFunction::table(3, "00110011"));
  proj.push_back(LocalFunction::table(2, "0101"));
  SystemDescription sys(g, proj);
  SystemDescription par = parallelize(sys, UpdateSchedule::identity(3));
  // Non-interacting maps: sequential equals parallel, and no dependencies
  // survive support minimization.
  CHECK(par.graph().edges().empty());
  for (std::uint32_t u = 0; u < 8; ++u) {
    State x(3, u);
    CHECK(pds_step(par, x) == x);
  }
}

TEST_CASE("parallelization correctness and monotonicity across the sweep") {
  for (int n = 2; n <= 3; ++n) {
    auto schedules = audit::all_schedules(n);
    for (const Graph& g : audit::all_graphs(n)) {
      audit::for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
        for (const auto& pi : schedules) {
          SystemDescription par = parallelize(sys, pi);
          CHECK(par.monotone());
          for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u) {
            State x(n, u);
            CHECK(pds_step(par, x) == sds_step(sys, pi, x));
          }
        }
      });
    }
  }
  // n = 4: random monotone systems across every schedule.
  std::mt19937 rng(5);
  auto schedules4 = audit::all_schedules(4);
  for (int trial = 0; trial < 40; ++trial) {
    SystemDescription sys = audit::random_monotone_system(4, rng);
    for (const auto& pi : schedules4) {
      SystemDescription par = parallelize(sys, pi);
      CHECK(par.monotone());
      for (std::uint32_t u = 0; u < 16; ++u) {
        State x(4, u);
        CHECK(pds_step(par, x) == sds_step(sys, pi, x));
      }
    }
  }
}

TEST_CASE("round trip: derive_sequentialization inverts parallelize") {
  for (const Graph& g : audit::all_graphs(3)) {
    auto schedules = audit::all_schedules(3);
    audit::for_each_threshold_system(g, 2, [&](const SystemDescription& sys) {
      for (const auto& pi : schedules) {
        SystemDescription par = parallelize(sys, pi);
        SequentializationResult r = derive_sequentialization(par, pi);
        REQUIRE(r.status == SeqStatus::ok);
        SystemDescription back = r.derived_system();
        CHECK(back.monotone());
        for (std::uint32_t u = 0; u < 8; ++u) {
          State x(3, u);
          CHECK(sds_step(back, pi, x) == pds_step(par, x));
          CHECK(sds_step(back, pi, x) == sds_step(sys, pi, x));
        }
      }
    });
  }
}

TEST_CASE("sequentialization result carries domains") {
  SystemDescription par = parallelize(or_system(), UpdateSchedule::identity(2));
  SequentializationResult r = derive_sequentialization(par, UpdateSchedule::identity(2));
  REQUIRE(r.status == SeqStatus::ok);
  REQUIRE(r.domains.size() == 2);
  CHECK(r.domains[0].size() == 4);  // first position is constrained everywhere
  CHECK_FALSE(r.domains[1].empty());
}

TEST_CASE("the parallel swap has no monotone sequentialization under any schedule") {
  SystemDescription sys = swap_system();
  REQUIRE(sys.monotone());
  for (const auto& pi : audit::all_schedules(2)) {
    SequentializationResult r = derive_sequentialization(sys, pi);
    CHECK(r.status != SeqStatus::ok);
  }
}

TEST_CASE("non-monotone parallel input is rejected") {
  Graph g(2, {{1, 2}});
  SystemDescription nonmono(g, {LocalFunction::table(2, "0110"),
                                LocalFunction::threshold(2, 1)});
  CHECK_THROWS_AS(derive_sequentialization(nonmono, UpdateSchedule::identity(2)), NotMonotone);
}

TEST_CASE("goles construction, n = 2") {
  SystemDescription sys = goles_pds(2);
  CHECK(pds_step(sys, State::parse("01")).str() == "10");
  CHECK(pds_step(sys, State::parse("10")).str() == "01");
  CHECK(pds_step(sys, State::parse("00")).str() == "00");
  CHECK(pds_step(sys, State::parse("11")).str() == "11");
  CHECK(sys.monotone());
  CHECK_THROWS_AS(goles_pds(1), std::invalid_argument);
}

TEST_CASE("goles global map is order preserving and cycles the middle layer, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    SystemDescription sys = goles_pds(n);
    CHECK(sys.monotone());  // every per-vertex table is monotone
    std::uint32_t size = std::uint32_t(1) << n;
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b) {
        State x(n, a), y(n, b);
        if (leq(x, y)) CHECK(leq(pds_step(sys, x), pds_step(sys, y)));
      }
    PhaseSpace ps = PhaseSpace::build(sys, Driver::pds());
    std::uint64_t p = sperner_bound(n);
    CHECK(ps.max_cycle_length() == p);
    // Exactly one nontrivial cycle and its states are the middle layer.
    int nontrivial = 0;
    for (const auto& c : ps.cycles())
      if (c.size() > 1) {
        ++nontrivial;
        CHECK(c.size() == p);
        for (const auto& x : c) CHECK(x.count_ones() == n / 2);
      }
    CHECK(nontrivial == 1);
  }
}

TEST_CASE("goles n=4 never sequentializes") {
  SystemDescription sys = goles_pds(4);
  for (const auto& pi : audit::all_schedules(4)) {
    SequentializationResult r = derive_sequentialization(sys, pi);
    CHECK(r.status != SeqStatus::ok);
  }
}

TEST_CASE("derived witnesses are concrete") {
  // The swap system's failure comes with a usable witness.
  SequentializationResult r =
      derive_sequentialization(swap_system(), UpdateSchedule::identity(2));
  REQUIRE(r.status != SeqStatus::ok);
  if (r.status == SeqStatus::conflict) {
    REQUIRE(r.conflict_witness.has_value());
    CHECK(r.conflict_witness->first.n() == 2);
  } else {
    REQUIRE(r.monotonicity_witness.has_value());
    CHECK(leq(r.monotonicity_witness->first, r.monotonicity_witness->second));
  }
  CHECK(r.witness_vertex >= 1);
}

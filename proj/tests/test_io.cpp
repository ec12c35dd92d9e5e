#include "qcap/channel_io.hpp"

#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "qcap/sampling.hpp"
#include "qcap/surface.hpp"
#include "test_util.hpp"

using namespace qcap;

TEST_SUITE("io") {

TEST_CASE("channel JSON round trips bit-exactly") {
  for (int trial = 0; trial < 20; ++trial) {
    auto rng = trial_rng(81, trial);
    const QuantumChannel t = haar_random_channel(3, 2, rng);
    const QuantumChannel back = channel_from_json(channel_to_json(t));
    CHECK(back.d_in() == t.d_in());
    CHECK(back.d_out() == t.d_out());
    REQUIRE(back.env_dim() == t.env_dim());
    for (int i = 0; i < t.env_dim(); ++i) {
      for (int r = 0; r < t.d_out(); ++r) {
        for (int c = 0; c < t.d_in(); ++c) {
          // bitwise equality, not approximate
          CHECK(back.kraus()[i](r, c).real() == t.kraus()[i](r, c).real());
          CHECK(back.kraus()[i](r, c).imag() == t.kraus()[i](r, c).imag());
        }
      }
    }
  }
}

TEST_CASE("malformed channel JSON is rejected") {
  CHECK_THROWS_AS(channel_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(channel_from_json("{}"), std::runtime_error);
  CHECK_THROWS_AS(
      channel_from_json(R"({"d_in": 2, "d_out": 2, "kraus": []})"),
      std::runtime_error);
  CHECK_THROWS_AS(
      channel_from_json(
          R"({"d_in": 2, "d_out": 2, "kraus": [[[[1,0]],[[0,0]]]]})"),
      std::runtime_error);
}

TEST_CASE("non-TP files load for validation but carry the residual") {
  const std::string text =
      R"({"d_in": 1, "d_out": 1, "kraus": [[[[1.1, 0]]]]})";
  const QuantumChannel t = channel_from_json(text);
  CHECK(t.tp_residual() == doctest::Approx(0.21).epsilon(1e-12));
}

TEST_CASE("report and stats serialize to the documented schema") {
  DegradabilityReport r;
  r.verdict = Verdict::Degradable;
  r.deg_margin = 0.25;
  r.antideg_margin = -0.5;
  r.condition_flags = {"near-boundary"};
  const auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["verdict"] == "degradable");
  CHECK(j["deg_margin"] == 0.25);
  CHECK(j["condition_flags"][0] == "near-boundary");

  SampleStats s;
  s.d = 3;
  s.d_env = 2;
  s.n = 100;
  s.seed = 7;
  s.degradable = 0.12;
  s.neither = 0.88;
  const auto js = nlohmann::json::parse(stats_to_json(s));
  CHECK(js["d"] == 3);
  CHECK(js["dE"] == 2);
  CHECK(js["fractions"]["degradable"] == 0.12);
  CHECK(js["fractions"]["anti-degradable"] == 0.0);
  CHECK(js.contains("wilson_halfwidth"));

  CapacityResult cap;
  cap.value = 1.0;
  cap.kind = CapacityKind::Exact;
  cap.achieved_p = 0.5;
  const auto jc = nlohmann::json::parse(capacity_to_json(cap));
  CHECK(jc["value"] == 1.0);
  CHECK(jc["kind"] == "exact");
  CHECK(jc["achieved_p"] == 0.5);
}

TEST_CASE("surface rows use nine decimal places") {
  CHECK(surface_row(0.0, 0.0, 1.0, Verdict::Degradable) ==
        "0.000000000,0.000000000,1.000000000,degradable");
  CHECK(surface_row(std::numbers::pi, 0.5, 0.0, Verdict::Both) ==
        "3.141592654,0.500000000,0.000000000,both");
}

TEST_CASE("surface tables carry consistent capacity and verdict columns") {
  const SurfaceTable table = capacity_surface(0.0, std::numbers::pi, 0.0,
                                              std::numbers::pi, 11);
  CHECK(table.rows.size() == 121);
  CHECK(table.rows.front().capacity == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& row : table.rows) {
    CHECK(row.capacity >= 0.0);
    CHECK(row.capacity <= 1.0 + 1e-9);
    const bool zero = row.capacity == 0.0;
    const bool deg_only = row.verdict == Verdict::Degradable;
    CHECK(zero == !deg_only);
  }
  const std::string csv = surface_to_csv(table);
  CHECK(csv.rfind("alpha,beta,capacity,verdict\n", 0) == 0);
  CHECK_THROWS_AS(capacity_surface(0, 1, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("verdict exit codes follow the CLI contract") {
  CHECK(verdict_exit_code(Verdict::Degradable) == 0);
  CHECK(verdict_exit_code(Verdict::AntiDegradable) == 0);
  CHECK(verdict_exit_code(Verdict::Both) == 0);
  CHECK(verdict_exit_code(Verdict::Neither) == 0);
  CHECK(verdict_exit_code(Verdict::Inconclusive) == 2);
}

}  // TEST_SUITE

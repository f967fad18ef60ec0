#include <doctest.h>

#include "temp_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "experts/environments.hpp"

using namespace experts;

namespace {

MechanismSpec alternating(std::size_t n, std::size_t n0) {
  MechanismSpec spec;
  spec.kind = MechanismKind::AlternatingAdversarial;
  spec.n_experts = n;
  spec.n_effective = n0;
  return spec;
}

MechanismSpec switching(std::size_t n, std::size_t n0, std::int64_t t1) {
  MechanismSpec spec;
  spec.kind = MechanismKind::SwitchingAdversarial;
  spec.n_experts = n;
  spec.n_effective = n0;
  spec.switch_time = t1;
  return spec;
}

MechanismSpec stochastic(std::size_t n, std::size_t n0, std::uint64_t seed) {
  MechanismSpec spec;
  spec.kind = MechanismKind::StochasticGap;
  spec.n_experts = n;
  spec.n_effective = n0;
  spec.seed = seed;
  return spec;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = temp_path("_losses.csv");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("alternating losses alternate the effective halves") {
  const MechanismSpec spec = alternating(4, 2);
  CHECK(alternating_losses(spec, 1).losses == std::vector<double>{0, 1, 1, 1});
  CHECK(alternating_losses(spec, 2).losses == std::vector<double>{1, 0, 1, 1});
  CHECK(alternating_losses(spec, 3).losses == std::vector<double>{0, 1, 1, 1});

  const MechanismSpec wide = alternating(6, 4);
  CHECK(alternating_losses(wide, 3).losses ==
        std::vector<double>{0, 0, 1, 1, 1, 1});
  CHECK(alternating_losses(wide, 4).losses ==
        std::vector<double>{1, 1, 0, 0, 1, 1});
}

TEST_CASE("alternating window accounting") {
  const MechanismSpec spec = alternating(5, 2);
  // Over every window {2k+1, 2k+2} each effective expert accumulates exactly
  // 1 and each ineffective expert exactly 2; hence min_i L_i(T) = T/2 at even T.
  std::vector<double> cum(5, 0.0);
  for (std::int64_t t = 1; t <= 40; ++t) {
    const LossVector loss = alternating_losses(spec, t);
    for (std::size_t i = 0; i < 5; ++i) cum[i] += loss[i];
    if (t % 2 == 0) {
      CHECK(cum[0] == static_cast<double>(t) / 2);
      CHECK(cum[1] == static_cast<double>(t) / 2);
      CHECK(cum[2] == static_cast<double>(t));
      CHECK(*std::min_element(cum.begin(), cum.end()) == static_cast<double>(t) / 2);
    }
  }
}

TEST_CASE("switching losses follow the alternating phase then lock on expert 0") {
  const MechanismSpec spec = switching(3, 2, 4);
  CHECK(switching_losses(spec, 3).losses == std::vector<double>{0, 1, 1});
  CHECK(switching_losses(spec, 5).losses == std::vector<double>{0, 1, 1});
  CHECK(switching_losses(spec, 6).losses == std::vector<double>{0, 1, 1});
  for (std::int64_t t = 1; t <= 4; ++t) {
    CHECK(switching_losses(spec, t).losses ==
          alternating_losses(alternating(3, 2), t).losses);
  }
  // Cumulative losses at t = 10 with t1 = 4: (t1/2, (2t - t1)/2, t).
  std::vector<double> cum(3, 0.0);
  for (std::int64_t t = 1; t <= 10; ++t) {
    const LossVector loss = switching_losses(spec, t);
    for (std::size_t i = 0; i < 3; ++i) cum[i] += loss[i];
  }
  CHECK(cum == std::vector<double>{2, 8, 10});
}

TEST_CASE("stochastic gap losses") {
  const MechanismSpec spec = stochastic(3, 1, 42);
  for (std::int64_t t = 1; t <= 50; ++t) {
    const LossVector loss = stochastic_gap_losses(spec, t, spec.seed);
    CHECK((loss[0] == 0.0 || loss[0] == 1.0));
    CHECK(loss[1] == 1.0);
    CHECK(loss[2] == 1.0);
  }
}

TEST_CASE("stochastic gap is a pure function of (spec, t, seed)") {
  const MechanismSpec spec = stochastic(4, 2, 7);
  bool any_difference = false;
  for (std::int64_t t = 1; t <= 100; ++t) {
    const LossVector a = stochastic_gap_losses(spec, t, 7);
    const LossVector b = stochastic_gap_losses(spec, t, 7);
    CHECK(a.losses == b.losses);
    if (a.losses != stochastic_gap_losses(spec, t, 8).losses) any_difference = true;
  }
  CHECK(any_difference);  // distinct seeds give distinct streams
}

TEST_CASE("stochastic gap empirical means") {
  const MechanismSpec spec = stochastic(2, 2, 2024);
  double sum0 = 0.0, sum1 = 0.0;
  const int rounds = 100000;
  for (int t = 1; t <= rounds; ++t) {
    const LossVector loss = stochastic_gap_losses(spec, t, spec.seed);
    sum0 += loss[0];
    sum1 += loss[1];
  }
  CHECK(sum0 / rounds == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::fabs(sum0 / rounds - 0.5) < 0.01);
  CHECK(std::fabs(sum1 / rounds - 0.5) < 0.01);

  const MechanismSpec gap = stochastic(3, 1, 99);
  double bad = 0.0;
  for (int t = 1; t <= 1000; ++t) bad += stochastic_gap_losses(gap, t, 99)[2];
  CHECK(bad == 1000.0);  // ineffective experts always lose exactly 1
}

TEST_CASE("mechanism validation") {
  CHECK_THROWS_AS(alternating(4, 3).validate(), Error);   // odd N0
  CHECK_THROWS_AS(alternating(4, 1).validate(), Error);   // cannot split halves
  CHECK_THROWS_AS(switching(4, 2, 5).validate(), Error);  // odd t1
  CHECK_THROWS_AS(switching(4, 2, 0).validate(), Error);
  CHECK_THROWS_AS(stochastic(1, 1, 0).validate(), Error);  // N < 2
  CHECK_THROWS_AS(stochastic(4, 5, 0).validate(), Error);  // N0 > N
  CHECK_NOTHROW(alternating(2, 2).validate());
  CHECK_NOTHROW(stochastic(2, 1, 0).validate());
}

TEST_CASE("file streams parse, validate, and index rows") {
  MechanismSpec spec;
  spec.kind = MechanismKind::FileStream;
  spec.n_experts = 2;

  SUBCASE("valid file") {
    TempFile file("0.5,1\n0,1\n");
    spec.path = file.path;
    const FileLossStream stream(spec);
    CHECK(stream.rows() == 2);
    CHECK(stream.at(1).losses == std::vector<double>{0.5, 1.0});
    CHECK(stream.at(2).losses == std::vector<double>{0.0, 1.0});
    CHECK_THROWS_WITH_AS(stream.at(3), doctest::Contains("MissingRow"), Error);
  }
  SUBCASE("out-of-range loss") {
    TempFile file("0.5,1.7\n");
    spec.path = file.path;
    CHECK_THROWS_WITH_AS(FileLossStream{spec}, doctest::Contains("OutOfRangeLoss"),
                         Error);
  }
  SUBCASE("unparsable field") {
    TempFile file("0.5,zebra\n");
    spec.path = file.path;
    CHECK_THROWS_WITH_AS(FileLossStream{spec}, doctest::Contains("ParseError"), Error);
  }
  SUBCASE("wrong field count") {
    TempFile file("0.5,0.5,0.5\n");
    spec.path = file.path;
    CHECK_THROWS_WITH_AS(FileLossStream{spec}, doctest::Contains("ParseError"), Error);
  }
  SUBCASE("missing file") {
    spec.path = "/nonexistent/losses.csv";
    CHECK_THROWS_WITH_AS(FileLossStream{spec}, doctest::Contains("IoError"), Error);
  }
}

TEST_CASE("hash64 separates nearby inputs") {
  CHECK(hash64(1, 2) != hash64(1, 3));
  CHECK(hash64(1, 2) != hash64(2, 2));
  CHECK(hash64(1, 2) == hash64(1, 2));
}

#include "qcap/channel.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

using namespace qcap;
using namespace qcap::testing;

namespace {

constexpr double pi = std::numbers::pi;

CMatrix sigma_z() {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

QuantumChannel random_channel(std::mt19937_64& rng, int d, int d_env) {
  CMatrix g = random_complex(rng, d * d_env, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d * d_env, d);
  return from_isometry(q, d_env);
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("apply: identity channel and the alpha = pi/2 damping limit") {
  std::mt19937_64 rng(31);
  const CMatrix rho = random_density(rng, 2);
  CHECK((qcap::apply(identity_channel(2), rho) - rho).norm() <= 1e-14);

  // (pi/2, 0) sends every state to |1><1|.
  const QuantumChannel t = from_normal_form({pi / 2, 0.0});
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(1, 1) = 1.0;
  CHECK((qcap::apply(t, rho) - expected).norm() <= 1e-14);
}

TEST_CASE("apply outputs valid density matrices") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel t = random_channel(rng, 3, 2);
    const CMatrix out = qcap::apply(t, random_density(rng, 3));
    CHECK(std::abs(out.trace().real() - 1.0) <= 1e-9);
    const auto eig = herm_eigensystem(out);
    CHECK(eig.eigenvalues.minCoeff() >= -1e-10);
  }
}

TEST_CASE("conjugate of the identity maps every state to the unit scalar") {
  const QuantumChannel tc = conjugate(identity_channel(2));
  CHECK(tc.d_out() == 1);
  std::mt19937_64 rng(33);
  const CMatrix out = qcap::apply(tc, random_density(rng, 2));
  CHECK(out.rows() == 1);
  CHECK(std::abs(out(0, 0) - 1.0) <= 1e-12);
}

TEST_CASE("conjugate of the normal form flips beta to pi/2 - beta") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = uniform(rng, -pi, pi);
    const double beta = uniform(rng, -pi, pi);
    const QuantumChannel tc = conjugate(from_normal_form({alpha, beta}));
    const QuantumChannel tn = from_normal_form({alpha, pi / 2 - beta});
    for (int i = 0; i < 2; ++i) {
      CHECK((tc.kraus()[i] - tn.kraus()[i]).cwiseAbs().maxCoeff() <= 1e-15);
    }
  }
}

TEST_CASE("conjugating twice returns the original Kraus list") {
  std::mt19937_64 rng(35);
  for (auto [d, d_env] : {std::pair{2, 2}, {3, 2}, {2, 4}, {3, 3}}) {
    const QuantumChannel t = random_channel(rng, d, d_env);
    const QuantumChannel tcc = conjugate(conjugate(t));
    REQUIRE(tcc.env_dim() == t.env_dim());
    for (int i = 0; i < t.env_dim(); ++i) {
      CHECK((tcc.kraus()[i] - t.kraus()[i]).norm() == 0.0);
    }
  }
}

TEST_CASE("jamiolkowski of the identity is the maximally entangled operator") {
  const auto tau = jamiolkowski(identity_channel(2));
  const auto eig = herm_eigensystem(tau.matrix);
  CHECK(eig.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k)
    CHECK(std::abs(eig.eigenvalues(k)) <= 1e-12);
}

TEST_CASE("redundant Kraus representations collapse to rank one") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const QuantumChannel t{std::vector<CMatrix>{
      inv_sqrt2 * CMatrix::Identity(2, 2), inv_sqrt2 * CMatrix::Identity(2, 2)}};
  CHECK(kraus_rank(t) == 1);
  const auto eig = herm_eigensystem(jamiolkowski(t).matrix);
  CHECK(eig.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("jamiolkowski operators are PSD with trace d_in") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const QuantumChannel t = random_channel(rng, d, 2);
    const auto tau = jamiolkowski(t);
    CHECK(std::abs(tau.matrix.trace().real() - d) <= 1e-9);
    const auto eig = herm_eigensystem(tau.matrix);
    CHECK(eig.eigenvalues.minCoeff() >= -1e-10);
  }
}

TEST_CASE("transfer matrix of the identity is the identity") {
  const auto tg = transfer_matrix(identity_channel(2));
  CHECK((tg.matrix - CMatrix::Identity(4, 4)).norm() <= 1e-14);
}

TEST_CASE("transfer matrix action matches apply") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel t =
        from_normal_form({uniform(rng, 0, pi), uniform(rng, 0, pi)});
    const CMatrix rho = random_density(rng, 2);
    const auto tg = transfer_matrix(t);
    CVector v(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v(i * 2 + j) = rho(i, j);
    const CVector w = tg.matrix * v;
    const CMatrix out = qcap::apply(t, rho);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(std::abs(w(i * 2 + j) - out(i, j)) <= 1e-10);
  }
}

TEST_CASE("transfer matrices multiply under composition") {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel t1 = random_channel(rng, 2, 2);
    const QuantumChannel t2 = random_channel(rng, 2, 2);
    const CMatrix lhs = transfer_matrix(compose(t1, t2)).matrix;
    const CMatrix rhs = transfer_matrix(t1).matrix * transfer_matrix(t2).matrix;
    CHECK((lhs - rhs).norm() <= 1e-10);
  }
  // rectangular case through a conjugate channel
  const QuantumChannel t = random_channel(rng, 3, 2);
  const QuantumChannel tc = conjugate(t);  // 3 -> 2
  const QuantumChannel u = random_channel(rng, 2, 2);
  const CMatrix lhs = transfer_matrix(compose(u, tc)).matrix;
  const CMatrix rhs = transfer_matrix(u).matrix * transfer_matrix(tc).matrix;
  CHECK((lhs - rhs).norm() <= 1e-10);
}

TEST_CASE("gamma involution swaps omega and the identity") {
  const auto tau = jamiolkowski(identity_channel(2));
  const auto tg = involution_gamma(tau);
  CHECK((tg.matrix - CMatrix::Identity(4, 4)).norm() <= 1e-14);
  const auto back = involution_gamma(tg);
  CHECK((back.matrix - tau.matrix).norm() == 0.0);
}

TEST_CASE("gamma involution applied twice is the exact identity") {
  std::mt19937_64 rng(39);
  for (auto [d_out, d_in] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    JamiolkowskiOperator tau;
    tau.d_out = d_out;
    tau.d_in = d_in;
    tau.matrix = random_complex(rng, d_out * d_in, d_out * d_in);
    const auto back = involution_gamma(involution_gamma(tau));
    CHECK((back.matrix - tau.matrix).norm() == 0.0);
  }
}

TEST_CASE("composition with the identity keeps the Kraus list") {
  std::mt19937_64 rng(40);
  const QuantumChannel t = random_channel(rng, 2, 2);
  const QuantumChannel left = compose(identity_channel(2), t);
  const QuantumChannel right = compose(t, identity_channel(2));
  for (int i = 0; i < 2; ++i) {
    CHECK((left.kraus()[i] - t.kraus()[i]).norm() <= 1e-15);
    CHECK((right.kraus()[i] - t.kraus()[i]).norm() <= 1e-15);
  }
  CHECK_THROWS_AS(compose(t, random_channel(rng, 3, 2)),
                  std::invalid_argument);
}

TEST_CASE("normal form special points") {
  // (0,0) acts as the identity and has a vanishing second Kraus operator.
  const QuantumChannel id = from_normal_form({0.0, 0.0});
  CHECK(id.kraus()[1].norm() == 0.0);
  CHECK(kraus_rank(id) == 1);

  // alpha = beta is dephasing: A1 = cos(a) 1, A2 = sin(a) sigma_x.
  const double a = 0.37;
  const QuantumChannel deph = from_normal_form({a, a});
  CHECK((deph.kraus()[0] - std::cos(a) * CMatrix::Identity(2, 2)).norm() ==
        0.0);
  CMatrix sx = CMatrix::Zero(2, 2);
  sx(0, 1) = std::sin(a);
  sx(1, 0) = std::sin(a);
  CHECK((deph.kraus()[1] - sx).norm() == 0.0);

  // beta = 0 is amplitude damping.
  const QuantumChannel damp = from_normal_form({a, 0.0});
  CHECK(damp.kraus()[0](0, 0).real() == doctest::Approx(std::cos(a)));
  CHECK(damp.kraus()[0](1, 1).real() == doctest::Approx(1.0));
  CHECK(damp.kraus()[1](0, 1).real() == 0.0);
  CHECK(damp.kraus()[1](1, 0).real() == doctest::Approx(std::sin(a)));
}

TEST_CASE("from_isometry round trips") {
  // V = 1 (x) |0>: the environment is untouched, the channel is the identity.
  CMatrix v = CMatrix::Zero(4, 2);
  v(0, 0) = 1.0;  // row (s=0, e=0)
  v(2, 1) = 1.0;  // row (s=1, e=0)
  const QuantumChannel t = from_isometry(v, 2);
  std::mt19937_64 rng(41);
  const CMatrix rho = random_density(rng, 2);
  CHECK((qcap::apply(t, rho) - rho).norm() <= 1e-14);

  // Stacking the normal-form Kraus operators reproduces the channel.
  const NormalFormParams p{0.9, 0.4};
  const QuantumChannel nf = from_normal_form(p);
  CMatrix stacked(4, 2);
  for (int s = 0; s < 2; ++s)
    for (int e = 0; e < 2; ++e) stacked.row(s * 2 + e) = nf.kraus()[e].row(s);
  const QuantumChannel back = from_isometry(stacked, 2);
  for (int i = 0; i < 2; ++i)
    CHECK((back.kraus()[i] - nf.kraus()[i]).norm() == 0.0);

  // Random Ginibre + QR isometries give valid channels.
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumChannel r = random_channel(rng, 3, 2);
    const ChannelReport report = validate(r);
    CHECK(report.cp_margin >= -1e-10);
    CHECK(report.tp_residual <= 1e-9);
  }

  CHECK_THROWS_AS(from_isometry(CMatrix::Ones(4, 2), 2),
                  std::invalid_argument);
}

TEST_CASE("kraus_rank of a generic normal-form channel is 2") {
  CHECK(kraus_rank(identity_channel(2)) == 1);
  CHECK(kraus_rank(from_normal_form({pi / 8, pi / 16})) == 2);
}

TEST_CASE("convex mixtures") {
  std::mt19937_64 rng(42);
  const QuantumChannel t = random_channel(rng, 2, 2);
  const QuantumChannel single = convex_mixture({{1.0, t}});
  const CMatrix rho = random_density(rng, 2);
  CHECK((qcap::apply(single, rho) - qcap::apply(t, rho)).norm() <= 1e-12);

  const QuantumChannel z{std::vector<CMatrix>{sigma_z()}};
  const QuantumChannel mix = convex_mixture({{0.5, identity_channel(2)},
                                             {0.5, z}});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK((mix.kraus()[0] - inv_sqrt2 * CMatrix::Identity(2, 2)).norm() <=
        1e-15);
  CHECK((mix.kraus()[1] - inv_sqrt2 * sigma_z()).norm() <= 1e-15);

  // Linearity oracle.
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumChannel t1 = random_channel(rng, 2, 2);
    const QuantumChannel t2 = random_channel(rng, 2, 2);
    const double w = uniform(rng, 0.05, 0.95);
    const QuantumChannel m = convex_mixture({{w, t1}, {1.0 - w, t2}});
    const CMatrix state = random_density(rng, 2);
    const CMatrix expected =
        w * qcap::apply(t1, state) + (1.0 - w) * qcap::apply(t2, state);
    CHECK((qcap::apply(m, state) - expected).norm() <= 1e-10);
  }

  CHECK_THROWS_AS(convex_mixture({{0.5, t}}), std::invalid_argument);
  CHECK_THROWS_AS(convex_mixture({{-0.2, t}, {1.2, t}}),
                  std::invalid_argument);
}

TEST_CASE("validate reports CP and TP margins") {
  const ChannelReport id_report = validate(identity_channel(2));
  CHECK(std::abs(id_report.cp_margin) <= 1e-12);
  CHECK(id_report.tp_residual <= 1e-14);

  const QuantumChannel scaled = QuantumChannel::unchecked(
      {1.1 * CMatrix::Identity(2, 2)});
  const ChannelReport report = validate(scaled);
  CHECK(report.tp_residual ==
        doctest::Approx(0.21 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("channel constructor enforces the type invariants") {
  CHECK_THROWS_AS(QuantumChannel({1.1 * CMatrix::Identity(2, 2)}),
                  std::invalid_argument);
  const double inv2 = 0.5;
  std::vector<CMatrix> too_many(5, inv2 * CMatrix::Identity(2, 2));
  too_many.push_back(CMatrix::Zero(2, 2));  // 6 > d_in * d_out = 4
  CHECK_THROWS_AS(QuantumChannel{too_many}, std::invalid_argument);
}

TEST_CASE("normal-form channels are sigma_z covariant") {
  std::mt19937_64 rng(43);
  const CMatrix z = sigma_z();
  for (int trial = 0; trial < 100; ++trial) {
    const QuantumChannel t =
        from_normal_form({uniform(rng, 0, pi), uniform(rng, 0, pi)});
    const QuantumChannel tc = conjugate(t);
    const CMatrix rho = random_density(rng, 2);
    CHECK((z * qcap::apply(t, rho) * z - qcap::apply(t, z * rho * z)).norm() <=
          1e-10);
    CHECK((z * qcap::apply(tc, rho) * z - qcap::apply(tc, z * rho * z))
              .norm() <= 1e-10);
  }
}

TEST_CASE("conjugate channels are trace preserving") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + trial % 3;
    const int d_env = 1 + trial % 3;
    const QuantumChannel t = random_channel(rng, d, d_env);
    CHECK(conjugate(t).tp_residual() <= 1e-9);
  }
}

}  // TEST_SUITE

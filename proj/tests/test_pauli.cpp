#include <doctest.h>

#include "oracles.hpp"
#include "qmor/pauli.hpp"

using namespace qmor;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("label round trip and bit layout") {
  const auto p = BinaryPauli::from_label("XIZ");
  CHECK(p.n == 3);
  CHECK(p.label() == "XIZ");
  CHECK(p.binary_string() == "001|100");  // z then x, site 0 first
  CHECK(p.x_bit(0));
  CHECK(!p.x_bit(1));
  CHECK(p.z_bit(2));

  const auto q = BinaryPauli::from_binary_string("001|100");
  CHECK(bits_equal(p, q));
  CHECK(BinaryPauli::from_binary_string(q.binary_string()) == q);
}

TEST_CASE("single-site letter encodings") {
  CHECK(BinaryPauli::from_label("X").binary_string() == "0|1");
  CHECK(BinaryPauli::from_label("Y").binary_string() == "1|1");
  CHECK(BinaryPauli::from_label("Z").binary_string() == "1|0");
  CHECK(BinaryPauli::from_label("I").binary_string() == "0|0");
  CHECK(BinaryPauli::identity(4).is_identity_bits());
}

TEST_CASE("invalid inputs are rejected with position info") {
  CHECK_THROWS_WITH_AS(BinaryPauli::from_label("XQZ"),
                       doctest::Contains("position 1"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryPauli::from_label(""), std::invalid_argument);
  CHECK_THROWS_AS(BinaryPauli::from_binary_string("0101"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryPauli::from_binary_string("01|0"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryPauli::from_binary_string("0a|01"), std::invalid_argument);
  CHECK_THROWS_AS(pauli_product(BinaryPauli::from_label("XX"), BinaryPauli::from_label("X")),
                  std::invalid_argument);
}

TEST_CASE("single-site products track the i powers") {
  const auto x = BinaryPauli::from_label("X");
  const auto y = BinaryPauli::from_label("Y");
  const auto z = BinaryPauli::from_label("Z");

  const auto xy = pauli_product(x, y);  // X Y = i Z
  CHECK(xy.binary_string() == "1|0");
  CHECK(xy.phase == 1);

  const auto yx = pauli_product(y, x);  // Y X = -i Z
  CHECK(yx.phase == 3);

  const auto zz = pauli_product(z, z);
  CHECK(zz.is_identity_bits());
  CHECK(zz.phase == 0);

  const auto zx = pauli_product(z, x);  // Z X = i Y
  CHECK(zx.label() == "Y");
  CHECK(zx.phase == 1);
}

TEST_CASE("dense realization matches the kron oracle") {
  for (const std::string label : {"X", "Y", "Z", "XY", "ZI", "XYZ", "YIZX"}) {
    const auto p = BinaryPauli::from_label(label);
    CHECK((pauli_dense(p) - oracle::pauli_matrix(label)).norm() == 0.0);
  }
}

TEST_CASE("products agree with dense matrix products") {
  oracle::Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    const auto a = BinaryPauli::from_label(oracle::random_pauli_label(n, rng));
    const auto b = BinaryPauli::from_label(oracle::random_pauli_label(n, rng));
    const Eigen::MatrixXcd expect = pauli_dense(a) * pauli_dense(b);
    CHECK((pauli_dense(pauli_product(a, b)) - expect).norm() == 0.0);
  }
}

TEST_CASE("two-site product with both sites anticommuting") {
  // (X ox Y) (Y ox Y) = XY ox YY = iZ ox I
  const auto a = BinaryPauli::from_label("XY");
  const auto b = BinaryPauli::from_label("YY");
  const auto ab = pauli_product(a, b);
  CHECK(ab.label() == "ZI");
  CHECK(ab.phase == 1);
  CHECK((pauli_dense(ab) - oracle::pauli_matrix("XY") * oracle::pauli_matrix("YY")).norm() ==
        0.0);
}

TEST_CASE("apply matches dense action") {
  oracle::Rng rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 1 + trial % 4;
    const auto p = BinaryPauli::from_label(oracle::random_pauli_label(n, rng));
    const auto v = oracle::random_state(1 << n, rng);
    CHECK((pauli_apply(p, v) - pauli_dense(p) * v).norm() < 1e-15);
  }
}

TEST_CASE("adjoint flips the phase sign") {
  const auto x = BinaryPauli::from_label("X");
  const auto y = BinaryPauli::from_label("Y");
  const auto xy = pauli_product(x, y);  // phase i
  const auto adj = xy.adjoint();
  CHECK(adj.phase == 3);
  CHECK((pauli_dense(adj) - pauli_dense(xy).adjoint()).norm() == 0.0);
  // Hermitian phase-0 strings are their own adjoint.
  CHECK(y.adjoint() == y);
}

TEST_CASE("weight counts non-identity sites") {
  CHECK(BinaryPauli::from_label("IXYI").weight() == 2);
  CHECK(BinaryPauli::identity(5).weight() == 0);
}

TEST_SUITE_END();

#include "doctest.h"

#include <cmath>
#include <complex>
#include <set>

#include "oracles.hpp"
#include "ringcat/basis.hpp"
#include "ringcat/errors.hpp"

using namespace ringcat;

TEST_CASE("fock basis sizes follow stars and bars") {
  CHECK(enumerate_fock(3).size() == 10);
  CHECK(enumerate_fock(4).size() == 15);
  CHECK(enumerate_fock(1).size() == 3);
  CHECK(enumerate_fock(0).size() == 1);
  for (int n = 0; n <= 40; ++n) {
    CHECK(enumerate_fock(n).size() == static_cast<std::size_t>((n + 2) * (n + 1) / 2));
  }
}

TEST_CASE("enumeration is lexicographically descending with unique states") {
  const auto basis = enumerate_fock(5, BasisKind::flow);
  CHECK(basis[0] == Occupation(5, 0, 0));
  CHECK(basis.kind() == BasisKind::flow);
  std::set<Occupation> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].total() == 5);
    seen.insert(basis[i]);
    if (i > 0) CHECK(basis[i - 1] > basis[i]);
  }
  CHECK(seen.size() == basis.size());
}

TEST_CASE("state_index inverts the enumeration") {
  for (int n : {0, 1, 5, 12}) {
    const auto basis = enumerate_fock(n);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.index(basis[i]) == i);
  }
  CHECK(enumerate_fock(3).index({3, 0, 0}) == 0);
}

TEST_CASE("state_index rejects occupations of the wrong particle number") {
  const auto basis = enumerate_fock(3);
  CHECK_THROWS_AS(basis.index({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(basis.index({4, -1, 0}), InvalidArgument);
}

TEST_CASE("quasi-momentum sectors") {
  CHECK(quasimomentum_sector({7, 0, 0}) == 0);
  CHECK(quasimomentum_sector({0, 4, 0}) == 1);
  CHECK(quasimomentum_sector({1, 1, 1}) == 0);
  CHECK(quasimomentum_sector({0, 0, 1}) == 2);
  for (int n = 1; n <= 12; ++n) {
    const int zero_flow = quasimomentum_sector({n, 0, 0});
    const int one_flow = quasimomentum_sector({0, n, 0});
    CHECK(zero_flow == 0);
    CHECK(one_flow == n % 3);
    CHECK((zero_flow == one_flow) == (n % 3 == 0));
  }
}

TEST_CASE("embed_single_flow small cases") {
  const auto v1 = embed_single_flow(1, 0);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(std::abs(v1[i] - 1.0 / std::sqrt(3.0)) < 1e-15);

  // ((a† + b† + c†)/√3)² / √2 |0>.
  const auto v2 = embed_single_flow(2, 0);
  const auto basis = enumerate_fock(2);
  CHECK(std::abs(v2[static_cast<Eigen::Index>(basis.index({2, 0, 0}))] - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(v2[static_cast<Eigen::Index>(basis.index({1, 1, 0}))] - std::sqrt(2.0) / 3.0) <
        1e-15);

  CHECK_THROWS_AS(embed_single_flow(3, 3), InvalidArgument);
  CHECK_THROWS_AS(embed_single_flow(3, -1), InvalidArgument);
  CHECK_THROWS_AS(embed_single_flow(0, 0), InvalidArgument);
}

TEST_CASE("embed_single_flow has unit norm and matches the brute-force expansion") {
  for (int n = 1; n <= 30; ++n)
    for (int k = 0; k < 3; ++k) CHECK(std::abs(embed_single_flow(n, k).norm() - 1.0) < 1e-12);

  for (int n = 1; n <= 7; ++n) {
    const auto basis = enumerate_fock(n);
    for (int k = 0; k < 3; ++k) {
      oracle::Occ flow{0, 0, 0};
      flow[static_cast<std::size_t>(k)] = n;
      const auto expected = oracle::flow_state_in_sites(flow);
      const auto v = embed_single_flow(n, k);
      for (const auto& [occ, amp] : expected) {
        const auto i = static_cast<Eigen::Index>(basis.index({occ[0], occ[1], occ[2]}));
        CHECK(std::abs(v[i] - amp) < 1e-12);
      }
    }
  }
}

TEST_CASE("mode transform for one particle is the Fourier matrix") {
  const auto w = mode_transform_matrix(1);
  const double pi = std::numbers::pi;
  // Rows: sites a, b, c; columns: flows α, β, γ (basis order (1,0,0),(0,1,0),(0,0,1)).
  for (int site = 0; site < 3; ++site) {
    for (int flow = 0; flow < 3; ++flow) {
      const Complex expected = std::polar(1.0 / std::sqrt(3.0), -2.0 * pi * flow * site / 3.0);
      CHECK(std::abs(w(site, flow) - expected) < 1e-15);
    }
  }
}

TEST_CASE("mode transform is unitary and agrees with the single-flow embedding") {
  for (int n = 0; n <= 10; ++n) {
    const auto w = mode_transform_matrix(n);
    const auto id = ComplexMatrix::Identity(w.rows(), w.cols());
    CHECK((w.adjoint() * w - id).cwiseAbs().maxCoeff() < 1e-10);
    if (n >= 1) {
      const auto flow = enumerate_fock(n, BasisKind::flow);
      const auto c0 = static_cast<Eigen::Index>(flow.index({n, 0, 0}));
      const auto c1 = static_cast<Eigen::Index>(flow.index({0, n, 0}));
      CHECK((w.col(c0) - embed_single_flow(n, 0)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((w.col(c1) - embed_single_flow(n, 1)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("mode transform columns match the brute-force expansion") {
  for (int n = 1; n <= 6; ++n) {
    const auto w = mode_transform_matrix(n);
    const auto sites = enumerate_fock(n);
    const auto flows = enumerate_fock(n, BasisKind::flow);
    for (std::size_t col = 0; col < flows.size(); ++col) {
      const auto& f = flows[col];
      const auto expected = oracle::flow_state_in_sites({f[0], f[1], f[2]});
      ComplexVector ref = ComplexVector::Zero(w.rows());
      for (const auto& [occ, amp] : expected) {
        ref[static_cast<Eigen::Index>(sites.index({occ[0], occ[1], occ[2]}))] = amp;
      }
      CHECK((w.col(static_cast<Eigen::Index>(col)) - ref).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

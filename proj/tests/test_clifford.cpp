#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "hss/clifford.hpp"

using namespace hss;

namespace {

Matrix<GRat> anticomm(const Matrix<GRat>& a, const Matrix<GRat>& b) {
  Matrix<GRat> s = a * b;
  const Matrix<GRat> t = b * a;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) += t(i, j);
  return s;
}

bool is_scalar(const Matrix<GRat>& m, const GRat& c) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? c : GRat(0))) return false;
  return true;
}

}  // namespace

TEST_CASE("generator action signs") {
  // [TRIVIAL] a_1^dag on the vacuum.
  auto s = generator_action(1, true, FockState{0, GRat(1)});
  REQUIRE(s);
  CHECK(s->subset == 1u);
  CHECK(s->coefficient == GRat(1));
  // [DERIVED] sign-rule oracle on w_1 ^ w_2.
  auto a1 = generator_action(1, false, FockState{0b11, GRat(1)});
  REQUIRE(a1);
  CHECK(a1->subset == 0b10u);
  CHECK(a1->coefficient == GRat(1));
  auto a2 = generator_action(2, false, FockState{0b11, GRat(1)});
  REQUIRE(a2);
  CHECK(a2->subset == 0b01u);
  CHECK(a2->coefficient == GRat(-1));
  // Double creation annihilates.
  CHECK(!generator_action(1, true, FockState{0b1, GRat(1)}));
}

TEST_CASE("canonical anticommutation relations") {
  for (int wdim = 2; wdim <= 5; ++wdim) {
    for (int i = 1; i <= wdim; ++i)
      for (int j = i; j <= wdim; ++j) {
        auto ai = fock_operator(wdim, i, false), aj = fock_operator(wdim, j, false);
        auto ci = fock_operator(wdim, i, true), cj = fock_operator(wdim, j, true);
        CHECK(is_scalar(anticomm(ai, aj), GRat(0)));
        CHECK(is_scalar(anticomm(ci, cj), GRat(0)));
        CHECK(is_scalar(anticomm(ai, cj), i == j ? GRat(1) : GRat(0)));
      }
  }
}

TEST_CASE("Clifford relations e_a e_b + e_b e_a = -2 delta") {
  for (int wdim : {3, 4}) {
    auto e = clifford_generators_modes(wdim);
    CHECK(e.size() == 2u * wdim);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a; b < e.size(); ++b)
        CHECK(is_scalar(anticomm(e[a], e[b]), a == b ? GRat(-2) : GRat(0)));
  }
}

TEST_CASE("even words preserve parity") {
  const int ell = 3, wdim = ell + 1;
  auto e = clifford_generators_modes(wdim);
  const Matrix<GRat> w = e[0] * e[2 * ell];
  for (unsigned c = 0; c < w.cols(); ++c)
    for (unsigned r = 0; r < w.rows(); ++r)
      if (!w(r, c).is_zero())
        CHECK(std::popcount(r) % 2 == std::popcount(c) % 2);
  CHECK_NOTHROW(restrict_even(w, wdim));
}

TEST_CASE("even spin tangent rank") {
  // [PAPER] the tangent vector has 2^{l-1}-dimensional image on the
  // w_{l+1}-containing half of S^+.
  CHECK(spin_tangent_rank_even(3) == 4u);
  CHECK(spin_tangent_rank_even(4) == 8u);   // [DERIVED]
  CHECK(spin_tangent_rank_even(5) == 16u);  // [DERIVED]
}

TEST_CASE("odd spin tangent rank") {
  // [PAPER] maximal rank on the spin module for G(4,4).
  CHECK(spin_tangent_rank_odd(3) == 4u);
  CHECK(spin_tangent_rank_odd(4) == 8u);   // [DERIVED]
  CHECK(spin_tangent_rank_odd(5) == 16u);  // [DERIVED]
}

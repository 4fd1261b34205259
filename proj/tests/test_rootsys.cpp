#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hss/rootsys.hpp"

using namespace hss;

namespace {

Root mk(std::vector<int> c) { return Root{std::move(c)}; }

// Independent pairing oracle through the classical e-coordinate model.
Rat e_inner(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> e_coords(const std::vector<std::vector<Rat>>& simples, const Root& r) {
  std::vector<Rat> v(simples[0].size(), Rat(0));
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(r.coeffs[i]) * simples[i][j];
  return v;
}

}  // namespace

TEST_CASE("positive root counts match the closed-form values") {
  // [DERIVED] closed forms n(n+1)/2, n^2, n^2, n(n-1), 36, 63.
  for (int n = 1; n <= 7; ++n)
    CHECK(RootSystem(CartanDatum::make('A', n)).positive_roots().size() ==
          classical_positive_count('A', n));
  for (int n = 2; n <= 6; ++n)
    CHECK(RootSystem(CartanDatum::make('B', n)).positive_roots().size() ==
          classical_positive_count('B', n));
  for (int n = 2; n <= 5; ++n)
    CHECK(RootSystem(CartanDatum::make('C', n)).positive_roots().size() ==
          classical_positive_count('C', n));
  for (int n = 3; n <= 7; ++n)
    CHECK(RootSystem(CartanDatum::make('D', n)).positive_roots().size() ==
          classical_positive_count('D', n));
  CHECK(RootSystem(CartanDatum::make('E', 6)).positive_roots().size() == 36u);
  CHECK(RootSystem(CartanDatum::make('E', 7)).positive_roots().size() == 63u);
}

TEST_CASE("highest roots") {
  // [DERIVED] from the e-coordinate models; E-types from the marked Dynkin
  // numbering (chain 1..5 with 6 on 3; chain 1..6 with 7 on 4).
  CHECK(RootSystem(CartanDatum::make('A', 4)).highest_root() == mk({1, 1, 1, 1}));
  CHECK(RootSystem(CartanDatum::make('B', 4)).highest_root() == mk({1, 2, 2, 2}));
  CHECK(RootSystem(CartanDatum::make('C', 4)).highest_root() == mk({2, 2, 2, 1}));
  CHECK(RootSystem(CartanDatum::make('D', 5)).highest_root() == mk({1, 2, 2, 1, 1}));
  CHECK(RootSystem(CartanDatum::make('E', 6)).highest_root() == mk({1, 2, 3, 2, 1, 2}));
  CHECK(RootSystem(CartanDatum::make('E', 7)).highest_root() == mk({1, 2, 3, 4, 3, 2, 2}));
}

TEST_CASE("pairings agree with the e-coordinate oracle") {
  for (auto [series, n] : {std::pair{'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}}) {
    RootSystem sys(CartanDatum::make(series, n));
    auto simples = simple_roots_e_coords(series, n);
    for (const Root& b : sys.positive_roots())
      for (const Root& a : sys.positive_roots()) {
        auto eb = e_coords(simples, b), ea = e_coords(simples, a);
        Rat want = 2 * e_inner(eb, ea) / e_inner(ea, ea);
        CHECK(Rat(sys.pairing(b, a)) == want);
      }
  }
}

TEST_CASE("root strings and coroots") {
  RootSystem b2(CartanDatum::make('B', 2));
  CHECK(b2.positive_roots().size() == 4u);
  CHECK(b2.chain_down(mk({1, 2}), mk({0, 1})) == 2);
  CHECK(b2.chain_down(mk({1, 1}), mk({1, 0})) == 1);
  CHECK(b2.is_root(mk({1, 2})));
  CHECK(!b2.is_root(mk({2, 1})));

  // h_delta must implement beta -> <beta, delta^vee> on every root.
  for (auto [series, n] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}}) {
    RootSystem sys(CartanDatum::make(series, n));
    for (const Root& d : sys.positive_roots()) {
      auto cc = sys.coroot_coeffs(d);
      for (const Root& b : sys.positive_roots()) {
        int lhs = 0;
        for (int i = 0; i < sys.rank(); ++i) lhs += cc[i] * sys.pairing(b, sys.simple(i));
        CHECK(lhs == sys.pairing(b, d));
      }
    }
  }
}

TEST_CASE("canonical order is strictly increasing in (height, lex)") {
  RootSystem sys(CartanDatum::make('E', 7));
  const auto& pos = sys.positive_roots();
  for (std::size_t k = 1; k < pos.size(); ++k) {
    bool lt = pos[k - 1].height() < pos[k].height() ||
              (pos[k - 1].height() == pos[k].height() && pos[k - 1].coeffs < pos[k].coeffs);
    CHECK(lt);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) CHECK(sys.positive_index(pos[k]) == k);
}

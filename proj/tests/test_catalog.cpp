#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hss/catalog.hpp"
#include "hss/matrix_models.hpp"
#include "hss/rigidity.hpp"

using namespace hss;

namespace {

std::set<std::string> names_of(const std::vector<H2Embedding>& list) {
  std::set<std::string> out;
  for (const auto& e : list) out.insert(e.name);
  return out;
}

}  // namespace

TEST_CASE("catalog inventory") {
  // [DERIVED] rank-1 ambients carry no rank >= 2 embeddings.
  CHECK(catalog_embeddings(build_hss("G(1,4)")).empty());
  CHECK(catalog_embeddings(build_hss("G^{II}(3,3)")).empty());

  // [DERIVED] G(2,2): curve, proportional product, II and III subspaces.
  CHECK(names_of(catalog_embeddings(build_hss("G(2,2)"))) ==
        std::set<std::string>{"diagonal-curve", "G(1,1)xG(1,1)", "G^{II}(2,2)",
                              "G^{III}(2,2)"});

  // [DERIVED] G(2,3) admits no proportional split and is not tube.
  CHECK(catalog_embeddings(build_hss("G(2,3)")).empty());

  // [DERIVED] G(2,4) has the proportional product only.
  CHECK(names_of(catalog_embeddings(build_hss("G(2,4)"))) ==
        std::set<std::string>{"G(1,2)xG(1,2)"});

  {
    const auto list = catalog_embeddings(build_hss("G(3,3)"));
    CHECK(names_of(list) == std::set<std::string>{"diagonal-curve", "G(1,1)xG(2,2)",
                                                  "G^{II}(3,3)", "G^{III}(3,3)",
                                                  "P3-Lambda2"});
    CHECK(find_embedding(list, "P3-Lambda2").dim_m == 3);
  }
  {
    const auto list = catalog_embeddings(build_hss("G(4,4)"));
    CHECK(names_of(list).count("Spin-Q6") == 1);
    CHECK(find_embedding(list, "Spin-Q6").dim_m == 6);
    CHECK(find_embedding(list, "Spin-Q6").generators.size() == 6);
  }

  // [DERIVED] hyperquadrics: curve plus the subquadric.
  for (int n : {3, 4, 5, 6}) {
    const auto list = catalog_embeddings(build_hss("Q^" + std::to_string(n)));
    CHECK(names_of(list) ==
          std::set<std::string>{"diagonal-curve", "Q^" + std::to_string(n - 1)});
    CHECK(find_embedding(list, "Q^" + std::to_string(n - 1)).dim_m == n - 1);
  }

  // [DERIVED] G^{II}(6,6): curve (even n), G(3,3), and the II x II products.
  CHECK(names_of(catalog_embeddings(build_hss("G^{II}(6,6)"))) ==
        std::set<std::string>{"diagonal-curve", "G(3,3)",
                              "G^{II}(2,2)xG^{II}(4,4)", "G^{II}(3,3)xG^{II}(3,3)"});
  // [DERIVED] odd n: no curve, no G(r,r).
  CHECK(names_of(catalog_embeddings(build_hss("G^{II}(5,5)"))) ==
        std::set<std::string>{"G^{II}(2,2)xG^{II}(3,3)"});

  CHECK(names_of(catalog_embeddings(build_hss("G^{III}(4,4)"))) ==
        std::set<std::string>{"diagonal-curve", "G(2,2)",
                              "G^{III}(1,1)xG^{III}(3,3)",
                              "G^{III}(2,2)xG^{III}(2,2)"});

  CHECK(names_of(catalog_embeddings(build_hss("E6"))) ==
        std::set<std::string>{"diag-P2", "P5xP1"});
  CHECK(names_of(catalog_embeddings(build_hss("E7"))) ==
        std::set<std::string>{"diagonal-curve", "diag-P3", "P5xP2"});

  CHECK_THROWS(find_embedding(catalog_embeddings(build_hss("E6")), "absent"));
}

TEST_CASE("generator bases are consistent") {
  // [DERIVED] every non-defective entry has dim_m independent generators in
  // m^+ of the right ambient.
  std::vector<std::string> labels = spaces_in_range(4);
  for (const auto& label : labels) {
    const HSSDescriptor hss = build_hss(label);
    for (const auto& e : catalog_embeddings(hss)) {
      CAPTURE(label);
      CAPTURE(e.name);
      CHECK(e.ambient_label == label);
      if (e.catalog_error) continue;
      CHECK(e.generators.size() == static_cast<std::size_t>(e.dim_m));
      CHECK(tangent_space_matrix(hss, e.generators).rows() ==
            static_cast<std::size_t>(e.dim_m));
    }
  }
}

TEST_CASE("every catalog entry passes the rigidity battery") {
  // [DERIVED] condition (+), geodesic closure, second-fundamental-form family
  // dimension and orbit dimensions, from first principles per embedding.
  std::vector<std::string> labels = spaces_in_range(3);
  labels.push_back("G(4,4)");  // spin embedding lives one rank higher
  for (const auto& label : labels) {
    const HSSDescriptor hss = build_hss(label);
    for (const auto& e : catalog_embeddings(hss)) {
      if (e.catalog_error) continue;
      CAPTURE(label);
      CAPTURE(e.name);
      CHECK(bracket_generating_span(hss, e.generators, e.name).status == "pass");
      CHECK(geodesic_closure(hss, e.generators, e.name).status == "pass");
      CHECK(second_ff_family(hss, e.generators) ==
            static_cast<std::size_t>(hss.dim_n - e.dim_m));
      CHECK(check_orbit_dimensions(hss, e.generators, e.name).status == "pass");
    }
  }

  // [DERIVED] negative control: a single root line in G(2,2) does not
  // bracket-generate m^+.
  const HSSDescriptor g22 = build_hss("G(2,2)");
  const std::vector<LieElement> line = {
      LieElement::root_vector(g22.rank(), g22.noncompact_pos.front())};
  CHECK(bracket_generating_span(g22, line, "line").status == "fail");
}

TEST_CASE("block supports satisfy condition C") {
  // [DERIVED] each stored block family covers the ambient matrix model.
  std::vector<std::string> labels = spaces_in_range(4);
  for (const auto& label : labels) {
    const HSSDescriptor hss = build_hss(label);
    if (hss.family != 'G' && hss.family != 'S' && hss.family != 'Y') continue;
    const auto [p, q] = model_shape(hss);
    for (const auto& e : catalog_embeddings(hss)) {
      if (e.catalog_error) continue;
      CAPTURE(label);
      CAPTURE(e.name);
      CHECK(!e.block_support.empty());
      CHECK(condition_c_check(e.block_support, p, q, ambient_symmetry(hss), label,
                              e.name)
                .status == "pass");
    }
  }
}

TEST_CASE("diagonal type classification") {
  auto diag = [](const std::string& label, const std::string& name) {
    const auto list = catalog_embeddings(build_hss(label));
    return find_embedding(list, name).diagonal_type;
  };
  // [PAPER] Type I products and both symmetric models of full rank are
  // diagonal; the odd antisymmetric model is not.
  CHECK(diag("G(2,2)", "diagonal-curve"));
  CHECK(diag("G(2,2)", "G(1,1)xG(1,1)"));
  CHECK(diag("G(3,3)", "G(1,1)xG(2,2)"));
  CHECK_FALSE(diag("G(3,3)", "G^{II}(3,3)"));
  CHECK(diag("G(4,4)", "G^{II}(4,4)"));
  CHECK(diag("G(3,3)", "G^{III}(3,3)"));
  // [PAPER] the Lambda^2 plane has no rank-3 tangent, the spin quadric has a
  // rank-4 one.
  CHECK_FALSE(diag("G(3,3)", "P3-Lambda2"));
  CHECK(diag("G(4,4)", "Spin-Q6"));
  // [PAPER] a subquadric is always diagonal.
  for (int n : {3, 4, 5, 6})
    CHECK(diag("Q^" + std::to_string(n), "Q^" + std::to_string(n - 1)));
  // [PAPER] II x II with both factors odd is non-diagonal.
  CHECK_FALSE(diag("G^{II}(6,6)", "G^{II}(3,3)xG^{II}(3,3)"));
  // [DERIVED] one odd factor in odd ambient: the block element reaches the
  // ambient's maximal (even) rank, so the definition makes it diagonal.
  CHECK(diag("G^{II}(5,5)", "G^{II}(2,2)xG^{II}(3,3)"));
  // [PAPER] exceptional metadata.
  CHECK(diag("E6", "diag-P2"));
  CHECK(diag("E6", "P5xP1"));
  CHECK_FALSE(diag("E7", "diag-P3"));

  for (const auto& e : catalog_embeddings(build_hss("E6")))
    CHECK(e.diagonal_source == "metadata");
  CHECK(find_embedding(catalog_embeddings(build_hss("Q^4")), "Q^3").diagonal_source ==
        "computed");
}

TEST_CASE("described generator counts are surfaced, not repaired") {
  // [PAPER] the P^5 x P^2 description enumerates 6 vectors for a 7-dim space.
  const auto list = catalog_embeddings(build_hss("E7"));
  const H2Embedding& e = find_embedding(list, "P5xP2");
  CHECK(e.catalog_error);
  CHECK(e.generators.size() == 6);
  CHECK(e.dim_m == 7);
  CHECK(!e.note.empty());
  // [PAPER] the P^5 x P^1 description in E6 is consistent.
  CHECK_FALSE(find_embedding(catalog_embeddings(build_hss("E6")), "P5xP1").catalog_error);
}

TEST_CASE("printed root lists") {
  // [PAPER] the E6 list of 16 tuples matches the derived roots exactly.
  const auto e6 = compare_printed_root_list(build_hss("E6"));
  CHECK(e6.printed_count == 16);
  CHECK(e6.mismatch == 0);

  // [PAPER] the E7 list prints 27 tuples with one duplicate, so exactly one
  // derived root is missing and one printed tuple is surplus.
  const auto e7 = compare_printed_root_list(build_hss("E7"));
  CHECK(e7.printed_count == 27);
  CHECK(e7.mismatch == 2);
  REQUIRE(e7.extra_printed.size() == 1);
  CHECK(e7.extra_printed[0] == "(1,1,2,2,1,1,1)");
  REQUIRE(e7.missing_from_printed.size() == 1);

  CHECK_THROWS(compare_printed_root_list(build_hss("G(2,2)")));
}

#ifndef HSS_RIGIDITY_HPP
#define HSS_RIGIDITY_HPP

#include <string>
#include <vector>

#include "hss/hss.hpp"
#include "hss/matrix.hpp"

namespace hss {

// (alpha_i, alpha_j, beta) with alpha_i, alpha_j in Pi (unordered, i <= j in
// Pi order), beta = alpha_i + alpha_j - gamma noncompact positive, and
// alpha_i - gamma, alpha_j - gamma roots.
struct CompatibleTriple {
  Root alpha_i, alpha_j, beta;
  friend bool operator==(const CompatibleTriple& a, const CompatibleTriple& b) {
    return a.alpha_i == b.alpha_i && a.alpha_j == b.alpha_j && a.beta == b.beta;
  }
};

struct CheckReport {
  std::string check_id;
  std::string space_label;
  std::string embedding_name;  // empty when not embedding-specific
  std::string status;          // "pass" | "fail" | "catalog-error" | "skipped"
  std::string expected;
  std::string computed;
  std::string witness;         // optional counterexample / context data
  long long elapsed_ms = 0;

  bool ok() const { return status == "pass" || status == "skipped"; }
};

CheckReport make_report(std::string check_id, std::string space_label, bool pass,
                        std::string expected, std::string computed,
                        std::string witness = "");

// Coordinates of an element of m^+ over the noncompact positive basis;
// throws if the element has a Cartan, compact, or m^- component.
std::vector<GRat> noncompact_coords(const HSSDescriptor& hss, const LieElement& e);

// Validates V subset m^+ with linearly independent generators; returns the
// m x n coordinate matrix.
Matrix<GRat> tangent_space_matrix(const HSSDescriptor& hss, const std::vector<LieElement>& V);

// Matrix of H(v) = [eta, [v, eta]] : m^- -> m^+, column per e_{-delta} in
// noncompact order, rows over the noncompact basis.
Matrix<GRat> h_operator_matrix(const HSSDescriptor& hss, const LieElement& eta);

// Lemma "bijection": rank of H at the diagonal vector equals dim (tube only;
// skipped for non-tube ambients).
CheckReport check_h_bijective(const HSSDescriptor& hss);

// Exhaustive search over unordered Pi pairs; deterministic (i <= j) order.
// gamma must be noncompact positive and outside Pi.
std::vector<CompatibleTriple> find_compatible_triples(const HSSDescriptor& hss,
                                                      const Root& gamma);

// Every gamma outside Pi admits a triple, and the beta-sets of distinct gamma
// are disjoint (tube only; skipped otherwise).
CheckReport check_triple_uniqueness(const HSSDescriptor& hss);

// a_gamma = sum_i <gamma, alpha_i^vee> per noncompact positive root, in
// canonical order.
std::vector<int> splitting_type(const HSSDescriptor& hss);

CheckReport check_splitting_type(const HSSDescriptor& hss);

// Star property of the totally-real lemma, with the partition of the
// relevant compact roots.
struct StarResult {
  CheckReport report;
  std::vector<Root> k1, k2, k3;  // Delta_{K,1}, Delta_{K,2}, Delta_{K,3}
};

StarResult star_property_check(const HSSDescriptor& hss);

// Checks (a) complex span of [l, v] = m^+, (b) J[l,v] cap [l,v] = {0},
// (c) dim_R(([l,v] + Cv)/Cv) = n - 1.
CheckReport k_orbit_totally_real(const HSSDescriptor& hss, const LieElement& v);

// dim span{[v_a, [e_{-delta}, v_b]]}; pass iff equal to dim_n (condition (+)).
std::size_t bracket_generating_dim(const HSSDescriptor& hss, const std::vector<LieElement>& V);
CheckReport bracket_generating_span(const HSSDescriptor& hss, const std::vector<LieElement>& V,
                                    const std::string& embedding_name = "");

// (i) [V, [tau(V), V]] inside span(V); (ii) the set of u in m^+ whose
// polarized form lands in span(V) equals span(V) exactly.
CheckReport geodesic_closure(const HSSDescriptor& hss, const std::vector<LieElement>& V,
                             const std::string& embedding_name = "");

// Rank of xi in m^- -> (symmetric V-bilinear maps into m^+/V).
std::size_t second_ff_family(const HSSDescriptor& hss, const std::vector<LieElement>& V);

struct OrbitDims {
  long long dim_c_pv = 0;  // complex dim of the P-orbit of [V]
  long long dim_r_kv = 0;  // real dim of the K-orbit of [V]
  long long dim_c_h = 0;
  long long dim_r_h0 = 0;
};

OrbitDims orbit_dimensions(const HSSDescriptor& hss, const std::vector<LieElement>& V);
CheckReport check_orbit_dimensions(const HSSDescriptor& hss, const std::vector<LieElement>& V,
                                   const std::string& embedding_name = "");

}  // namespace hss

#endif

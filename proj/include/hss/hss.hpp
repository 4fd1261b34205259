#ifndef HSS_HSS_HPP
#define HSS_HSS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hss/chevalley.hpp"
#include "hss/rootsys.hpp"

namespace hss {

// An irreducible compact Hermitian symmetric space: marked root system,
// noncompact/compact split of the positive roots, strongly orthogonal set Pi,
// and tube-type classification.
struct HSSDescriptor {
  std::string label;          // e.g. "G(2,3)", "G^{II}(4,4)", "Q^5", "E6"
  char family = 0;            // 'G' (Type I), 'S' (II), 'Y' (III), 'Q', '6', '7'
  int p = 0, q = 0;           // family parameters (Q^n stores n in p)
  std::shared_ptr<const RootSystem> sys;
  std::shared_ptr<const StructureConstants> sc;
  int cominuscule = 0;        // simple-root index (0-based)
  std::vector<Root> noncompact_pos;
  std::vector<Root> compact_pos;
  std::vector<Root> pi;       // strongly orthogonal cascade, highest first
  int rank_r = 0;
  int dim_n = 0;              // = |noncompact_pos|
  bool tube = false;

  int rank() const { return sys->rank(); }
  // Index of a root within noncompact_pos; throws if absent.
  std::size_t noncompact_index(const Root& r) const;
  bool is_noncompact_pos(const Root& r) const;
  // dim G = |Delta| + rank (adjoint dimension of the ambient group).
  int dim_g() const;
  // Sum of e_alpha over Pi: the generic (maximal-rank) tangent vector.
  LieElement diagonal_vector() const;
};

// Builds a descriptor from a CLI-facing label. Supported:
//   G(p,q) p,q >= 1;  G^{II}(n,n) n >= 3;  G^{III}(n,n) n >= 2;
//   Q^n n >= 3;  E6;  E7.
HSSDescriptor build_hss(const std::string& label);
HSSDescriptor build_hss(char family, int p, int q);

// Greedy Harish-Chandra cascade: repeatedly the highest noncompact positive
// root strongly orthogonal to everything already chosen.
std::vector<Root> strongly_orthogonal_cascade(const RootSystem& sys,
                                              const std::vector<Root>& noncompact);

// Outcome of restricting all roots to the span of Pi (coefficients over Pi,
// doubled so that every entry is an exact integer: 2*(delta,alpha_i)/(alpha_i,alpha_i)).
struct RestrictedProfile {
  bool tube = false;        // no restriction of the form +-1/2 alpha_i alone
  bool consistent = false;  // every nonzero restriction fits the theorem's alternatives
  // Multiset of restriction shapes over positive roots, keyed by the sorted
  // doubled coefficient pattern, e.g. "(1,1)", "(1)", "(2)", "0".
  std::map<std::string, int> shapes;
};

RestrictedProfile restricted_root_profile(const HSSDescriptor& hss);

// The classical tube-type list: G(n,n), G^{II}(2k,2k), G^{III}(n,n), Q^n, E7
// (rank-1 spaces: only the projective line). Used as a cross-check.
bool tube_by_known_list(char family, int p, int q);

// E7 dictionary between the marked-diagram simple roots and the x-coordinate
// model (positive roots x_i-x_j, x_i+x_j+x_k, d-x_i with d = x_1+...+x_7).
// x_coeffs holds the x_i coefficients plus d_coeff copies of d.
Root e7_root_from_x(const RootSystem& sys, const std::vector<int>& x_coeffs, int d_coeff);
Root e7_x_minus(const RootSystem& sys, int i, int j);            // x_i - x_j
Root e7_x_sum(const RootSystem& sys, int i, int j, int k);       // x_i + x_j + x_k
Root e7_d_minus(const RootSystem& sys, int i);                   // d - x_i

// Labels of every supported space with parameters within the acceptance
// ranges, optionally capped at max_rank (Pi size).
std::vector<std::string> spaces_in_range(std::optional<int> max_rank = std::nullopt);

}  // namespace hss

#endif

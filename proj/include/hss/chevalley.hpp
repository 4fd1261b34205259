#ifndef HSS_CHEVALLEY_HPP
#define HSS_CHEVALLEY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hss/matrix.hpp"
#include "hss/rational.hpp"
#include "hss/rootsys.hpp"

namespace hss {

// Sparse element of the complex simple Lie algebra: a Cartan part over the
// simple coroots h_{alpha_i} plus root-vector coefficients (both signs).
// Zero coefficients are never stored.
struct LieElement {
  std::vector<GRat> cartan;
  std::map<Root, GRat> roots;

  static LieElement zero(int rank) {
    LieElement e;
    e.cartan.assign(rank, GRat(0));
    return e;
  }
  static LieElement root_vector(int rank, const Root& r, GRat c = GRat(1)) {
    LieElement e = zero(rank);
    if (!c.is_zero()) e.roots[r] = std::move(c);
    return e;
  }

  bool is_zero() const;
  LieElement& operator+=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { a += b; return a; }
  friend LieElement operator*(const GRat& s, LieElement e);
  friend LieElement operator-(const LieElement& e) { return GRat(-1) * e; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a + (-b); }
  friend bool operator==(const LieElement& a, const LieElement& b);
};

// Chevalley structure constants, normalized so [e_a, e_{-a}] = h_a (coroot)
// and all N_{a,b} are integers with |N_{a,b}| = p+1. Signs are fixed by
// giving every extraspecial pair the constant +(p+1) in the canonical root
// order; all remaining constants follow from the Jacobi identity.
class StructureConstants {
 public:
  explicit StructureConstants(std::shared_ptr<const RootSystem> sys);

  const RootSystem& sys() const { return *sys_; }
  std::shared_ptr<const RootSystem> sys_ptr() const { return sys_; }
  int rank() const { return sys_->rank(); }

  // N_{a,b}; zero when a+b is not a root. Both arguments must be roots.
  Int n(const Root& a, const Root& b) const;

  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // Conjugate-linear involution of the compact real form:
  // tau(e_a) = -e_{-a}, tau(h) = -h on real Cartan coefficients.
  LieElement compact_conjugate(const LieElement& x) const;

  // Jacobi identity on the basis triple (checked exactly); returns the
  // defect, which must be zero.
  LieElement jacobi_defect(const LieElement& x, const LieElement& y, const LieElement& z) const;

  // Deterministic text form of the N-table (positive pairs), for snapshots.
  std::string serialize_n_table() const;

 private:
  std::shared_ptr<const RootSystem> sys_;
  // Keyed by signed root encoding: positive root k -> k+1, negative -> -(k+1).
  std::map<std::pair<long, long>, Int> table_;

  long encode(const Root& r) const;
  Int lookup_pp(const Root& a, const Root& b) const;
  Int derive_full(const Root& a, const Root& b) const;
};

StructureConstants build_structure_constants(std::shared_ptr<const RootSystem> sys);

// An element asserted (and verified) to lie in the compact real form.
struct RealElement {
  LieElement value;
  static RealElement checked(const StructureConstants& sc, LieElement v);
};

// Dimension over Q of the real span of the given elements, treating each
// Gaussian-rational coordinate as two rational coordinates.
std::size_t real_span_dimension(const RootSystem& sys, const std::vector<LieElement>& elements);

// Complex span dimension of the given elements.
std::size_t complex_span_dimension(const RootSystem& sys, const std::vector<LieElement>& elements);

// Full coordinate vector of an element over (cartan, positive roots,
// negative roots) in canonical order; length rank + 2*#positive.
std::vector<GRat> coordinates(const RootSystem& sys, const LieElement& e);

// Real-split coordinates (re/im interleaved), length 2*(rank + 2*#positive).
std::vector<Rat> real_coordinates(const RootSystem& sys, const LieElement& e);

}  // namespace hss

#endif

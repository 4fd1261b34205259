#ifndef HSS_ROOTSYS_HPP
#define HSS_ROOTSYS_HPP

#include <map>
#include <string>
#include <vector>

#include "hss/rational.hpp"

namespace hss {

// Coefficient vector over the simple-root basis. All nonnegative (positive
// root) or all nonpositive (negative root).
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  bool is_positive() const { return height() > 0; }

  Root operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  friend Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
  }
  friend Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
  }
  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }
};

std::string to_string(const Root& r);

// Cartan matrix plus the diagonal symmetrizer d_i = (alpha_i, alpha_i)/2.
// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i).
struct CartanDatum {
  std::string label;
  char series = 0;  // 'A','B','C','D','E'
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<Rat> sym;

  // Supported: A,B,C,D of any rank >= 1 (D >= 3), E6, E7.
  static CartanDatum make(char series, int rank);

  void validate() const;  // throws on a non positive definite symmetrization
};

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }

  // Sorted by (height, lexicographic coeffs); index order is the canonical
  // root order used everywhere downstream.
  const std::vector<Root>& positive_roots() const { return positive_; }

  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;
  // Index into positive_roots(); throws if not a positive root.
  std::size_t positive_index(const Root& r) const;

  Root simple(int i) const;

  // (beta, delta) under the symmetrized Cartan form.
  Rat inner(const Root& beta, const Root& delta) const;
  // <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha); both must be roots.
  int pairing(const Root& beta, const Root& alpha) const;

  // Largest p with beta - p*alpha a root (alpha, beta roots, beta != +-alpha).
  int chain_down(const Root& beta, const Root& alpha) const;

  // Coroot of delta expanded over simple coroots: h_delta = sum c_i h_{alpha_i},
  // c_i = k_i (alpha_i,alpha_i)/(delta,delta) for delta = sum k_i alpha_i.
  std::vector<int> coroot_coeffs(const Root& delta) const;

  Root highest_root() const { return positive_.back(); }

 private:
  CartanDatum datum_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
};

RootSystem generate_roots(const CartanDatum& datum);

// Classical e-coordinate realization of the simple roots (A: n+1 coords,
// B/C/D: n coords). Used for the matrix-model dictionary.
std::vector<std::vector<Rat>> simple_roots_e_coords(char series, int rank);

// Expected positive-root count for a supported type.
std::size_t classical_positive_count(char series, int rank);

}  // namespace hss

#endif

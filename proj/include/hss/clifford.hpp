#ifndef HSS_CLIFFORD_HPP
#define HSS_CLIFFORD_HPP

#include <optional>
#include <vector>

#include "hss/matrix.hpp"
#include "hss/rational.hpp"

namespace hss {

// A scalar multiple of a Fock basis state w_{i_1} ^ ... ^ w_{i_k}, indices
// ascending, encoded as a bitmask over {0, ..., wdim-1}.
struct FockState {
  unsigned subset = 0;
  GRat coefficient{1};
};

// a_i^dag (insert, dagger = true) or a_i (remove) with the alternating sign
// (-1)^{#indices below i present in the state}; nullopt when annihilated.
std::optional<FockState> generator_action(int i, bool dagger, const FockState& state);

// Matrix of a_i^dag / a_i over the full 2^wdim subset basis.
Matrix<GRat> fock_operator(int wdim, int i, bool dagger);

// Clifford generators e_1..e_{2*wdim} on the Fock space of wdim modes:
// e_{2j-1} = a_j^dag - a_j, e_{2j} = -i (a_j^dag + a_j); they satisfy
// e_a e_b + e_b e_a = -2 delta_{ab}.
std::vector<Matrix<GRat>> clifford_generators_modes(int wdim);

// Generators for Q^{2l} (ambient so(2l+2)): wdim = l+1 modes.
inline std::vector<Matrix<GRat>> clifford_generators(int ell) {
  return clifford_generators_modes(ell + 1);
}

// Rank of the spin-embedding tangent vector -(a_1^dag - a_1) a_{l+1} on S^+
// for Q^{2l} -> G(2^{l-1}, 2^{l-1}); independently rebuilt from the word
// (1/2)(e_1 e_{2l+1} - i e_1 e_{2l+2}) and asserted equal.
std::size_t spin_tangent_rank_even(int ell);

// Same for Q^{2l-1}: the odd Clifford algebra C(2l+1) realized on the 2^l
// spin module through psi(x') = x' e_{2l-1}; returns the rank of the image of
// the tangent vector Z = (-i, 0, ..., 0).
std::size_t spin_tangent_rank_odd(int ell);

// Restriction of an even operator to the half-spin space S^+ (even-parity
// subsets, ascending bitmask order).
Matrix<GRat> restrict_even(const Matrix<GRat>& op, int wdim);

// Indices (in bitmask order) of the even-parity subsets.
std::vector<unsigned> even_subsets(int wdim);

}  // namespace hss

#endif

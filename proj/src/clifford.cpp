#include "hss/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace hss {

namespace {

Matrix<GRat> scaled(const GRat& s, Matrix<GRat> m) { return s * m; }

Matrix<GRat> sub(const Matrix<GRat>& a, const Matrix<GRat>& b) {
  Matrix<GRat> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

}  // namespace

std::optional<FockState> generator_action(int i, bool dagger, const FockState& state) {
  if (i < 1) throw std::invalid_argument("mode index is 1-based");
  const unsigned bit = 1u << (i - 1);
  const bool present = state.subset & bit;
  if (dagger == present) return std::nullopt;
  const unsigned below = state.subset & (bit - 1);
  const int sign = std::popcount(below) % 2 == 0 ? 1 : -1;
  return FockState{state.subset ^ bit, GRat(sign) * state.coefficient};
}

Matrix<GRat> fock_operator(int wdim, int i, bool dagger) {
  const std::size_t dim = std::size_t(1) << wdim;
  Matrix<GRat> m(dim, dim);
  for (unsigned s = 0; s < dim; ++s)
    if (auto out = generator_action(i, dagger, FockState{s, GRat(1)}))
      m(out->subset, s) = out->coefficient;
  return m;
}

std::vector<Matrix<GRat>> clifford_generators_modes(int wdim) {
  if (wdim < 1) throw std::invalid_argument("need at least one mode");
  std::vector<Matrix<GRat>> gens;
  for (int j = 1; j <= wdim; ++j) {
    const Matrix<GRat> cr = fock_operator(wdim, j, true);
    const Matrix<GRat> an = fock_operator(wdim, j, false);
    gens.push_back(sub(cr, an));
    Matrix<GRat> sum = cr;
    for (std::size_t r = 0; r < sum.rows(); ++r)
      for (std::size_t c = 0; c < sum.cols(); ++c) sum(r, c) += an(r, c);
    gens.push_back(scaled(-GRat::i(), std::move(sum)));
  }
  return gens;
}

std::vector<unsigned> even_subsets(int wdim) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << wdim); ++s)
    if (std::popcount(s) % 2 == 0) out.push_back(s);
  return out;
}

Matrix<GRat> restrict_even(const Matrix<GRat>& op, int wdim) {
  const auto basis = even_subsets(wdim);
  // The complement must not be hit: the operator has to be parity-even.
  Matrix<GRat> r(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (unsigned row = 0; row < op.rows(); ++row) {
      const GRat& v = op(row, basis[c]);
      if (v.is_zero()) continue;
      if (std::popcount(row) % 2 != 0)
        throw std::logic_error("operator does not preserve the half-spin parity");
    }
    for (std::size_t rr = 0; rr < basis.size(); ++rr) r(rr, c) = op(basis[rr], basis[c]);
  }
  return r;
}

std::size_t spin_tangent_rank_even(int ell) {
  if (ell < 2) throw std::invalid_argument("ell too small");
  const int wdim = ell + 1;
  // Word form (1/2)(e_1 e_{2l+1} - i e_1 e_{2l+2}).
  const auto e = clifford_generators_modes(wdim);
  const Matrix<GRat> word = scaled(
      GRat(Rat(1) / Rat(2)),
      sub(e[0] * e[2 * ell], scaled(GRat::i(), e[0] * e[2 * ell + 1])));
  // Direct form -(a_1^dag - a_1) a_{l+1}.
  const Matrix<GRat> direct =
      scaled(GRat(-1), sub(fock_operator(wdim, 1, true), fock_operator(wdim, 1, false)) *
                           fock_operator(wdim, wdim, false));
  if (!(word == direct)) throw std::logic_error("word and direct operator forms disagree");
  // It annihilates every state without w_{l+1}.
  for (unsigned s = 0; s < (1u << wdim); ++s) {
    if (s & (1u << ell)) continue;
    for (unsigned r = 0; r < direct.rows(); ++r)
      if (!direct(r, s).is_zero())
        throw std::logic_error("operator fails to annihilate a w_{l+1}-free state");
  }
  return rank(restrict_even(direct, wdim));
}

std::size_t spin_tangent_rank_odd(int ell) {
  if (ell < 2) throw std::invalid_argument("ell too small");
  // psi(x') = x' e_{2l-1} identifies C(E') with C^+(2l+1); the psi-images of
  // the 2l generators of E' realize C(2l) on the 2^l spin module, with
  // e_{2l-1} itself acting as the identity.
  const int wdim = ell;
  const auto h = clifford_generators_modes(wdim);
  // Clifford relations for the psi-images: h_a h_b + h_b h_a = -2 delta_{ab}.
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a; b < h.size(); ++b) {
      Matrix<GRat> anti = h[a] * h[b];
      const Matrix<GRat> ba = h[b] * h[a];
      for (std::size_t i = 0; i < anti.rows(); ++i)
        for (std::size_t j = 0; j < anti.cols(); ++j) {
          anti(i, j) += ba(i, j);
          GRat want = (a == b && i == j) ? GRat(-2) : GRat(0);
          if (anti(i, j) != want)
            throw std::logic_error("psi-images violate the Clifford relations");
        }
    }
  // Tangent vector Z = (-i, 0, ..., 0): (1/2)(e_1 e_{2l} - i e_1 e_{2l+1})
  // = (1/2)(h_1 h_{2l-1} - i h_1 h_{2l}) through psi, i.e. -(a_1^dag-a_1)a_l.
  const Matrix<GRat> word = scaled(
      GRat(Rat(1) / Rat(2)),
      sub(h[0] * h[2 * ell - 2], scaled(GRat::i(), h[0] * h[2 * ell - 1])));
  const Matrix<GRat> direct =
      scaled(GRat(-1), sub(fock_operator(wdim, 1, true), fock_operator(wdim, 1, false)) *
                           fock_operator(wdim, wdim, false));
  if (!(word == direct)) throw std::logic_error("word and direct operator forms disagree");
  return rank(direct);
}

}  // namespace hss

#ifndef HSS_MATRIX_MODELS_HPP
#define HSS_MATRIX_MODELS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hss/hss.hpp"
#include "hss/matrix.hpp"
#include "hss/rigidity.hpp"

namespace hss {

enum class MatSymmetry { none, symmetric, antisymmetric };

// Exact matrix model of a tangent vector in a Type I/II/III ambient.
struct TangentMatrix {
  Matrix<Rat> entries;
  MatSymmetry symmetry = MatSymmetry::none;

  void validate() const;  // throws if the symmetry constraint fails
};

// A tangent vector supported on a single block I x J whose submatrix has
// full rank min(|I|, |J|).
struct BlockGenerator {
  TangentMatrix matrix;
  std::vector<std::size_t> rows;  // I (0-based)
  std::vector<std::size_t> cols;  // J (0-based)
};

// H(v) = 2 D A D for D in m^+ (p x q) and A in m^- (q x p).
TangentMatrix h_matrix(const TangentMatrix& d, const TangentMatrix& a);

// Condition C: the block supports cover all p x q positions (modulo the
// transpose identification for symmetric/antisymmetric ambients). A
// generator violating its full-rank-on-block invariant yields catalog-error.
CheckReport condition_c_check(const std::vector<BlockGenerator>& generators, std::size_t p,
                              std::size_t q, MatSymmetry symmetry,
                              const std::string& space_label,
                              const std::string& embedding_name = "");

// Rank of the induced action of the rank-1 nilpotent T (T w_{n+1} = w_1,
// T w_j = 0 otherwise) on Lambda^m W, dim W = n+1. Equals C(n-1, m-1).
std::size_t lambda_rep_rank(int n, int m);

// Exhaustive verification of the block-span lemma plus the induced Condition C
// coverage on the C(n,m-1) x C(n,m) matrix model.
CheckReport block_span_lemma_check(int n, int m);

// The n induced generators T_k of the Lambda^m model of P^n inside
// G(C(n,m-1), C(n,m)): rows are wedges containing w_{n+1}, columns wedges
// without it, both in lexicographic subset order.
std::vector<BlockGenerator> lambda_block_generators(int n, int m);

// Tangent ranks of the graph of the Veronese curve t -> (line(t), conic(t))
// inside the P^1 x P^2 block chart of G(2,3); with degenerate_control the
// second factor is frozen and the expected rank drops to 1.
std::vector<int> veronese_graph_rank(const std::vector<Rat>& t_values,
                                     bool degenerate_control = false);

// Dictionary between noncompact positive roots and matrix positions (i, j)
// (0-based) of the ambient model: e_i - e_{p+j} for Type I, e_i + e_j for
// Types II (i < j) and III (i <= j).
std::map<std::pair<int, int>, Root> matrix_entry_dictionary(const HSSDescriptor& hss);

MatSymmetry ambient_symmetry(const HSSDescriptor& hss);

// Matrix-model sizes (p, q) of the ambient.
std::pair<std::size_t, std::size_t> model_shape(const HSSDescriptor& hss);

// The matrix model of an m^+ element through the dictionary (Types II/III
// mirror the entry across the diagonal, with the sign for antisymmetric).
TangentMatrix tangent_matrix_of(const HSSDescriptor& hss, const LieElement& e);

// Rank of A |-> 2 D A D on the symmetry-constrained matrix space, together
// with its kernel dimension.
std::pair<std::size_t, std::size_t> h_matrix_rank_kernel(const TangentMatrix& d);

// Inverse of tangent_matrix_of: the m^+ element whose matrix model is `a`
// (reads entry (i,j) with i < j for Type II and i <= j for Type III).
LieElement lie_element_of(const HSSDescriptor& hss, const Matrix<Rat>& a);

}  // namespace hss

#endif

#ifndef HSS_CATALOG_HPP
#define HSS_CATALOG_HPP

#include <string>
#include <vector>

#include "hss/hss.hpp"
#include "hss/matrix_models.hpp"

namespace hss {

// A named (H_2)-embedding X in an ambient space, given by an explicit basis
// of its holomorphic tangent space V inside m^+.
struct H2Embedding {
  std::string name;
  std::string ambient_label;
  std::vector<LieElement> generators;  // basis of V = T_o(X)
  int dim_m = 0;                       // dim X expected from the classification
  bool diagonal_type = false;          // V contains a maximal-rank ambient vector
  // "computed": matrix/H-operator rank of `representative`;
  // "metadata": asserted value (exceptional ambients without a rank criterion).
  std::string diagonal_source;
  // Candidate maximal-rank element of V backing a computed diagonal_type;
  // zero when diagonal_source is "metadata".
  LieElement representative;
  // Distinguished block generators for the Condition C coverage check; empty
  // for ambients without a classical matrix model.
  std::vector<BlockGenerator> block_support;
  bool catalog_error = false;  // the classification's description is inconsistent
  std::string note;            // context for a catalog_error or a known caveat
};

// The implemented embeddings for this ambient (empty for rank-1 spaces).
// Deterministic order. A described-but-inconsistent entry is returned with
// catalog_error set instead of being silently repaired.
std::vector<H2Embedding> catalog_embeddings(const HSSDescriptor& hss);

// Lookup by name; throws if absent.
const H2Embedding& find_embedding(const std::vector<H2Embedding>& list,
                                  const std::string& name);

// Comparison of the derived noncompact positive roots against the printed
// coefficient lists for E6/E7 (multiset comparison; `mismatch` = number of
// printed entries without a computed partner plus computed roots absent from
// the printed list).
struct PrintedListComparison {
  int printed_count = 0;
  int mismatch = 0;
  std::vector<std::string> extra_printed;        // printed beyond the derived multiset
  std::vector<std::string> missing_from_printed; // derived roots the list omits
};

PrintedListComparison compare_printed_root_list(const HSSDescriptor& hss);

}  // namespace hss

#endif

#include "hss/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hss/clifford.hpp"
#include "hss/rigidity.hpp"

namespace hss {

namespace {

using Dict = std::map<std::pair<int, int>, Root>;

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Maximal matrix rank attained by tangent vectors of a classical ambient.
std::size_t ambient_max_matrix_rank(const HSSDescriptor& hss) {
  switch (hss.family) {
    case 'G': return static_cast<std::size_t>(std::min(hss.p, hss.q));
    case 'S': return static_cast<std::size_t>(2 * (hss.p / 2));
    case 'Y': return static_cast<std::size_t>(hss.p);
    default: throw std::invalid_argument("no matrix rank scale for " + hss.label);
  }
}

// diagonal_type from the representative: matrix rank for classical ambients,
// bijectivity of the H operator for the remaining tube ambients.
void set_computed_diagonal(const HSSDescriptor& hss, H2Embedding& e,
                           const LieElement& rep) {
  e.representative = rep;
  e.diagonal_source = "computed";
  if (hss.family == 'G' || hss.family == 'S' || hss.family == 'Y')
    e.diagonal_type = rank(tangent_matrix_of(hss, rep).entries) == ambient_max_matrix_rank(hss);
  else if (hss.tube)
    e.diagonal_type =
        rank(h_operator_matrix(hss, rep)) == static_cast<std::size_t>(hss.dim_n);
  else
    throw std::logic_error("no computed diagonal criterion for " + hss.label);
}

// Validates that every block-support element lies in span(V); a violation is
// a catalog defect, not a mathematical failure.
void attach_block_support(const HSSDescriptor& hss, H2Embedding& e,
                          std::vector<BlockGenerator> blocks) {
  const Matrix<GRat> vmat = tangent_space_matrix(hss, e.generators);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const LieElement x = lie_element_of(hss, blocks[k].matrix.entries);
    Matrix<GRat> row(0, vmat.cols());
    row.append_row(noncompact_coords(hss, x));
    if (!row_space_contains(vmat, row)) {
      e.catalog_error = true;
      e.note += "block generator " + std::to_string(k) + " escapes span(V); ";
    }
  }
  e.block_support = std::move(blocks);
}

H2Embedding base(const HSSDescriptor& hss, std::string name, int dim_m) {
  H2Embedding e;
  e.name = std::move(name);
  e.ambient_label = hss.label;
  e.dim_m = dim_m;
  e.representative = LieElement::zero(hss.rank());
  return e;
}

H2Embedding diagonal_curve(const HSSDescriptor& hss) {
  H2Embedding e = base(hss, "diagonal-curve", 1);
  e.generators = {hss.diagonal_vector()};
  set_computed_diagonal(hss, e, hss.diagonal_vector());
  if (hss.family == 'G' || hss.family == 'S' || hss.family == 'Y') {
    BlockGenerator g;
    g.matrix = tangent_matrix_of(hss, hss.diagonal_vector());
    const auto [p, q] = model_shape(hss);
    g.rows = all_indices(p);
    g.cols = all_indices(q);
    attach_block_support(hss, e, {std::move(g)});
  }
  return e;
}

// ---------------------------------------------------------------------------
// Type I ambient G(p,q).

LieElement unit_of(const HSSDescriptor& hss, const Dict& dict, int i, int j) {
  return LieElement::root_vector(hss.rank(), dict.at({i, j}));
}

void type_i_products(const HSSDescriptor& hss, const Dict& dict,
                     std::vector<H2Embedding>& out) {
  const int p = hss.p, q = hss.q;
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q; ++s) {
      if (r * q != s * p) continue;                      // proportional splits only
      if (std::pair{r, s} > std::pair{p - r, q - s}) continue;  // dedupe mirror
      H2Embedding e = base(hss,
                           "G(" + std::to_string(r) + "," + std::to_string(s) + ")xG(" +
                               std::to_string(p - r) + "," + std::to_string(q - s) + ")",
                           r * s + (p - r) * (q - s));
      Matrix<Rat> rep(p, q);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
          if ((i < r && j < s) || (i >= r && j >= s))
            e.generators.push_back(unit_of(hss, dict, i, j));
      for (int t = 0; t < std::min(r, s); ++t) rep(t, t) = Rat(1);
      for (int t = 0; t < std::min(p - r, q - s); ++t) rep(r + t, s + t) = Rat(1);
      set_computed_diagonal(hss, e, lie_element_of(hss, rep));
      BlockGenerator g;
      g.matrix.entries = rep;
      g.rows = all_indices(p);
      g.cols = all_indices(q);
      attach_block_support(hss, e, {std::move(g)});
      out.push_back(std::move(e));
    }
}

void type_ii_inside_i(const HSSDescriptor& hss, const Dict& dict,
                      std::vector<H2Embedding>& out) {
  const int n = hss.p;
  H2Embedding e = base(hss, "G^{II}(" + std::to_string(n) + "," + std::to_string(n) + ")",
                       n * (n - 1) / 2);
  std::vector<BlockGenerator> blocks;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      e.generators.push_back(unit_of(hss, dict, i, j) - unit_of(hss, dict, j, i));
      BlockGenerator g;
      g.matrix.entries = Matrix<Rat>(n, n);
      g.matrix.entries(i, j) = Rat(1);
      g.matrix.entries(j, i) = Rat(-1);
      g.rows = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      g.cols = g.rows;
      blocks.push_back(std::move(g));
    }
  Matrix<Rat> rep(n, n);
  for (int k = 0; k + 1 < n; k += 2) {
    rep(k, k + 1) = Rat(1);
    rep(k + 1, k) = Rat(-1);
  }
  set_computed_diagonal(hss, e, lie_element_of(hss, rep));
  attach_block_support(hss, e, std::move(blocks));
  out.push_back(std::move(e));
}

void type_iii_inside_i(const HSSDescriptor& hss, const Dict& dict,
                       std::vector<H2Embedding>& out) {
  const int n = hss.p;
  H2Embedding e = base(hss, "G^{III}(" + std::to_string(n) + "," + std::to_string(n) + ")",
                       n * (n + 1) / 2);
  std::vector<BlockGenerator> blocks;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      e.generators.push_back(i == j
                                 ? unit_of(hss, dict, i, i)
                                 : unit_of(hss, dict, i, j) + unit_of(hss, dict, j, i));
      BlockGenerator g;
      g.matrix.entries = Matrix<Rat>(n, n);
      g.matrix.entries(i, j) = Rat(1);
      if (i != j) g.matrix.entries(j, i) = Rat(1);
      g.rows = {static_cast<std::size_t>(i)};
      if (i != j) g.rows.push_back(static_cast<std::size_t>(j));
      g.cols = g.rows;
      blocks.push_back(std::move(g));
    }
  set_computed_diagonal(hss, e, lie_element_of(hss, Matrix<Rat>::identity(n)));
  attach_block_support(hss, e, std::move(blocks));
  out.push_back(std::move(e));
}

void lambda_p3(const HSSDescriptor& hss, std::vector<H2Embedding>& out) {
  H2Embedding e = base(hss, "P3-Lambda2", 3);
  auto blocks = lambda_block_generators(3, 2);
  Matrix<Rat> rep(3, 3);
  for (const BlockGenerator& g : blocks) {
    e.generators.push_back(lie_element_of(hss, g.matrix.entries));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) rep(i, j) += g.matrix.entries(i, j);
  }
  set_computed_diagonal(hss, e, lie_element_of(hss, rep));
  attach_block_support(hss, e, std::move(blocks));
  out.push_back(std::move(e));
}

void spin_q6(const HSSDescriptor& hss, const Dict& dict, std::vector<H2Embedding>& out) {
  const int ell = 3, wdim = ell + 1;
  // Reference plane E = even Fock states containing w_{l+1}; complement F.
  std::vector<unsigned> ebasis, fbasis;
  for (unsigned s : even_subsets(wdim))
    (s & (1u << ell) ? ebasis : fbasis).push_back(s);
  H2Embedding e = base(hss, "Spin-Q6", 2 * ell);
  Matrix<Rat> rep_real;
  for (int a = 1; a <= 2 * ell; ++a) {
    // m_a = -e_a a_{l+1} maps E into F and annihilates F.
    const Matrix<GRat> op = GRat(-1) * (clifford_generators_modes(wdim)[a - 1] *
                                        fock_operator(wdim, wdim, false));
    LieElement gen = LieElement::zero(hss.rank());
    Matrix<Rat> real_part(fbasis.size(), ebasis.size());
    bool is_real = true;
    for (std::size_t f = 0; f < fbasis.size(); ++f)
      for (std::size_t c = 0; c < ebasis.size(); ++c) {
        const GRat& v = op(fbasis[f], ebasis[c]);
        if (v.is_zero()) continue;
        gen += LieElement::root_vector(
            hss.rank(), dict.at({static_cast<int>(f), static_cast<int>(c)}), v);
        if (v.im != 0) is_real = false;
        else real_part(f, c) = v.re;
      }
    e.generators.push_back(std::move(gen));
    if (a == 1) {
      if (!is_real) throw std::logic_error("spin representative unexpectedly complex");
      rep_real = real_part;
    }
  }
  set_computed_diagonal(hss, e, lie_element_of(hss, rep_real));
  BlockGenerator g;
  g.matrix.entries = rep_real;
  g.rows = all_indices(4);
  g.cols = all_indices(4);
  attach_block_support(hss, e, {std::move(g)});
  out.push_back(std::move(e));
}

// ---------------------------------------------------------------------------
// Type II / III ambients.

void grr_inside(const HSSDescriptor& hss, const Dict& dict,
                std::vector<H2Embedding>& out) {
  const int n = hss.p, r = n / 2;
  const bool anti = hss.family == 'S';
  H2Embedding e = base(hss, "G(" + std::to_string(r) + "," + std::to_string(r) + ")",
                       r * r);
  Matrix<Rat> rep(n, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      e.generators.push_back(
          LieElement::root_vector(hss.rank(), dict.at({i, r + j})));
  for (int i = 0; i < r; ++i) {
    rep(i, r + i) = Rat(1);
    rep(r + i, i) = anti ? Rat(-1) : Rat(1);
  }
  set_computed_diagonal(hss, e, lie_element_of(hss, rep));
  BlockGenerator g;
  g.matrix.entries = rep;
  g.rows = all_indices(n);
  g.cols = all_indices(n);
  attach_block_support(hss, e, {std::move(g)});
  out.push_back(std::move(e));
}

void factor_products(const HSSDescriptor& hss, const Dict& dict,
                     std::vector<H2Embedding>& out) {
  const int n = hss.p;
  const bool anti = hss.family == 'S';
  const std::string fam = anti ? "G^{II}" : "G^{III}";
  const int rmin = anti ? 2 : 1;  // an antisymmetric 1x1 factor is empty
  for (int r = rmin; r <= n - r; ++r) {
    const int t = n - r;
    if (anti && t < 2) continue;
    auto fdim = [&](int k) { return anti ? k * (k - 1) / 2 : k * (k + 1) / 2; };
    H2Embedding e = base(hss,
                         fam + "(" + std::to_string(r) + "," + std::to_string(r) + ")x" +
                             fam + "(" + std::to_string(t) + "," + std::to_string(t) + ")",
                         fdim(r) + fdim(t));
    std::vector<BlockGenerator> blocks;
    auto in_same_factor = [&](int i, int j) { return (i < r) == (j < r); };
    for (int i = 0; i < n; ++i)
      for (int j = anti ? i + 1 : i; j < n; ++j) {
        if (!in_same_factor(i, j)) continue;
        e.generators.push_back(LieElement::root_vector(hss.rank(), dict.at({i, j})));
        BlockGenerator g;
        g.matrix.entries = Matrix<Rat>(n, n);
        g.matrix.entries(i, j) = Rat(1);
        if (i != j) g.matrix.entries(j, i) = anti ? Rat(-1) : Rat(1);
        g.rows = {static_cast<std::size_t>(i)};
        if (i != j) g.rows.push_back(static_cast<std::size_t>(j));
        g.cols = g.rows;
        blocks.push_back(std::move(g));
      }
    // Cross positions (factor 1, factor 2) need a block element of V reaching
    // across; a rank-one (III) or rank-two-per-factor (II) sum suffices.
    if (anti) {
      for (int i = 0; i + 1 < r; i += 2)
        for (int j = r; j + 1 < n; j += 2) {
          BlockGenerator g;
          g.matrix.entries = Matrix<Rat>(n, n);
          g.matrix.entries(i, i + 1) = Rat(1);
          g.matrix.entries(i + 1, i) = Rat(-1);
          g.matrix.entries(j, j + 1) = Rat(1);
          g.matrix.entries(j + 1, j) = Rat(-1);
          g.rows = {static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1),
                    static_cast<std::size_t>(j), static_cast<std::size_t>(j + 1)};
          g.cols = g.rows;
          blocks.push_back(std::move(g));
        }
      // Shifted copies so every cross pair lands inside some 4x4 block.
      for (int i = r - 2; i >= 0 && r >= 2; i -= 1)
        for (int j = n - 2; j >= r; j -= 1) {
          BlockGenerator g;
          g.matrix.entries = Matrix<Rat>(n, n);
          g.matrix.entries(i, i + 1) = Rat(1);
          g.matrix.entries(i + 1, i) = Rat(-1);
          g.matrix.entries(j, j + 1) = Rat(1);
          g.matrix.entries(j + 1, j) = Rat(-1);
          g.rows = {static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1),
                    static_cast<std::size_t>(j), static_cast<std::size_t>(j + 1)};
          g.cols = g.rows;
          blocks.push_back(std::move(g));
        }
    } else {
      for (int i = 0; i < r; ++i)
        for (int j = r; j < n; ++j) {
          BlockGenerator g;
          g.matrix.entries = Matrix<Rat>(n, n);
          g.matrix.entries(i, i) = Rat(1);
          g.matrix.entries(j, j) = Rat(1);
          g.rows = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
          g.cols = g.rows;
          blocks.push_back(std::move(g));
        }
    }
    Matrix<Rat> rep(n, n);
    if (anti) {
      for (int i = 0; i + 1 < r; i += 2) {
        rep(i, i + 1) = Rat(1);
        rep(i + 1, i) = Rat(-1);
      }
      for (int j = r; j + 1 < n; j += 2) {
        rep(j, j + 1) = Rat(1);
        rep(j + 1, j) = Rat(-1);
      }
    } else {
      rep = Matrix<Rat>::identity(n);
    }
    set_computed_diagonal(hss, e, lie_element_of(hss, rep));
    attach_block_support(hss, e, std::move(blocks));
    out.push_back(std::move(e));
  }
}

// ---------------------------------------------------------------------------
// Hyperquadric ambient.

std::vector<Rat> quadric_e_coords(const HSSDescriptor& hss, const Root& r) {
  const auto simple =
      simple_roots_e_coords(hss.sys->datum().series, hss.sys->rank());
  std::vector<Rat> out(simple[0].size(), Rat(0));
  for (std::size_t k = 0; k < r.coeffs.size(); ++k)
    for (std::size_t t = 0; t < out.size(); ++t)
      out[t] += Rat(r.coeffs[k]) * simple[k][t];
  return out;
}

void subquadric(const HSSDescriptor& hss, std::vector<H2Embedding>& out) {
  const int n = hss.p;
  H2Embedding e = base(hss, "Q^" + std::to_string(n - 1), n - 1);
  // Classify the noncompact roots eps_1 - eps_j / eps_1 + eps_j / eps_1 by
  // their classical coordinates.
  std::map<std::pair<int, int>, Root> pm;  // (j, sign) -> root, j = 0 for pure eps_1
  int last = 0;
  for (const Root& r : hss.noncompact_pos) {
    const auto ec = quadric_e_coords(hss, r);
    if (ec[0] != Rat(1)) throw std::logic_error("unexpected quadric root shape");
    int j = 0, sign = 0;
    for (std::size_t t = 1; t < ec.size(); ++t) {
      if (ec[t] == Rat(0)) continue;
      if (j != 0 || (ec[t] != Rat(1) && ec[t] != Rat(-1)))
        throw std::logic_error("unexpected quadric root shape");
      j = static_cast<int>(t);
      sign = ec[t] == Rat(1) ? 1 : -1;
    }
    pm[{j, sign}] = r;
    last = std::max(last, j);
  }
  auto ev = [&](int j, int sign) {
    return LieElement::root_vector(hss.rank(), pm.at({j, sign}));
  };
  if (n % 2 == 1) {
    // so(n+1) = D-type inside B-type: drop the anisotropic eps_1 coordinate.
    for (int j = 1; j <= last; ++j) {
      e.generators.push_back(ev(j, -1));
      e.generators.push_back(ev(j, 1));
    }
  } else {
    // so(n+1) = B-type inside D-type: keep all coordinates but the last pair,
    // which contributes one anisotropic combination; the sign is fixed by the
    // total-geodesy of the resulting subspace.
    for (int j = 1; j < last; ++j) {
      e.generators.push_back(ev(j, -1));
      e.generators.push_back(ev(j, 1));
    }
    for (const GRat& c : {GRat(1), GRat(-1)}) {
      auto cand = e.generators;
      cand.push_back(ev(last, -1) + c * ev(last, 1));
      if (geodesic_closure(hss, cand, e.name).status == "pass") {
        e.generators = std::move(cand);
        break;
      }
    }
    if (e.generators.size() != static_cast<std::size_t>(n - 1))
      throw std::logic_error("no geodesic anisotropic combination for " + e.name);
  }
  set_computed_diagonal(hss, e, ev(1, -1) + ev(1, 1));
  out.push_back(std::move(e));
}

// ---------------------------------------------------------------------------
// Exceptional ambients.

Root tuple_root(const std::vector<int>& coeffs) { return Root{coeffs}; }

LieElement pair_vector(const HSSDescriptor& hss, const std::vector<int>& a,
                       const std::vector<int>& b) {
  return LieElement::root_vector(hss.rank(), tuple_root(a)) +
         LieElement::root_vector(hss.rank(), tuple_root(b));
}

void e6_embeddings(const HSSDescriptor& hss, std::vector<H2Embedding>& out) {
  {
    // diag-P2: e_{a1} + e_{g-a6} and e_{a1+a2} + e_g.
    H2Embedding e = base(hss, "diag-P2", 2);
    e.generators = {pair_vector(hss, {1, 0, 0, 0, 0, 0}, {1, 2, 3, 2, 1, 1}),
                    pair_vector(hss, {1, 1, 0, 0, 0, 0}, {1, 2, 3, 2, 1, 2})};
    e.diagonal_type = true;
    e.diagonal_source = "metadata";
    out.push_back(std::move(e));
  }
  {
    // P5xP1: every noncompact root without an a6 term, plus e_g.
    H2Embedding e = base(hss, "P5xP1", 6);
    for (const Root& r : hss.noncompact_pos)
      if (r.coeffs[5] == 0)
        e.generators.push_back(LieElement::root_vector(hss.rank(), r));
    e.generators.push_back(
        LieElement::root_vector(hss.rank(), hss.sys->highest_root()));
    e.diagonal_type = true;
    e.diagonal_source = "metadata";
    if (e.generators.size() != static_cast<std::size_t>(e.dim_m)) {
      e.catalog_error = true;
      e.note = "described generator count " + std::to_string(e.generators.size()) +
               " != dim " + std::to_string(e.dim_m);
    }
    out.push_back(std::move(e));
  }
}

void e7_embeddings(const HSSDescriptor& hss, std::vector<H2Embedding>& out) {
  out.push_back(diagonal_curve(hss));
  {
    // diag-P3: e_{a1}+e_g, e_{a1+a2}+e_{g-a6}, e_{a1+a2+a3}+e_{g-a5-a6}.
    H2Embedding e = base(hss, "diag-P3", 3);
    e.generators = {
        pair_vector(hss, {1, 0, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 3, 2, 2}),
        pair_vector(hss, {1, 1, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 3, 1, 2}),
        pair_vector(hss, {1, 1, 1, 0, 0, 0, 0}, {1, 2, 3, 4, 2, 1, 2})};
    e.diagonal_type = false;  // classification: non-diagonal chain through G(2,6)
    e.diagonal_source = "metadata";
    out.push_back(std::move(e));
  }
  {
    // P5xP2 as described: every noncompact root without an a5 term plus e_g.
    // The enumeration does not reach dim 7; surfaced, never repaired.
    H2Embedding e = base(hss, "P5xP2", 7);
    for (const Root& r : hss.noncompact_pos)
      if (r.coeffs[4] == 0)
        e.generators.push_back(LieElement::root_vector(hss.rank(), r));
    e.generators.push_back(
        LieElement::root_vector(hss.rank(), hss.sys->highest_root()));
    e.diagonal_type = false;
    e.diagonal_source = "metadata";
    if (e.generators.size() != static_cast<std::size_t>(e.dim_m)) {
      e.catalog_error = true;
      e.note = "described generator count " + std::to_string(e.generators.size()) +
               " != dim " + std::to_string(e.dim_m);
    }
    out.push_back(std::move(e));
  }
}

}  // namespace

std::vector<H2Embedding> catalog_embeddings(const HSSDescriptor& hss) {
  std::vector<H2Embedding> out;
  if (hss.rank_r < 2) return out;
  switch (hss.family) {
    case 'G': {
      const Dict dict = matrix_entry_dictionary(hss);
      if (hss.p == hss.q) out.push_back(diagonal_curve(hss));
      type_i_products(hss, dict, out);
      if (hss.p == hss.q) {
        type_ii_inside_i(hss, dict, out);
        type_iii_inside_i(hss, dict, out);
        if (hss.p == 3) lambda_p3(hss, out);
        if (hss.p == 4) spin_q6(hss, dict, out);
      }
      break;
    }
    case 'S':
    case 'Y': {
      const Dict dict = matrix_entry_dictionary(hss);
      if (hss.tube) out.push_back(diagonal_curve(hss));
      if (hss.p % 2 == 0) grr_inside(hss, dict, out);
      factor_products(hss, dict, out);
      break;
    }
    case 'Q': {
      out.push_back(diagonal_curve(hss));
      subquadric(hss, out);
      break;
    }
    case '6': e6_embeddings(hss, out); break;
    case '7': e7_embeddings(hss, out); break;
    default: throw std::invalid_argument("unsupported family for " + hss.label);
  }
  return out;
}

const H2Embedding& find_embedding(const std::vector<H2Embedding>& list,
                                  const std::string& name) {
  for (const H2Embedding& e : list)
    if (e.name == name) return e;
  throw std::invalid_argument("no catalog embedding named " + name);
}

PrintedListComparison compare_printed_root_list(const HSSDescriptor& hss) {
  static const std::vector<std::vector<int>> e6_printed = {
      {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 1},
      {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 0}, {1, 1, 2, 1, 0, 1},
      {1, 1, 1, 1, 1, 1}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 1, 1, 1}, {1, 2, 2, 1, 1, 1},
      {1, 1, 2, 2, 1, 1}, {1, 2, 2, 2, 1, 1}, {1, 2, 3, 2, 1, 1}, {1, 2, 3, 2, 1, 2}};
  static const std::vector<std::vector<int>> e7_printed = {
      {1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0},
      {1, 1, 1, 1, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 0, 0},
      {1, 1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 2, 1, 0, 1}, {1, 1, 1, 2, 1, 1, 1}, {1, 1, 2, 2, 1, 0, 1},
      {1, 1, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 1, 1, 1}, {1, 2, 2, 2, 1, 0, 1},
      {1, 1, 2, 2, 2, 1, 1}, {1, 2, 2, 2, 1, 1, 1}, {1, 1, 2, 3, 2, 1, 1},
      {1, 2, 2, 2, 2, 1, 1}, {1, 1, 2, 3, 2, 1, 2}, {1, 2, 2, 3, 2, 1, 1},
      {1, 2, 2, 3, 2, 1, 2}, {1, 2, 3, 3, 2, 1, 1}, {1, 2, 3, 3, 2, 1, 2},
      {1, 2, 3, 4, 2, 1, 2}, {1, 2, 3, 4, 3, 1, 2}, {1, 2, 3, 4, 3, 2, 2}};
  const std::vector<std::vector<int>>* printed = nullptr;
  if (hss.family == '6') printed = &e6_printed;
  else if (hss.family == '7') printed = &e7_printed;
  else throw std::invalid_argument("no printed root list for " + hss.label);

  std::map<std::vector<int>, int> bag;  // derived multiset (all multiplicities 1)
  for (const Root& r : hss.noncompact_pos) ++bag[r.coeffs];
  PrintedListComparison cmp;
  cmp.printed_count = static_cast<int>(printed->size());
  for (const auto& t : *printed) {
    auto it = bag.find(t);
    if (it != bag.end() && it->second > 0) --it->second;
    else cmp.extra_printed.push_back(to_string(Root{t}));
  }
  for (const auto& [t, count] : bag)
    for (int k = 0; k < count; ++k)
      cmp.missing_from_printed.push_back(to_string(Root{t}));
  cmp.mismatch =
      static_cast<int>(cmp.extra_printed.size() + cmp.missing_from_printed.size());
  return cmp;
}

}  // namespace hss

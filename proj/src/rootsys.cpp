#include "hss/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hss {

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) os << ",";
    os << r.coeffs[i];
  }
  os << ")";
  return os.str();
}

CartanDatum CartanDatum::make(char series, int rank) {
  CartanDatum d;
  d.series = series;
  d.rank = rank;
  d.label = std::string(1, series) + std::to_string(rank);
  auto& a = d.cartan;
  a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  d.sym.assign(rank, Rat(1));

  switch (series) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_rank short
      if (rank < 2) throw std::invalid_argument("B_n needs n >= 2");
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      a[rank - 2][rank - 1] = -1;
      a[rank - 1][rank - 2] = -2;
      d.sym[rank - 1] = Rat(1, 2);
      break;
    case 'C':  // alpha_rank long
      if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      a[rank - 1][rank - 2] = -1;
      for (int i = 0; i + 1 < rank; ++i) d.sym[i] = Rat(1, 2);
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 1);
      break;
    case 'E':
      // Node numbering follows the Dynkin figures this project is built
      // against: E6 is the chain 1-2-3-4-5 with 6 on node 3; E7 is the chain
      // 1-2-3-4-5-6 with 7 on node 4.
      if (rank == 6) {
        for (int i = 0; i + 1 < 5; ++i) bond(i, i + 1);
        bond(2, 5);
      } else if (rank == 7) {
        for (int i = 0; i + 1 < 6; ++i) bond(i, i + 1);
        bond(3, 6);
      } else {
        throw std::invalid_argument("only E6 and E7 are supported");
      }
      break;
    default:
      throw std::invalid_argument("unsupported series");
  }
  d.validate();
  return d;
}

void CartanDatum::validate() const {
  for (int i = 0; i < rank; ++i) {
    if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < rank; ++j)
      if (i != j && cartan[i][j] > 0)
        throw std::invalid_argument("Cartan off-diagonal must be nonpositive");
    if (sym[i] <= 0) throw std::invalid_argument("symmetrizer must be positive");
  }
  // Positive definiteness of S = D*A via leading principal minors.
  std::vector<std::vector<Rat>> s(rank, std::vector<Rat>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      s[i][j] = sym[i] * cartan[i][j];
      if (i > j && s[i][j] != sym[j] * cartan[j][i])
        throw std::invalid_argument("symmetrizer does not symmetrize the Cartan matrix");
    }
  for (int k = 1; k <= rank; ++k) {
    // Fraction-free determinant of the leading k x k block.
    std::vector<std::vector<Rat>> m(s.begin(), s.begin() + k);
    for (auto& row : m) row.resize(k);
    Rat det(1);
    bool singular = false;
    for (int c = 0; c < k && !singular; ++c) {
      int p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) { singular = true; break; }
      if (p != c) { std::swap(m[p], m[c]); det = -det; }
      det *= m[c][c];
      for (int i = c + 1; i < k; ++i) {
        Rat f = m[i][c] / m[c][c];
        for (int j = c; j < k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    if (singular || det <= 0)
      throw std::invalid_argument("symmetrized Cartan matrix is not positive definite");
  }
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  datum_.validate();
  const int n = datum_.rank;

  std::set<std::vector<int>> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root a;
    a.coeffs.assign(n, 0);
    a.coeffs[i] = 1;
    frontier.push_back(a);
    seen.insert(a.coeffs);
  }
  // Closure by root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0 with p = max k such that beta - k alpha_i is known.
  // Processing strictly by height keeps the downward string fully known.
  std::vector<Root> all(frontier);
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        Root alpha;
        alpha.coeffs.assign(n, 0);
        alpha.coeffs[i] = 1;
        int p = 0;
        Root down = beta - alpha;
        while (down.height() >= 1 && seen.count(down.coeffs)) {
          ++p;
          down = down - alpha;
        }
        if (beta == alpha) continue;
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += datum_.cartan[i][j] * beta.coeffs[j];
        if (p - pair > 0) {
          Root up = beta + alpha;
          if (seen.insert(up.coeffs).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  positive_ = std::move(all);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k].coeffs] = k;
}

bool RootSystem::is_root(const Root& r) const {
  if (index_.count(r.coeffs)) return true;
  return index_.count((-r).coeffs) > 0;
}

bool RootSystem::is_positive_root(const Root& r) const { return index_.count(r.coeffs) > 0; }

std::size_t RootSystem::positive_index(const Root& r) const {
  auto it = index_.find(r.coeffs);
  if (it == index_.end()) throw std::invalid_argument("not a positive root: " + to_string(r));
  return it->second;
}

Root RootSystem::simple(int i) const {
  Root a;
  a.coeffs.assign(datum_.rank, 0);
  a.coeffs[i] = 1;
  return a;
}

Rat RootSystem::inner(const Root& beta, const Root& delta) const {
  Rat s(0);
  const int n = datum_.rank;
  for (int i = 0; i < n; ++i) {
    if (beta.coeffs[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (delta.coeffs[j] != 0)
        s += Rat(beta.coeffs[i]) * Rat(delta.coeffs[j]) * datum_.sym[i] * Rat(datum_.cartan[i][j]);
  }
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  if (!is_root(beta) || !is_root(alpha))
    throw std::invalid_argument("pairing arguments must be roots");
  Rat v = 2 * inner(beta, alpha) / inner(alpha, alpha);
  if (denominator(v) != 1) throw std::logic_error("non-integral root pairing");
  return static_cast<int>(numerator(v));
}

int RootSystem::chain_down(const Root& beta, const Root& alpha) const {
  auto is_zero = [](const Root& r) {
    for (int c : r.coeffs)
      if (c != 0) return false;
    return true;
  };
  int p = 0;
  Root cur = beta - alpha;
  while (!is_zero(cur) && is_root(cur)) {
    ++p;
    cur = cur - alpha;
  }
  return p;
}

std::vector<int> RootSystem::coroot_coeffs(const Root& delta) const {
  const int n = datum_.rank;
  Rat dd = inner(delta, delta);
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    Rat c = Rat(delta.coeffs[i]) * 2 * datum_.sym[i] / dd;
    if (denominator(c) != 1) throw std::logic_error("non-integral coroot expansion");
    out[i] = static_cast<int>(numerator(c));
  }
  return out;
}

RootSystem generate_roots(const CartanDatum& datum) { return RootSystem(datum); }

std::vector<std::vector<Rat>> simple_roots_e_coords(char series, int rank) {
  std::vector<std::vector<Rat>> out;
  auto basis = [&](int dim, int i, Rat v) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = v;
    return e;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i < rank; ++i) {
        auto v = basis(rank + 1, i, Rat(1));
        v[i + 1] = Rat(-1);
        out.push_back(v);
      }
      break;
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = basis(rank, i, Rat(1));
        v[i + 1] = Rat(-1);
        out.push_back(v);
      }
      out.push_back(basis(rank, rank - 1, Rat(1)));
      break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = basis(rank, i, Rat(1));
        v[i + 1] = Rat(-1);
        out.push_back(v);
      }
      out.push_back(basis(rank, rank - 1, Rat(2)));
      break;
    case 'D':
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = basis(rank, i, Rat(1));
        v[i + 1] = Rat(-1);
        out.push_back(v);
      }
      {
        auto v = basis(rank, rank - 2, Rat(1));
        v[rank - 1] = Rat(1);
        out.push_back(v);
      }
      break;
    default:
      throw std::invalid_argument("no e-coordinate model for this series");
  }
  return out;
}

std::size_t classical_positive_count(char series, int rank) {
  switch (series) {
    case 'A': return static_cast<std::size_t>(rank) * (rank + 1) / 2;
    case 'B':
    case 'C': return static_cast<std::size_t>(rank) * rank;
    case 'D': return static_cast<std::size_t>(rank) * (rank - 1);
    case 'E':
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      break;
  }
  throw std::invalid_argument("unsupported type");
}

}  // namespace hss

#include "hss/chevalley.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hss {

bool LieElement::is_zero() const {
  for (const auto& c : cartan)
    if (!c.is_zero()) return false;
  return roots.empty();
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (std::size_t i = 0; i < cartan.size(); ++i) cartan[i] += o.cartan[i];
  for (const auto& [r, c] : o.roots) {
    auto it = roots.find(r);
    if (it == roots.end()) {
      roots.emplace(r, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) roots.erase(it);
    }
  }
  return *this;
}

LieElement operator*(const GRat& s, LieElement e) {
  if (s.is_zero()) return LieElement::zero(static_cast<int>(e.cartan.size()));
  for (auto& c : e.cartan) c *= s;
  for (auto& [r, c] : e.roots) c *= s;
  return e;
}

bool operator==(const LieElement& a, const LieElement& b) {
  return (a - b).is_zero();
}

long StructureConstants::encode(const Root& r) const {
  if (sys_->is_positive_root(r)) return static_cast<long>(sys_->positive_index(r)) + 1;
  return -(static_cast<long>(sys_->positive_index(-r)) + 1);
}

Int StructureConstants::lookup_pp(const Root& a, const Root& b) const {
  auto it = table_.find({encode(a), encode(b)});
  if (it == table_.end()) throw std::logic_error("missing N-table entry");
  return it->second;
}

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> sys)
    : sys_(std::move(sys)) {
  const auto& pos = sys_->positive_roots();

  // Positive pairs first, processing sums in canonical (height, lex) order so
  // every derivation only consults lower-height entries.
  for (const Root& gamma : pos) {
    if (gamma.height() < 2) continue;
    // Special pairs (xi, eta), xi + eta = gamma, xi before eta in root order.
    std::vector<std::pair<Root, Root>> special;
    for (const Root& xi : pos) {
      if (xi.height() * 2 > gamma.height()) break;  // pos is height-sorted
      Root eta = gamma - xi;
      if (!sys_->is_positive_root(eta)) continue;
      if (sys_->positive_index(xi) < sys_->positive_index(eta)) special.emplace_back(xi, eta);
    }
    std::sort(special.begin(), special.end(),
              [&](const auto& p, const auto& q) {
                return sys_->positive_index(p.first) < sys_->positive_index(q.first);
              });
    if (special.empty()) throw std::logic_error("non-simple root without special pair");

    const Root& a1 = special.front().first;   // extraspecial pair (a1, b1)
    const Root& b1 = special.front().second;
    {
      Int n = sys_->chain_down(b1, a1) + 1;
      table_[{encode(a1), encode(b1)}] = n;
      table_[{encode(b1), encode(a1)}] = -n;
      table_[{encode(-a1), encode(-b1)}] = -n;
      table_[{encode(-b1), encode(-a1)}] = n;
    }
    for (std::size_t k = 1; k < special.size(); ++k) {
      const Root& xi = special[k].first;
      const Root& eta = special[k].second;
      // Jacobi identity on (e_{-a1}, e_xi, e_eta):
      //   N(-a1,xi) N(xi-a1,eta) + N(xi,eta) N(gamma,-a1) + N(eta,-a1) N(eta-a1,xi) = 0.
      Int t1 = 0, t3 = 0;
      Root xid = xi - a1;
      if (sys_->is_root(xid)) t1 = derive_full(-a1, xi) * derive_full(xid, eta);
      Root etad = eta - a1;
      if (sys_->is_root(etad)) t3 = derive_full(eta, -a1) * derive_full(etad, xi);
      Int denom = derive_full(gamma, -a1);
      if (denom == 0) throw std::logic_error("vanishing extraspecial pivot");
      Int num = -(t1 + t3);
      if (num % denom != 0) throw std::logic_error("non-integral structure constant");
      Int n = num / denom;
      Int expected = sys_->chain_down(eta, xi) + 1;
      if (n != expected && n != -expected)
        throw std::logic_error("structure constant magnitude mismatch at " + to_string(xi) +
                               "+" + to_string(eta));
      table_[{encode(xi), encode(eta)}] = n;
      table_[{encode(eta), encode(xi)}] = -n;
      table_[{encode(-xi), encode(-eta)}] = -n;
      table_[{encode(-eta), encode(-xi)}] = n;
    }
  }

  // Close the table over all signed pairs.
  std::vector<Root> all;
  for (const Root& r : pos) {
    all.push_back(r);
    all.push_back(-r);
  }
  for (const Root& a : all)
    for (const Root& b : all) {
      Root s = a + b;
      bool zero = true;
      for (int c : s.coeffs) zero &= (c == 0);
      if (zero || !sys_->is_root(s)) continue;
      auto key = std::make_pair(encode(a), encode(b));
      if (!table_.count(key)) table_[key] = derive_full(a, b);
    }
}

// Mixed-sign constants from the coroot cycle identity
//   N(mu,nu) = -N(-nu, sigma) (sigma,sigma)/(mu,mu),  sigma = mu + nu,
// reduced to the positive-pair table.
Int StructureConstants::derive_full(const Root& a, const Root& b) const {
  Root s = a + b;
  if (!sys_->is_root(s)) return 0;
  auto key = std::make_pair(encode(a), encode(b));
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;

  bool ap = sys_->is_positive_root(a), bp = sys_->is_positive_root(b);
  if (ap && bp) return lookup_pp(a, b);
  if (!ap && !bp) return -derive_full(-a, -b);
  if (!sys_->is_positive_root(s)) return -derive_full(-a, -b);
  if (!ap) return -derive_full(b, a);

  // a positive, b negative, s positive.
  Int base = derive_full(-b, s);
  Rat v = -Rat(base) * sys_->inner(s, s) / sys_->inner(a, a);
  if (denominator(v) != 1) throw std::logic_error("non-integral mixed structure constant");
  return numerator(v);
}

Int StructureConstants::n(const Root& a, const Root& b) const {
  if (!sys_->is_root(a) || !sys_->is_root(b))
    throw std::invalid_argument("N requires root arguments");
  Root s = a + b;
  if (!sys_->is_root(s)) return 0;
  auto it = table_.find({encode(a), encode(b)});
  if (it == table_.end()) throw std::logic_error("incomplete N-table");
  return it->second;
}

LieElement StructureConstants::bracket(const LieElement& x, const LieElement& y) const {
  const int rank = sys_->rank();
  LieElement out = LieElement::zero(rank);

  // [h_x, e_b] terms.
  for (const auto& [b, cb] : y.roots) {
    GRat f(0);
    for (int i = 0; i < rank; ++i) {
      if (x.cartan[i].is_zero()) continue;
      f += x.cartan[i] * GRat(Rat(sys_->pairing(b, sys_->simple(i))));
    }
    out += LieElement::root_vector(rank, b, f * cb);
  }
  // [e_a, h_y] terms.
  for (const auto& [a, ca] : x.roots) {
    GRat f(0);
    for (int i = 0; i < rank; ++i) {
      if (y.cartan[i].is_zero()) continue;
      f += y.cartan[i] * GRat(Rat(sys_->pairing(a, sys_->simple(i))));
    }
    out += LieElement::root_vector(rank, a, GRat(-1) * f * ca);
  }
  // [e_a, e_b] terms.
  for (const auto& [a, ca] : x.roots) {
    for (const auto& [b, cb] : y.roots) {
      Root s = a + b;
      bool zero = true;
      for (int c : s.coeffs) zero &= (c == 0);
      if (zero) {
        // [e_a, e_{-a}] = h_a.
        auto cc = sys_->coroot_coeffs(a);
        LieElement h = LieElement::zero(rank);
        for (int i = 0; i < rank; ++i) h.cartan[i] = GRat(Rat(cc[i]));
        out += (ca * cb) * h;
      } else if (sys_->is_root(s)) {
        Int nv = n(a, b);
        out += LieElement::root_vector(rank, s, ca * cb * GRat(Rat(nv)));
      }
    }
  }
  return out;
}

LieElement StructureConstants::compact_conjugate(const LieElement& x) const {
  const int rank = sys_->rank();
  LieElement out = LieElement::zero(rank);
  for (int i = 0; i < rank; ++i) out.cartan[i] = -x.cartan[i].conj();
  for (const auto& [r, c] : x.roots) out += LieElement::root_vector(rank, -r, -c.conj());
  return out;
}

LieElement StructureConstants::jacobi_defect(const LieElement& x, const LieElement& y,
                                             const LieElement& z) const {
  return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
}

std::string StructureConstants::serialize_n_table() const {
  std::ostringstream os;
  const auto& pos = sys_->positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = 0; j < pos.size(); ++j) {
      Root s = pos[i] + pos[j];
      if (i == j || !sys_->is_root(s)) continue;
      os << to_string(pos[i]) << " " << to_string(pos[j]) << " "
         << n(pos[i], pos[j]).str() << "\n";
    }
  return os.str();
}

StructureConstants build_structure_constants(std::shared_ptr<const RootSystem> sys) {
  return StructureConstants(std::move(sys));
}

RealElement RealElement::checked(const StructureConstants& sc, LieElement v) {
  if (!(sc.compact_conjugate(v) == v))
    throw std::invalid_argument("element is not fixed by the compact conjugation");
  return RealElement{std::move(v)};
}

std::vector<GRat> coordinates(const RootSystem& sys, const LieElement& e) {
  const std::size_t np = sys.positive_roots().size();
  std::vector<GRat> v(sys.rank() + 2 * np);
  for (int i = 0; i < sys.rank(); ++i) v[i] = e.cartan[i];
  for (const auto& [r, c] : e.roots) {
    if (sys.is_positive_root(r))
      v[sys.rank() + sys.positive_index(r)] = c;
    else
      v[sys.rank() + np + sys.positive_index(-r)] = c;
  }
  return v;
}

std::vector<Rat> real_coordinates(const RootSystem& sys, const LieElement& e) {
  auto c = coordinates(sys, e);
  std::vector<Rat> v(2 * c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    v[2 * i] = c[i].re;
    v[2 * i + 1] = c[i].im;
  }
  return v;
}

std::size_t complex_span_dimension(const RootSystem& sys, const std::vector<LieElement>& elements) {
  Matrix<GRat> m(0, sys.rank() + 2 * sys.positive_roots().size());
  for (const auto& e : elements) m.append_row(coordinates(sys, e));
  return rank(m);
}

std::size_t real_span_dimension(const RootSystem& sys, const std::vector<LieElement>& elements) {
  Matrix<Rat> m(0, 2 * (sys.rank() + 2 * sys.positive_roots().size()));
  for (const auto& e : elements) m.append_row(real_coordinates(sys, e));
  return rank(m);
}

}  // namespace hss

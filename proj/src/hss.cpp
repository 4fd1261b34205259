#include "hss/hss.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hss {

std::size_t HSSDescriptor::noncompact_index(const Root& r) const {
  for (std::size_t k = 0; k < noncompact_pos.size(); ++k)
    if (noncompact_pos[k] == r) return k;
  throw std::invalid_argument("not a noncompact positive root: " + to_string(r));
}

bool HSSDescriptor::is_noncompact_pos(const Root& r) const {
  return sys->is_positive_root(r) && r.coeffs[cominuscule] == 1;
}

int HSSDescriptor::dim_g() const {
  return static_cast<int>(2 * sys->positive_roots().size()) + sys->rank();
}

LieElement HSSDescriptor::diagonal_vector() const {
  LieElement v = LieElement::zero(sys->rank());
  for (const Root& a : pi) v += LieElement::root_vector(sys->rank(), a);
  return v;
}

std::vector<Root> strongly_orthogonal_cascade(const RootSystem& sys,
                                              const std::vector<Root>& noncompact) {
  std::vector<Root> pi;
  auto strongly_orthogonal = [&](const Root& a, const Root& b) {
    return !sys.is_root(a + b) && !sys.is_root(a - b);
  };
  for (;;) {
    // noncompact is in canonical (height, lex) order; the cascade repeatedly
    // takes the highest root strongly orthogonal to everything chosen so far.
    const Root* pick = nullptr;
    for (auto it = noncompact.rbegin(); it != noncompact.rend(); ++it) {
      bool ok = std::find(pi.begin(), pi.end(), *it) == pi.end();
      for (const Root& c : pi) ok = ok && strongly_orthogonal(*it, c);
      if (ok) {
        pick = &*it;
        break;
      }
    }
    if (!pick) break;
    pi.push_back(*pick);
  }
  return pi;
}

bool tube_by_known_list(char family, int p, int q) {
  switch (family) {
    case 'G': return p == q;
    case 'S': return p % 2 == 0 && p >= 4;  // G^{II}(n,n), n even (n=2 is a point/line)
    case 'Y': return true;                  // G^{III}(n,n)
    case 'Q': return true;                  // Q^n
    case '6': return false;
    case '7': return true;
  }
  (void)q;
  throw std::invalid_argument("unknown family");
}

RestrictedProfile restricted_root_profile(const HSSDescriptor& hss) {
  if (hss.rank_r < 2) throw std::invalid_argument("restricted profile needs rank >= 2");
  RestrictedProfile out;
  out.tube = true;
  out.consistent = true;
  const RootSystem& sys = *hss.sys;
  for (const Root& delta : sys.positive_roots()) {
    // Doubled restriction coefficients 2(delta,alpha_i)/(alpha_i,alpha_i).
    std::vector<int> c;
    for (const Root& a : hss.pi) {
      Rat v = 2 * sys.inner(delta, a) / sys.inner(a, a);
      if (denominator(v) != 1) {
        out.consistent = false;
        continue;
      }
      int iv = static_cast<int>(numerator(v));
      if (iv != 0) c.push_back(iv < 0 ? -iv : iv);
    }
    std::sort(c.begin(), c.end());
    std::ostringstream key;
    if (c.empty()) {
      key << "0";
    } else {
      key << "(";
      for (std::size_t i = 0; i < c.size(); ++i) key << (i ? "," : "") << c[i];
      key << ")";
    }
    ++out.shapes[key.str()];
    // Theorem alternatives: 0, (1), (2) = +-alpha_i, (1,1) = 1/2 alpha_i +- 1/2 alpha_j.
    bool ok = c.empty() || (c.size() == 1 && (c[0] == 1 || c[0] == 2)) ||
              (c.size() == 2 && c[0] == 1 && c[1] == 1);
    if (!ok) out.consistent = false;
    if (c.size() == 1 && c[0] == 1) out.tube = false;
  }
  return out;
}

namespace {

int closed_form_dim(char family, int p, int q) {
  switch (family) {
    case 'G': return p * q;
    case 'S': return p * (p - 1) / 2;
    case 'Y': return p * (p + 1) / 2;
    case 'Q': return p;
    case '6': return 16;
    case '7': return 27;
  }
  (void)q;
  throw std::invalid_argument("unknown family");
}

int closed_form_rank(char family, int p, int q) {
  switch (family) {
    case 'G': return std::min(p, q);
    case 'S': return p / 2;
    case 'Y': return p;
    case 'Q': return 2;
    case '6': return 2;
    case '7': return 3;
  }
  (void)q;
  throw std::invalid_argument("unknown family");
}

std::string make_label(char family, int p, int q) {
  std::ostringstream os;
  switch (family) {
    case 'G': os << "G(" << p << "," << q << ")"; break;
    case 'S': os << "G^{II}(" << p << "," << p << ")"; break;
    case 'Y': os << "G^{III}(" << p << "," << p << ")"; break;
    case 'Q': os << "Q^" << p; break;
    case '6': os << "E6"; break;
    case '7': os << "E7"; break;
    default: throw std::invalid_argument("unknown family");
  }
  return os.str();
}

}  // namespace

HSSDescriptor build_hss(char family, int p, int q) {
  HSSDescriptor h;
  h.family = family;
  h.p = p;
  h.q = q;
  h.label = make_label(family, p, q);

  CartanDatum datum;
  switch (family) {
    case 'G':
      if (p < 1 || q < 1) throw std::invalid_argument("G(p,q) needs p,q >= 1");
      datum = CartanDatum::make('A', p + q - 1);
      h.cominuscule = p - 1;
      break;
    case 'S':
      if (p != q || p < 3) throw std::invalid_argument("G^{II}(n,n) needs n >= 3");
      datum = CartanDatum::make('D', p);
      h.cominuscule = p - 1;
      break;
    case 'Y':
      if (p != q || p < 2) throw std::invalid_argument("G^{III}(n,n) needs n >= 2");
      datum = CartanDatum::make('C', p);
      h.cominuscule = p - 1;
      break;
    case 'Q':
      if (p < 3) throw std::invalid_argument("Q^n needs n >= 3");
      datum = (p % 2 == 1) ? CartanDatum::make('B', (p + 1) / 2)
                           : CartanDatum::make('D', p / 2 + 1);
      h.cominuscule = 0;
      break;
    case '6':
      datum = CartanDatum::make('E', 6);
      h.cominuscule = 0;
      break;
    case '7':
      datum = CartanDatum::make('E', 7);
      h.cominuscule = 0;
      break;
    default:
      throw std::invalid_argument("unknown family");
  }

  h.sys = std::make_shared<RootSystem>(datum);
  h.sc = std::make_shared<StructureConstants>(h.sys);
  for (const Root& r : h.sys->positive_roots()) {
    int c = r.coeffs[h.cominuscule];
    if (c < 0 || c > 1)
      throw std::logic_error("marked node is not cominuscule for " + h.label);
    (c == 1 ? h.noncompact_pos : h.compact_pos).push_back(r);
  }
  h.dim_n = static_cast<int>(h.noncompact_pos.size());
  if (h.dim_n != closed_form_dim(family, p, q))
    throw std::logic_error("noncompact dimension mismatch for " + h.label);

  h.pi = strongly_orthogonal_cascade(*h.sys, h.noncompact_pos);
  if (family == '7') {
    // Pin the reference choice Pi = {x1-x2, x1+x2+x3, d-x3}: the printed E7
    // compatible-triple families are stated relative to it. Any maximal
    // strongly orthogonal set would serve the remaining checks.
    std::vector<Root> chosen{e7_x_minus(*h.sys, 1, 2), e7_x_sum(*h.sys, 1, 2, 3),
                             e7_d_minus(*h.sys, 3)};
    if (chosen.size() != h.pi.size())
      throw std::logic_error("E7 reference Pi has the wrong cardinality");
    for (const Root& a : chosen) {
      if (a.coeffs[h.cominuscule] != 1)
        throw std::logic_error("E7 reference Pi contains a compact root");
      for (const Root& b : chosen)
        if (!(a == b) && (h.sys->is_root(a + b) || h.sys->is_root(a - b)))
          throw std::logic_error("E7 reference Pi is not strongly orthogonal");
    }
    h.pi = std::move(chosen);
  }
  h.rank_r = static_cast<int>(h.pi.size());
  if (h.rank_r != closed_form_rank(family, p, q))
    throw std::logic_error("cascade length mismatch for " + h.label);

  if (h.rank_r >= 2) {
    RestrictedProfile prof = restricted_root_profile(h);
    if (!prof.consistent)
      throw std::logic_error("restricted-root profile inconsistent for " + h.label);
    h.tube = prof.tube;
    if (h.tube != tube_by_known_list(family, p, q))
      throw std::logic_error("tube classification disagrees with the known list for " + h.label);
  } else {
    h.tube = (h.dim_n == 1);  // the projective line
  }
  return h;
}

HSSDescriptor build_hss(const std::string& label) {
  std::smatch m;
  if (std::regex_match(label, m, std::regex(R"(G\((\d+),(\d+)\))")))
    return build_hss('G', std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(label, m, std::regex(R"(G\^\{II\}\((\d+),(\d+)\))")))
    return build_hss('S', std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(label, m, std::regex(R"(G\^\{III\}\((\d+),(\d+)\))")))
    return build_hss('Y', std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(label, m, std::regex(R"(Q\^(\d+))")))
    return build_hss('Q', std::stoi(m[1]), std::stoi(m[1]));
  if (label == "E6") return build_hss('6', 6, 6);
  if (label == "E7") return build_hss('7', 7, 7);
  throw std::invalid_argument("unsupported space label: " + label);
}

Root e7_root_from_x(const RootSystem& sys, const std::vector<int>& x_coeffs, int d_coeff) {
  if (sys.rank() != 7 || x_coeffs.size() != 7)
    throw std::invalid_argument("E7 x-translation needs rank 7");
  // Simple roots in x-coordinates: sigma_i = x_i - x_{i+1} (i=1..6),
  // sigma_7 = x_5 + x_6 + x_7.
  std::vector<std::vector<Rat>> a(7, std::vector<Rat>(8, Rat(0)));
  for (int i = 0; i < 6; ++i) {
    a[i][i] = 1;
    a[i + 1][i] = -1;
  }
  a[4][6] = a[5][6] = a[6][6] = 1;
  for (int i = 0; i < 7; ++i) a[i][7] = Rat(x_coeffs[i] + d_coeff);
  // Solve the 7x8 augmented system by elimination.
  for (int c = 0; c < 7; ++c) {
    int p = c;
    while (p < 7 && a[p][c] == 0) ++p;
    if (p == 7) throw std::logic_error("singular E7 coordinate system");
    std::swap(a[p], a[c]);
    Rat inv = 1 / a[c][c];
    for (int j = c; j < 8; ++j) a[c][j] *= inv;
    for (int i = 0; i < 7; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < 8; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Root r;
  r.coeffs.assign(7, 0);
  for (int i = 0; i < 7; ++i) {
    if (denominator(a[i][7]) != 1)
      throw std::logic_error("non-integral E7 root translation");
    r.coeffs[i] = static_cast<int>(numerator(a[i][7]));
  }
  if (!sys.is_root(r)) throw std::logic_error("E7 x-expression is not a root");
  return r;
}

Root e7_x_minus(const RootSystem& sys, int i, int j) {
  std::vector<int> x(7, 0);
  x[i - 1] = 1;
  x[j - 1] = -1;
  return e7_root_from_x(sys, x, 0);
}

Root e7_x_sum(const RootSystem& sys, int i, int j, int k) {
  std::vector<int> x(7, 0);
  x[i - 1] = 1;
  x[j - 1] = 1;
  x[k - 1] = 1;
  return e7_root_from_x(sys, x, 0);
}

Root e7_d_minus(const RootSystem& sys, int i) {
  std::vector<int> x(7, 0);
  x[i - 1] = -1;
  return e7_root_from_x(sys, x, 1);
}

std::vector<std::string> spaces_in_range(std::optional<int> max_rank) {
  std::vector<std::string> out;
  auto admit = [&](char family, int p, int q) {
    if (max_rank && closed_form_rank(family, p, q) > *max_rank) return;
    out.push_back(make_label(family, p, q));
  };
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) admit('G', p, q);
  for (int n = 3; n <= 6; ++n) admit('S', n, n);
  for (int n = 2; n <= 4; ++n) admit('Y', n, n);
  for (int n = 3; n <= 6; ++n) admit('Q', n, n);
  admit('6', 6, 6);
  admit('7', 7, 7);
  return out;
}

}  // namespace hss

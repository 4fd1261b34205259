#ifndef HSS_RATIONAL_HPP
#define HSS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Gaussian rational a + b*i. All scalar arithmetic in the project is exact;
// no floating point anywhere.
struct GRat {
  Rat re{0};
  Rat im{0};

  GRat() = default;
  GRat(int v) : re(v) {}
  GRat(Rat r) : re(std::move(r)) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GRat conj() const { return GRat(re, -im); }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }

  friend GRat operator+(GRat a, const GRat& b) { a += b; return a; }
  friend GRat operator-(GRat a, const GRat& b) { a -= b; return a; }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n = b.re * b.re + b.im * b.im;  // nonzero for b != 0
    return GRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  GRat& operator/=(const GRat& o) { *this = *this / o; return *this; }

  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

inline std::string to_string(const GRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = to_string(z.re);
  s += (z.im > 0 ? "+" : "-");
  Rat a = z.im > 0 ? z.im : Rat(-z.im);
  if (a != 1) s += to_string(a) + "*";
  s += "i";
  return s;
}

}  // namespace hss

#endif

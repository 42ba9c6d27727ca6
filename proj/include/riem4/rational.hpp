#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

// Exact arithmetic layer for the intersection-lattice computations. No
// floating point enters until a value is explicitly exported.

namespace riem4 {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// An exact multiple of an integer power of pi, the natural value type for
// curvature integrals of the built-in examples (volumes carry pi^2, class
// pairings against 4pi-normalized Kahler classes carry pi^1, ...).
struct PiRational {
  Rational coeff;
  int pi_power = 0;

  PiRational() = default;
  PiRational(Rational c, int p) : coeff(std::move(c)) { pi_power = (coeff == 0) ? 0 : p; }

  double value() const {
    double v = to_double(coeff);
    for (int i = 0; i < pi_power; ++i) v *= M_PI;
    for (int i = 0; i > pi_power; --i) v /= M_PI;
    return v;
  }

  PiRational operator*(const PiRational& o) const { return {coeff * o.coeff, pi_power + o.pi_power}; }
  PiRational operator/(const PiRational& o) const {
    if (o.coeff == 0) throw std::domain_error("PiRational: division by zero");
    return {coeff / o.coeff, pi_power - o.pi_power};
  }
  PiRational operator*(const Rational& r) const { return {coeff * r, pi_power}; }
  PiRational operator+(const PiRational& o) const {
    if (coeff == 0) return o;
    if (o.coeff == 0) return *this;
    if (pi_power != o.pi_power)
      throw std::domain_error("PiRational: adding different powers of pi");
    return {coeff + o.coeff, pi_power};
  }
  PiRational operator-(const PiRational& o) const { return *this + PiRational{-o.coeff, o.pi_power}; }
  bool operator==(const PiRational& o) const {
    return coeff == o.coeff && (coeff == 0 || pi_power == o.pi_power);
  }

  std::string str() const {
    std::string s = to_string(coeff);
    if (coeff == 0 || pi_power == 0) return s;
    std::string p = pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power);
    if (pi_power < 0) p = pi_power == -1 ? "/pi" : "/pi^" + std::to_string(-pi_power);
    return pi_power > 0 ? s + "*" + p : s + p;
  }
};

}  // namespace riem4

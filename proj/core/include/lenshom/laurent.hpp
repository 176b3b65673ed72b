#ifndef LENSHOM_LAURENT_HPP
#define LENSHOM_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace lenshom {

using Coeff = boost::multiprecision::cpp_int;

// Exponent pair (e_a, e_z) of a monomial a^{e_a} z^{e_z}.
using ExpPair = std::pair<long long, long long>;

// Sparse integer Laurent polynomial in the two variables a and z.
// Stored normalized: no zero coefficients. Values are immutable in spirit;
// all operations return fresh values, so sharing across threads is safe.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Coeff coeff, long long e_a, long long e_z);
  // (a^-p - a^p) / z, as a Laurent polynomial with a z^-1 factor.
  static LaurentPoly unknot_factor(int p);

  // Parses the canonical text grammar; throws ParseError with position.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpPair, Coeff>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

  // Canonical form: terms sorted by (e_a, e_z) ascending, joined with
  // " + " / " - "; e.g. "a^-8 - a^-8*z", "3", "a^2*z^-1", "0".
  std::string str() const;

 private:
  void add_term(const ExpPair& e, const Coeff& c);

  std::map<ExpPair, Coeff> terms_;
};

}  // namespace lenshom

#endif

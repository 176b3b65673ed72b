#include "lenshom/laurent.hpp"

#include "lenshom/errors.hpp"

#include <cctype>
#include <sstream>

namespace lenshom {

void LaurentPoly::add_term(const ExpPair& e, const Coeff& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::monomial(Coeff coeff, long long e_a, long long e_z) {
  LaurentPoly out;
  out.add_term({e_a, e_z}, coeff);
  return out;
}

LaurentPoly LaurentPoly::unknot_factor(int p) {
  LaurentPoly out;
  out.add_term({-p, -1}, 1);
  out.add_term({p, -1}, -1);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_)
      out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return out;
}

namespace {

void append_variable(std::ostream& os, char var, long long exp) {
  if (exp == 0) return;
  os << var;
  if (exp != 1) os << '^' << exp;
}

void append_term_magnitude(std::ostream& os, const Coeff& mag, long long e_a,
                           long long e_z) {
  if (e_a == 0 && e_z == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag;
  append_variable(os, 'a', e_a);
  if (e_a != 0 && e_z != 0) os << '*';
  append_variable(os, 'z', e_z);
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    append_term_magnitude(os, negative ? Coeff(-c) : c, e.first, e.second);
    first = false;
  }
  return os.str();
}

namespace {

// Single-term grammar: [coeff][a[^E]][*][z[^E]], at least one part present.
struct TermParser {
  std::string_view text;
  std::size_t pos;  // absolute position for error reporting
  std::size_t end;

  bool done() const { return pos >= end; }
  char peek() const { return text[pos]; }

  long long parse_integer(const char* what) {
    std::size_t start = pos;
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos);
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (pos - start > 18) throw ParseError("integer too long", start);
      ++pos;
    }
    return neg ? -value : value;
  }

  Coeff parse_coeff_digits() {
    Coeff value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos;
    }
    return value;
  }

  long long parse_exponent(char var) {
    if (!done() && peek() == '^') {
      ++pos;
      return parse_integer("exponent");
    }
    (void)var;
    return 1;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  if (text.empty()) throw ParseError("empty polynomial", 0);

  std::size_t pos = 0;
  bool term_negative = false;
  // Leading sign of the first term.
  if (text[pos] == '-') {
    term_negative = true;
    ++pos;
  } else if (text[pos] == '+') {
    ++pos;
  }

  while (true) {
    // Term boundary: scan to the next " + " / " - " separator.
    std::size_t term_end = pos;
    while (term_end < text.size()) {
      if (term_end + 2 < text.size() && text[term_end] == ' ' &&
          (text[term_end + 1] == '+' || text[term_end + 1] == '-') &&
          text[term_end + 2] == ' ')
        break;
      ++term_end;
    }
    if (term_end == pos) throw ParseError("empty term", pos);

    TermParser tp{text, pos, term_end};
    bool any_part = false;
    Coeff coeff = 1;
    bool coeff_negative = false;
    if (!tp.done() && tp.peek() == '-') {
      coeff_negative = true;
      ++tp.pos;
    }
    if (!tp.done() && std::isdigit(static_cast<unsigned char>(tp.peek()))) {
      coeff = tp.parse_coeff_digits();
      any_part = true;
    }
    long long e_a = 0;
    long long e_z = 0;
    if (!tp.done() && tp.peek() == 'a') {
      ++tp.pos;
      e_a = tp.parse_exponent('a');
      any_part = true;
    }
    if (!tp.done() && tp.peek() == '*') {
      ++tp.pos;
      if (tp.done() || tp.peek() != 'z')
        throw ParseError("expected z after '*'", tp.pos);
    }
    if (!tp.done() && tp.peek() == 'z') {
      ++tp.pos;
      e_z = tp.parse_exponent('z');
      any_part = true;
    }
    if (!tp.done())
      throw ParseError("unexpected character in term", tp.pos);
    if (!any_part) throw ParseError("empty term", pos);

    if (coeff_negative) coeff = -coeff;
    if (term_negative) coeff = -coeff;
    // "0" denotes the zero polynomial; add_term drops zero coefficients.
    out.add_term({e_a, e_z}, coeff);

    if (term_end == text.size()) break;
    term_negative = text[term_end + 1] == '-';
    pos = term_end + 3;
    if (pos >= text.size()) throw ParseError("dangling separator", term_end);
  }
  return out;
}

}  // namespace lenshom

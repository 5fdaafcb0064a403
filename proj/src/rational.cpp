#include "moschext/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "moschext/errors.hpp"

namespace moschext {

Int pair_j(const Int& m, const Int& n) {
  Int s = m + n;
  return s * (s + 1) / 2 + n;
}

std::pair<Int, Int> unpair_j(const Int& c) {
  // s = floor((sqrt(8c+1)-1)/2) is the diagonal index; J is monotone in it.
  Int s = (boost::multiprecision::sqrt(Int(8 * c + 1)) - 1) / 2;
  Int t = s * (s + 1) / 2;
  Int n = c - t;
  Int m = s - n;
  return {m, n};
}

Rat rat_enum(const Int& i) {
  if (i == 0) return Rat(0);
  auto [a, b] = unpair_j(i - 1);
  Int num = (a % 2 == 0) ? Int(a / 2 + 1) : Int(-(a + 1) / 2);
  Int den = b + 1;
  return Rat(num, den);
}

Int rat_index(const Rat& q) {
  if (q == 0) return Int(0);
  Int p = boost::multiprecision::numerator(q);
  Int r = boost::multiprecision::denominator(q);  // > 0, lowest terms
  Int a = (p > 0) ? Int(2 * (p - 1)) : Int(-2 * p - 1);
  Int b = r - 1;
  return 1 + pair_j(a, b);
}

Rat pow2_neg(unsigned k) {
  Int den = Int(1) << k;
  return Rat(1, den);
}

Rat parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& expected) -> void {
    std::string found = i < text.size()
                            ? "'" + std::string(1, text[i]) + "'"
                            : std::string("end of input");
    throw SyntaxError(1, static_cast<int>(i) + 1, expected, found);
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&]() -> Int {
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      fail("digit");
    Int v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return v;
  };
  Int whole = digits();
  Rat result(whole);
  if (i < text.size() && text[i] == '/') {
    ++i;
    Int den = digits();
    if (den == 0) fail("nonzero denominator");
    result = Rat(whole, den);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t start = i;
    Int frac = digits();
    std::size_t places = i - start;
    Int scale = 1;
    for (std::size_t p = 0; p < places; ++p) scale *= 10;
    result = Rat(whole * scale + frac, scale);
  }
  if (i != text.size()) fail("end of rational");
  if (neg) result = -result;
  return result;
}

std::string print_rational(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace moschext

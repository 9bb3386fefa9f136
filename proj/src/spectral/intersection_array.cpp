#include "drg/spectral/intersection_array.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace drg::spectral {

namespace {

std::vector<BigInt> to_big(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<BigInt> parse_list(std::string_view s) {
  std::vector<BigInt> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("intersection array: empty entry");
    BigInt v;
    if (v.set_str(cur, 10) != 0) throw std::invalid_argument("intersection array: bad integer '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      cur.push_back(ch);
    } else {
      throw std::invalid_argument(std::string("intersection array: unexpected character '") + ch + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

IntersectionArray::IntersectionArray(std::vector<BigInt> b, std::vector<BigInt> c)
    : b_(std::move(b)), c_(std::move(c)) {
  if (b_.empty() || b_.size() != c_.size())
    throw std::invalid_argument("intersection array needs D >= 1 entries in each half");
}

IntersectionArray::IntersectionArray(std::initializer_list<long> b, std::initializer_list<long> c)
    : IntersectionArray(to_big(b), to_big(c)) {}

IntersectionArray IntersectionArray::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.size() < 5 || compact.front() != '{' || compact.back() != '}')
    throw std::invalid_argument("intersection array must look like {b0,...;c1,...}");
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  auto semi = body.find(';');
  if (semi == std::string_view::npos || body.find(';', semi + 1) != std::string_view::npos)
    throw std::invalid_argument("intersection array needs exactly one ';'");
  return IntersectionArray(parse_list(body.substr(0, semi)), parse_list(body.substr(semi + 1)));
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ';';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << '}';
  return os.str();
}

BigInt IntersectionArray::b(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("b_i index");
  return i == diameter() ? BigInt(0) : b_[i];
}

BigInt IntersectionArray::c(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("c_i index");
  return i == 0 ? BigInt(0) : c_[i - 1];
}

BigInt IntersectionArray::a(int i) const { return valency() - b(i) - c(i); }

Rational IntersectionArray::sphere_size(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("k_i index");
  Rational k = 1;
  for (int j = 1; j <= i; ++j) {
    if (c(j) == 0) throw std::domain_error("sphere size undefined: c_i = 0");
    k = k * Rational(b(j - 1)) / Rational(c(j));
  }
  k.canonicalize();
  return k;
}

Rational IntersectionArray::order() const {
  Rational n = 0;
  for (int i = 0; i <= diameter(); ++i) n += sphere_size(i);
  return n;
}

std::vector<std::string> IntersectionArray::basic_violations() const {
  std::vector<std::string> out;
  const int d = diameter();
  if (c(1) != 1) out.push_back("c_1 = " + c(1).get_str() + " (must be 1)");
  for (int i = 0; i < d; ++i)
    if (b(i) < 1) out.push_back("b_" + std::to_string(i) + " = " + b(i).get_str() + " < 1");
  for (int i = 1; i <= d; ++i)
    if (c(i) < 1) out.push_back("c_" + std::to_string(i) + " = " + c(i).get_str() + " < 1");
  for (int i = 0; i <= d; ++i)
    if (a(i) < 0) out.push_back("a_" + std::to_string(i) + " = " + a(i).get_str() + " < 0");
  return out;
}

std::vector<std::string> IntersectionArray::monotonicity_violations() const {
  std::vector<std::string> out;
  for (int i = 1; i < diameter(); ++i) {
    if (c(i) > c(i + 1)) out.push_back("c_" + std::to_string(i) + " > c_" + std::to_string(i + 1));
    if (b(i - 1) < b(i)) out.push_back("b_" + std::to_string(i - 1) + " < b_" + std::to_string(i));
  }
  return out;
}

exact::IntPolynomial IntersectionArray::characteristic_polynomial() const {
  using exact::IntPolynomial;
  // d_i = (x - a_i) d_{i-1} - b_{i-1} c_i d_{i-2}
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  IntPolynomial prev = IntPolynomial::constant(1);
  IntPolynomial cur = x - IntPolynomial::constant(a(0));
  for (int i = 1; i <= diameter(); ++i) {
    IntPolynomial next = (x - IntPolynomial::constant(a(i))) * cur - prev * BigInt(b(i - 1) * c(i));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_almost_bipartite(const IntersectionArray& arr) {
  for (int i = 0; i < arr.diameter(); ++i)
    if (arr.a(i) != 0) return false;
  return arr.a(arr.diameter()) != 0;
}

bool is_bipartite(const IntersectionArray& arr) {
  for (int i = 0; i <= arr.diameter(); ++i)
    if (arr.a(i) != 0) return false;
  return true;
}

}  // namespace drg::spectral

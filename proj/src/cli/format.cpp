#include "drg/cli/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace drg::cli {

using exact::AlgebraicReal;
using exact::BigInt;
using exact::IntPolynomial;
using exact::Rational;

std::string exact_text(const Rational& x) { return x.get_str(); }

std::string exact_text(const AlgebraicReal& x) {
  if (auto r = x.as_rational()) return r->get_str();
  std::string poly;
  for (char ch : exact::to_string(x.defining_polynomial()))
    if (ch != ' ') poly += ch;
  return "root(" + poly + ")~" + x.to_decimal(12);
}

namespace {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool slash = false, digit = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      digit = true;
    } else if (s[j] == '/' && !slash && digit && j + 1 < s.size()) {
      slash = true;
      digit = false;
    } else {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
  }
  if (!digit) throw std::invalid_argument("not a rational number: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'"); };
  auto digits = [&](std::string& into) {
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) into += s[pos++];
  };
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::string num;
    digits(num);
    BigInt c = num.empty() ? BigInt(1) : BigInt(num);
    std::size_t exp = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (num.empty()) fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') fail();
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        digits(e);
        if (e.empty() || e.size() > 6) fail();
        exp = std::stoul(e);
      }
    } else if (num.empty()) {
      fail();
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, BigInt(0));
    coeffs[exp] += sgn * c;
  }
  return IntPolynomial(std::move(coeffs));
}

AlgebraicReal parse_exact(std::string_view text) {
  if (text.rfind("root(", 0) != 0) return AlgebraicReal(parse_rational(text));
  const auto close = text.find(")~");
  if (close == std::string_view::npos) throw std::invalid_argument("malformed root '" + std::string(text) + "'");
  IntPolynomial p = parse_polynomial(text.substr(5, close - 5));
  std::string dec(text.substr(close + 2));
  const auto dot = dec.find('.');
  std::string scaled = dec;
  std::size_t frac = 0;
  if (dot != std::string::npos) {
    scaled.erase(dot, 1);
    frac = dec.size() - dot - 1;
  }
  Rational approx = parse_rational(scaled);
  BigInt ten = 1;
  for (std::size_t i = 0; i < frac; ++i) ten *= 10;
  approx /= Rational(ten);
  // The printed decimal is correctly rounded, so the root lies within half a
  // unit of the last place.
  Rational half(BigInt(1), BigInt(2 * ten));
  half.canonicalize();
  std::vector<AlgebraicReal> hits;
  for (const auto& r : exact::isolate_real_roots(p)) {
    if (r.as_rational()) continue;
    if (AlgebraicReal(approx - half) <= r && r <= AlgebraicReal(approx + half)) hits.push_back(r);
  }
  if (hits.size() != 1)
    throw std::invalid_argument("'" + std::string(text) + "' does not name a unique irrational root");
  return hits.front();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(sep, start);
    out.emplace_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::vector<ReportLine> parse_report(std::string_view text) {
  std::vector<ReportLine> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(classify::parse_record_line(line));
  }
  return out;
}

std::string format_line(const ReportLine& line) {
  std::string out;
  for (const auto& [k, v] : line) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

Json record_json(const classify::CandidateRecord& r) {
  Json j;
  j["beta"] = r.beta.get_str();
  j["mu"] = r.mu.get_str();
  j["k"] = r.k.get_str();
  j["c2"] = r.c2.get_str();
  j["c3"] = r.c3.get_str();
  j["array"] = r.array ? Json(r.array->to_string()) : Json(nullptr);
  j["n"] = r.n ? Json(r.n->get_str()) : Json(nullptr);
  Json thetas = Json::array(), mults = Json::array();
  for (const auto& t : r.thetas) thetas.push_back(t.get_str());
  for (const auto& m : r.mults) mults.push_back(m ? Json(m->get_str()) : Json(nullptr));
  j["thetas"] = thetas;
  j["mults"] = mults;
  for (const auto& f : r.filters) j[f.name] = classify::tri_name(f.verdict);
  j["verdict"] = r.verdict;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

}  // namespace drg::cli

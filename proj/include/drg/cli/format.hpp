#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drg/classify/sieve.hpp"
#include "drg/exact/algebraic.hpp"
#include "json.hpp"

namespace drg::cli {

using Json = nlohmann::ordered_json;

/// Integer, p/q, or root(<poly>)~<12-digit decimal>. Never contains spaces or
/// commas, so values can sit inside key=value lines and comma lists.
std::string exact_text(const exact::AlgebraicReal& x);
std::string exact_text(const exact::Rational& x);

/// Inverse of exact_text. Throws std::invalid_argument on malformed text.
exact::AlgebraicReal parse_exact(std::string_view text);
/// Accepts the output of exact::to_string, with or without spaces.
exact::IntPolynomial parse_polynomial(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::vector<std::string> split(std::string_view text, char sep);

/// Text reports are lines of space-separated key=value fields.
using ReportLine = std::vector<std::pair<std::string, std::string>>;
std::vector<ReportLine> parse_report(std::string_view text);
std::string format_line(const ReportLine& line);

Json record_json(const classify::CandidateRecord& r);

}  // namespace drg::cli

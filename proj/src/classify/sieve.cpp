#include "drg/classify/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "drg/spectral/spectrum.hpp"

namespace drg::classify {

namespace {

Rational rational_of(const Scalar& x) {
  auto r = x.as_rational();
  if (!r) throw std::logic_error("expected a rational value for integer beta");
  return *r;
}

bool is_int(const Rational& x) { return x.get_den() == 1; }

Tri tri(bool b) { return b ? Tri::Pass : Tri::Fail; }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

}  // namespace

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Pass: return "pass";
    case Tri::Fail: return "fail";
    case Tri::NA: return "na";
  }
  return "na";
}

const std::vector<std::string>& filter_names() {
  static const std::vector<std::string> names{
      "beta_abs_gt_2", "positive_integral", "a3_positive",   "monotone",       "integral_n_mults",
      "krein_nonneg",  "eigen_integral",    "curtin_ineq",   "theta1_negative", "b2_factor_positive"};
  return names;
}

Tri CandidateRecord::filter(const std::string& name) const {
  for (const auto& f : filters)
    if (f.name == name) return f.verdict;
  throw std::out_of_range("no filter named " + name);
}

CandidateRecord evaluate_candidate(const BigInt& beta, const BigInt& mu) {
  D3FamilyPoint p = d3_family(AlgebraicReal(beta), mu);
  CandidateRecord r;
  r.beta = beta;
  r.mu = mu;
  r.k = rational_of(p.k);
  r.c2 = rational_of(p.c2);
  r.c3 = rational_of(p.c3);
  for (const auto& t : p.theta) r.thetas.push_back(rational_of(t));
  r.mults.assign(4, std::nullopt);
  const Rational b(beta), m(mu);

  auto add = [&](const char* name, Tri v) { r.filters.push_back({name, v}); };

  add("beta_abs_gt_2", tri(abs(b) > 2));
  const bool positive = is_int(r.k) && is_int(r.c3) && r.k > 0 && r.c2 > 0 && r.c3 > 0;
  add("positive_integral", tri(positive));
  add("a3_positive", tri(r.k - r.c3 > 0));

  std::optional<spectral::SpectralData> spec;
  if (positive) {
    r.array = p.array();
    add("monotone", tri(r.array->is_feasible()));
    if (r.array->is_valid()) {
      r.n = r.array->order();
      try {
        spec.emplace(*r.array);
      } catch (const spectral::SpectralError&) {
      }
    }
  } else {
    add("monotone", Tri::NA);
  }

  if (spec) {
    bool ok = is_int(*r.n);
    for (std::size_t t = 0; t < 4; ++t) {
      for (int i = 0; i <= 3; ++i) {
        auto ev = spec->eigenvalues()[static_cast<std::size_t>(i)].as_rational();
        if (ev && *ev == r.thetas[t]) r.mults[t] = spec->multiplicity_rational(i);
      }
      const auto& mt = r.mults[t];
      ok = ok && mt && is_int(*mt) && *mt > 0;
    }
    add("integral_n_mults", tri(ok));
    add("krein_nonneg", tri(spec->krein_nonnegative()));
  } else {
    add("integral_n_mults", r.array && r.array->is_valid() ? Tri::Fail : Tri::NA);
    add("krein_nonneg", Tri::NA);
  }

  add("eigen_integral", tri(std::all_of(r.thetas.begin(), r.thetas.end(), is_int)));
  bool curtin = true;
  for (int i = 1; i <= 3; ++i) {
    const Rational& t = r.thetas[static_cast<std::size_t>(i)];
    if ((r.c2 - 1) * t * t == (r.k - r.c2) * (r.k - 2)) curtin = false;
  }
  add("curtin_ineq", tri(curtin));
  add("theta1_negative", tri(r.thetas[1] < 0));
  add("b2_factor_positive", tri(b * b + b - 1 - b * m > 0));

  for (const auto& f : r.filters)
    if (f.verdict != Tri::Pass) {
      r.first_failure = f.name;
      break;
    }
  if (beta == -2 && mu == 1)
    r.verdict = "KnownFamily:odd7";
  else if (abs(beta) == 2 && mu == 2)
    r.verdict = "KnownFamily:folded_cube7";
  else
    r.verdict = r.first_failure.empty() ? "D3Family" : "Rejected";
  return r;
}

std::string CandidateRecord::to_line() const {
  std::ostringstream os;
  os << "beta=" << beta << " mu=" << mu << " k=" << k << " c2=" << c2 << " c3=" << c3;
  os << " array=" << (array ? array->to_string() : "none");
  os << " n=" << (n ? n->get_str() : "none");
  std::vector<std::string> t, m;
  for (const auto& x : thetas) t.push_back(x.get_str());
  for (const auto& x : mults) m.push_back(x ? x->get_str() : "none");
  os << " thetas=" << join(t) << " mults=" << join(m);
  for (const auto& f : filters) os << ' ' << f.name << '=' << tri_name(f.verdict);
  os << " verdict=" << verdict;
  if (!first_failure.empty()) os << " first_failure=" << first_failure;
  return os.str();
}

std::vector<std::pair<std::string, std::string>> parse_record_line(const std::string& line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("malformed field '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty record line");
  return out;
}

unsigned default_thread_count() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DRG_SPECTRA_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<CandidateRecord> sieve(const SieveOptions& opts) {
  if (opts.beta_min > opts.beta_max) throw std::invalid_argument("empty beta range");
  if (opts.mu_max < 1) throw std::invalid_argument("empty mu range (mu_max < 1)");
  if (!opts.wide && opts.beta_max >= -2)
    throw std::invalid_argument("beta range must lie below -2 (use wide mode for other values)");
  std::vector<std::pair<BigInt, BigInt>> cells;
  for (BigInt b = opts.beta_min; b <= opts.beta_max; ++b)
    for (BigInt m = 1; m <= opts.mu_max; ++m) cells.emplace_back(b, m);

  std::vector<CandidateRecord> out(cells.size());
  unsigned threads = opts.threads ? opts.threads : default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        out[i] = evaluate_candidate(cells[i].first, cells[i].second);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::string SieveSummary::to_line() const {
  std::ostringstream os;
  os << "summary=sieve total=" << total << " survivors=" << survivors << " known=" << known;
  for (const auto& [name, count] : first_failures) os << " fail_" << name << '=' << count;
  return os.str();
}

SieveSummary summarize(const std::vector<CandidateRecord>& records) {
  SieveSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (r.verdict == "D3Family")
      ++s.survivors;
    else if (r.verdict.rfind("KnownFamily", 0) == 0)
      ++s.known;
    else
      ++s.first_failures[r.first_failure];
  }
  return s;
}

}  // namespace drg::classify

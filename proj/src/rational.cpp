#include "planner/rational.hpp"

#include <cctype>

#include "planner/error.hpp"

namespace planner {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) fail(Errc::parse, "empty rational literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(s.begin());
  }

  Rat out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(Errc::parse, "bad rational literal: " + text);
    mpz_class n(num), d(den);
    if (d == 0) fail(Errc::parse, "zero denominator: " + text);
    out = Rat(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp)) fail(Errc::parse, "bad decimal literal: " + text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    out = Rat(mpz_class(ip) * scale + mpz_class(fp), scale);
  } else {
    if (!all_digits(s)) fail(Errc::parse, "bad integer literal: " + text);
    out = Rat(mpz_class(s));
  }
  out.canonicalize();
  if (neg) out = -out;
  return out;
}

std::string rat_str(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string rat_decimal(const Rat& v, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = v.get_num() * scale * 2, den = v.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class q = (num / den + 1) / 2;  // round half away from zero
  mpz_class ip = q / scale, fp = q % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return r;
}

std::optional<long long> to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<long long>(z.get_si());
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse: return "Parse";
    case Errc::parameter: return "Parameter";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::missing_endpoint: return "MissingEndpoint";
    case Errc::non_positive_cost: return "NonPositiveCost";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::no_path: return "NoPath";
    case Errc::zero_shortest_path: return "ZeroShortestPath";
    case Errc::malformed_labeling: return "MalformedLabeling";
    case Errc::reward_too_small: return "RewardTooSmall";
    case Errc::precision_violation: return "PrecisionViolation";
    case Errc::size_limit: return "SizeLimit";
    case Errc::not_motivating: return "NotMotivating";
    case Errc::not_found: return "NotFound";
    case Errc::convergence_failure: return "ConvergenceFailure";
  }
  return "Unknown";
}

}  // namespace planner

// Copyright 2026 The compclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compclust/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "compclust/cluster.hpp"
#include "compclust/enumerate.hpp"
#include "compclust/errors.hpp"
#include "compclust/univariate.hpp"

namespace compclust {

SeriesPrefix series(const PatternSet& patterns, std::size_t N) {
  return series_coefficients(avoider_gf(patterns).F, N);
}

std::string_view growth_status_name(GrowthStatus status) {
  switch (status) {
    case GrowthStatus::ok:
      return "ok";
    case GrowthStatus::subexponential:
      return "subexponential";
    case GrowthStatus::non_simple:
      return "non-simple";
    case GrowthStatus::non_dominant:
      return "non-dominant";
  }
  return "unknown";
}

namespace {

unsigned working_bits(int digits) {
  return static_cast<unsigned>(std::max(64.0, digits * 3.33 + 32));
}

BigFloat to_float(const BigRational& q, unsigned bits) {
  BigFloat f(0, bits);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return f;
}

double abs_double(const BigFloat& v) { return std::fabs(v.get_d()); }

// C(x) = -P(x) / (x·Q'(x)).
BigRational amplitude_at(const upoly::Dense& p, const upoly::Dense& dq,
                         const BigRational& x) {
  return -upoly::evaluate(p, x) / (x * upoly::evaluate(dq, x));
}

void post_check(const RationalFunction& f, const GrowthOptions& options,
                unsigned bits, GrowthEstimate& est) {
  est.check_n = options.check_n;
  const auto a = series_coefficients(f, options.check_n + 1);
  const BigFloat an = to_float(a[options.check_n], bits);
  const BigFloat an1 = to_float(a[options.check_n + 1], bits);
  if (an == 0) {
    est.status = GrowthStatus::non_dominant;
    est.amplitude_error = est.ratio_error = INFINITY;
    return;
  }
  BigFloat lam_pow(0, bits);
  mpf_pow_ui(lam_pow.get_mpf_t(), est.lambda_value.get_mpf_t(), options.check_n);
  const BigFloat ratio = an / (*est.amplitude_value * lam_pow);
  est.amplitude_error = abs_double(BigFloat(ratio - 1, bits));
  est.ratio_error = abs_double(BigFloat(an1 / an - est.lambda_value, bits));
  if (!(est.amplitude_error <= options.amplitude_tolerance) ||
      !(est.ratio_error <= options.ratio_tolerance)) {
    est.status = GrowthStatus::non_dominant;
  }
}

}  // namespace

GrowthEstimate growth(const RationalFunction& f, const GrowthOptions& options) {
  if (options.digits < 1) throw DomainError("digits must be positive");
  if (const auto v = f.sole_variable(); !v || (!v->empty() && *v != kVarX)) {
    throw DomainError("growth needs a function of x");
  }
  const upoly::Dense p = upoly::from_polynomial(f.num(), kVarX);
  const upoly::Dense q = upoly::from_polynomial(f.den(), kVarX);
  if (upoly::degree(q) < 1) throw DomainError("denominator has no root in (0,1]");
  const upoly::Dense dq = upoly::derivative(q);

  GrowthEstimate est;
  est.digits = options.digits;
  unsigned bits = working_bits(options.digits);

  // Root exactly at 1 and nothing smaller: subexponential.
  if (upoly::evaluate(q, BigRational(1)) == 0 &&
      count_real_roots(q, BigRational(0), BigRational(1)) == 1) {
    est.status = GrowthStatus::subexponential;
    est.x0_interval = {BigRational(1), BigRational(1)};
    est.lambda = to_decimal(BigRational(1), options.digits);
    est.lambda_value = BigFloat(1, bits);
    return est;
  }

  const Polynomial qpoly = upoly::to_polynomial(q, std::string(kVarX));
  const upoly::Dense g = upoly::gcd(q, dq);
  // The enclosure isolates x0, so a root of gcd(Q, Q') inside it is x0.
  const auto repeated_in = [&](const RationalInterval& iv) {
    if (upoly::degree(g) < 1) return false;
    if (upoly::evaluate(g, iv.lo) == 0) return true;
    return !iv.is_point() && count_real_roots(g, iv.lo, iv.hi) > 0;
  };
  RationalInterval iv;
  bool repeated = false;
  for (int attempt = 0;; ++attempt) {
    iv = smallest_positive_real_root(qpoly, bits);
    repeated = repeated_in(iv);
    const std::string lam_a = to_decimal(BigRational(BigRational(1) / iv.hi), options.digits);
    const std::string lam_b = to_decimal(BigRational(BigRational(1) / iv.lo), options.digits);
    std::string c_a, c_b;
    if (!repeated) {
      c_a = to_decimal(amplitude_at(p, dq, iv.lo), options.digits);
      c_b = to_decimal(amplitude_at(p, dq, iv.hi), options.digits);
    }
    if ((lam_a == lam_b && c_a == c_b) || iv.is_point() || attempt == 6) {
      est.lambda = lam_a;
      if (!repeated) est.amplitude = c_a;
      break;
    }
    bits *= 2;
  }
  est.x0_interval = iv;

  const unsigned fbits = bits + 64;
  est.lambda_value = BigFloat(1, fbits) / to_float(iv.midpoint(), fbits);
  if (repeated) {
    est.status = GrowthStatus::non_simple;
    return est;
  }
  est.amplitude_value = to_float(amplitude_at(p, dq, iv.midpoint()), fbits);
  post_check(f, options, fbits, est);
  return est;
}

GrowthEstimate growth(const PatternSet& patterns, const GrowthOptions& options) {
  return growth(avoider_gf(patterns).F, options);
}

RankTable rank_patterns(int max_sum, int digits, unsigned workers) {
  if (max_sum < 2) throw DomainError("max_sum must be at least 2");
  if (max_sum > 24) throw GuardError("max_sum above 24 is not supported");
  std::vector<RankRow> jobs;
  for (int s = 2; s <= max_sum; ++s) {
    for (const auto& c : enumerate_compositions(static_cast<unsigned>(s))) {
      const auto parts = c.parts();
      const auto rev = c.reversed();
      const auto rparts = rev.parts();
      if (std::lexicographical_compare(rparts.begin(), rparts.end(), parts.begin(),
                                       parts.end())) {
        continue;
      }
      jobs.push_back(RankRow{c, {}, std::nullopt});
    }
  }

  GrowthOptions options;
  options.digits = digits;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        jobs[k].estimate = growth(PatternSet({jobs[k].pattern}), options);
      } catch (const std::exception& e) {
        jobs[k].error = e.what();
      }
    }
  };
  unsigned w = workers != 0 ? workers : std::thread::hardware_concurrency();
  w = std::clamp<unsigned>(w, 1, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  RankTable table;
  table.digits = digits;
  for (int s = 2; s <= max_sum; ++s) table.groups.push_back(RankGroup{s, {}});
  for (auto& row : jobs) {
    table.groups[static_cast<std::size_t>(row.pattern.sum() - 2)].rows.push_back(std::move(row));
  }
  for (auto& group : table.groups) {
    std::stable_sort(group.rows.begin(), group.rows.end(),
                     [](const RankRow& a, const RankRow& b) {
                       if (a.error || b.error) return !a.error && b.error;
                       const int c = cmp(a.estimate.lambda_value, b.estimate.lambda_value);
                       if (c != 0) return c < 0;
                       return a.pattern < b.pattern;
                     });
  }
  return table;
}

}  // namespace compclust

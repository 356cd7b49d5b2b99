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

#include "compclust/moments.hpp"

#include <algorithm>
#include <memory>

#include "compclust/cluster.hpp"
#include "compclust/errors.hpp"
#include "compclust/series.hpp"

namespace compclust {

namespace {

constexpr unsigned kFloatBits = 512;

using Dense = upoly::Dense;

BigRational factorial(int k) {
  BigRational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigRational binomial(int n, int k) {
  BigRational b(1);
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Stirling numbers of the second kind, S(n, k).
BigRational stirling2(int n, int k) {
  static thread_local std::vector<std::vector<BigRational>> table{{BigRational(1)}};
  while (static_cast<int>(table.size()) <= n) {
    const std::size_t m = table.size();
    std::vector<BigRational> row(m + 1, BigRational(0));
    for (std::size_t j = 1; j <= m; ++j) {
      const BigRational prev = j < table[m - 1].size() ? table[m - 1][j] : BigRational(0);
      row[j] = BigRational(static_cast<long>(j)) * prev + table[m - 1][j - 1];
    }
    table.push_back(std::move(row));
  }
  if (k < 0 || k > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Dense npow(const Dense& p, int e) {
  Dense out{BigRational(1)};
  for (int k = 0; k < e; ++k) out = upoly::mul(out, p);
  return out;
}

// C(n + j, j) as a polynomial in n.
Dense rising_binomial(int j) {
  Dense out{BigRational(1)};
  for (int i = 1; i <= j; ++i) {
    out = upoly::mul(out, Dense{BigRational(i) / i, BigRational(1) / i});
  }
  return out;
}

// p((1 - y)/2) as a polynomial in y.
Dense compose_half(const Dense& p) {
  const Dense t{BigRational(1, 2), BigRational(-1, 2)};
  Dense out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    out = upoly::add(upoly::mul(out, t), Dense{*it});
  }
  upoly::trim(out);
  return out;
}

BigRational pow2(std::size_t n) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
  return BigRational(v);
}

BigFloat to_float(const BigRational& q) {
  BigFloat f(0, kFloatBits);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return f;
}

BigFloat fsqrt(const BigFloat& v) {
  BigFloat r(0, kFloatBits);
  mpf_sqrt(r.get_mpf_t(), v.get_mpf_t());
  return r;
}

BigFloat fabs_big(const BigFloat& v) {
  BigFloat r(0, kFloatBits);
  mpf_abs(r.get_mpf_t(), v.get_mpf_t());
  return r;
}

// σ^k for σ² = var.
BigFloat sigma_pow(const BigFloat& var, int k) {
  BigFloat out(1, kFloatBits);
  const BigFloat s = fsqrt(var);
  for (int i = 0; i < k; ++i) out *= s;
  return out;
}

}  // namespace

std::string npoly_to_string(const NPolynomial& p) {
  return upoly::to_polynomial(p, "n").to_string();
}

BigRational npoly_evaluate(const NPolynomial& p, std::size_t n) {
  return upoly::evaluate(p, BigRational(static_cast<unsigned long>(n)));
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return make_rational(a, b);
}

MomentEngine::MomentEngine(const PatternSet& patterns, std::size_t i, std::size_t j,
                           int order)
    : i_(i), j_(j), length_(patterns.length()), order_(order) {
  if (i >= patterns.size() || j >= patterns.size()) {
    throw DomainError("pattern index out of range");
  }
  build(joint_gf_shifted(patterns));
}

MomentEngine::MomentEngine(const RationalFunction& shifted_joint,
                           std::size_t pattern_length, std::size_t i, std::size_t j,
                           int order)
    : i_(i), j_(j), length_(pattern_length), order_(order) {
  build(shifted_joint);
}

void MomentEngine::build(const RationalFunction& shifted_joint) {
  if (order_ < 1) throw DomainError("moment order must be positive");
  const std::string ui = shifted_marker_name(i_);
  const std::string uj = shifted_marker_name(j_);
  Polynomial a = shifted_joint.num();
  Polynomial b = shifted_joint.den();
  for (const auto& v : shifted_joint.vars()) {
    if (v == kVarX || v == ui || v == uj) continue;
    a = a.substitute(v, Polynomial());
    b = b.substitute(v, Polynomial());
  }

  // Slices by (p, q): dense polynomials in x.
  using Slices = std::map<std::pair<int, int>, Dense>;
  const auto slice = [&](const Polynomial& poly) {
    Slices out;
    const auto ix = poly.var_index(kVarX);
    const auto ii = poly.var_index(ui);
    const auto ij = poly.var_index(uj);
    for (const auto& [e, c] : poly.terms()) {
      const int p = ii ? static_cast<int>(e[*ii]) : 0;
      const int q = (ij && !single()) ? static_cast<int>(e[*ij]) : 0;
      if (p + q > order_) continue;
      const std::size_t k = ix ? e[*ix] : 0;
      auto& d = out[{p, q}];
      if (d.size() <= k) d.resize(k + 1, BigRational(0));
      d[k] += c;
    }
    for (auto& [key, d] : out) upoly::trim(d);
    return out;
  };
  const Slices as = slice(a);
  const Slices bs = slice(b);
  const auto get = [](const Slices& s, int p, int q) -> Dense {
    const auto it = s.find({p, q});
    return it == s.end() ? Dense{} : it->second;
  };
  const Dense b00 = get(bs, 0, 0);
  if (b00.empty()) throw DomainError("joint denominator vanishes at U = 0");
  std::vector<Dense> b00_pow{Dense{BigRational(1)}};
  for (int k = 1; k <= order_ + 1; ++k) b00_pow.push_back(upoly::mul(b00_pow.back(), b00));

  // F_pq = N_pq / B00^(p+q+1) with
  // N_pq = A_pq·B00^(p+q) - Σ_{(a,b) != 0} B_ab·N_{p-a,q-b}·B00^(a+b-1).
  std::map<std::pair<int, int>, Dense> numer;
  const int qmax = single() ? 0 : order_;
  for (int s = 0; s <= order_; ++s) {
    for (int p = s; p >= 0; --p) {
      const int q = s - p;
      if (q > qmax) continue;
      Dense n = upoly::mul(get(as, p, q), b00_pow[static_cast<std::size_t>(s)]);
      for (int aa = 0; aa <= p; ++aa) {
        for (int bb = 0; bb <= q; ++bb) {
          if (aa == 0 && bb == 0) continue;
          const Dense bab = get(bs, aa, bb);
          if (bab.empty()) continue;
          n = upoly::sub(n, upoly::mul(upoly::mul(bab, numer.at({p - aa, q - bb})),
                                       b00_pow[static_cast<std::size_t>(aa + bb - 1)]));
        }
      }
      numer[{p, q}] = n;

      Entry e;
      e.gf = RationalFunction(upoly::to_polynomial(n, std::string(kVarX)),
                              upoly::to_polynomial(b00_pow[static_cast<std::size_t>(s + 1)],
                                                   std::string(kVarX)));
      const Dense num = upoly::from_polynomial(e.gf.num(), kVarX);
      Dense den = upoly::from_polynomial(e.gf.den(), kVarX);
      int m = 0;
      const Dense lin{BigRational(1), BigRational(-2)};
      while (upoly::degree(den) >= 1 && upoly::evaluate(den, BigRational(1, 2)) == 0) {
        den = upoly::divmod(den, lin).first;
        ++m;
      }
      e.rest = den;
      // Principal part at y = 1 - 2x: h(y) = N/E in y, P(n) = Σ h_{m-k} C(n+k-1, k-1).
      const Dense ny = compose_half(num);
      const Dense ey = compose_half(den);
      std::vector<BigRational> h(static_cast<std::size_t>(m), BigRational(0));
      for (int t = 0; t < m; ++t) {
        BigRational v = t < static_cast<int>(ny.size()) ? ny[static_cast<std::size_t>(t)]
                                                         : BigRational(0);
        for (int k = 1; k <= t && k < static_cast<int>(ey.size()); ++k) {
          v -= ey[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(t - k)];
        }
        h[static_cast<std::size_t>(t)] = v / ey[0];
      }
      Dense poly;
      for (int k = 1; k <= m; ++k) {
        poly = upoly::add(poly, upoly::scale(rising_binomial(k - 1),
                                             h[static_cast<std::size_t>(m - k)]));
      }
      e.poly = upoly::scale(poly, 2 * factorial(p) * factorial(q));
      upoly::trim(e.poly);
      const long lo = std::max<long>({static_cast<long>(upoly::degree(num)) - m + 1,
                                      static_cast<long>(upoly::degree(den)), 0L});
      e.start = static_cast<std::size_t>(lo);
      entries_.emplace(std::make_pair(p, q), std::move(e));
    }
  }
}

const MomentEngine::Entry& MomentEngine::entry(int p, int q) const {
  if (p < 0 || q < 0 || p + q > order_) {
    throw DomainError("moment index (" + std::to_string(p) + "," + std::to_string(q) +
                      ") outside order " + std::to_string(order_));
  }
  if (single() && q != 0) throw DomainError("single-pattern engine has no second index");
  return entries_.at({p, q});
}

const BigRational& MomentEngine::coefficient(const Entry& e, std::size_t n) const {
  if (n >= e.coefficients.size()) {
    const std::size_t want = std::max(n + 1, 2 * e.coefficients.size());
    e.coefficients = series_coefficients(e.gf, want - 1).coefficients;
  }
  return e.coefficients[n];
}

const RationalFunction& MomentEngine::taylor_gf(int p, int q) const {
  return entry(p, q).gf;
}

const NPolynomial& MomentEngine::factorial_polynomial(int p, int q) const {
  return entry(p, q).poly;
}

BigRational MomentEngine::factorial_moment(int p, int q, std::size_t n) const {
  const Entry& e = entry(p, q);
  const BigRational total = n == 0 ? BigRational(1) : pow2(n - 1);
  return factorial(p) * factorial(q) * coefficient(e, n) / total;
}

NPolynomial MomentEngine::raw_polynomial(int p, int q) const {
  NPolynomial out;
  if (single()) {
    for (int k = 0; k <= p + q; ++k) {
      out = upoly::add(out, upoly::scale(factorial_polynomial(k, 0), stirling2(p + q, k)));
    }
    return out;
  }
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      out = upoly::add(out, upoly::scale(factorial_polynomial(a, b),
                                         stirling2(p, a) * stirling2(q, b)));
    }
  }
  return out;
}

BigRational MomentEngine::raw_moment(int p, int q, std::size_t n) const {
  BigRational out(0);
  if (single()) {
    for (int k = 0; k <= p + q; ++k) out += stirling2(p + q, k) * factorial_moment(k, 0, n);
    return out;
  }
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      out += stirling2(p, a) * stirling2(q, b) * factorial_moment(a, b, n);
    }
  }
  return out;
}

NPolynomial MomentEngine::central_polynomial(int p, int q) const {
  const NPolynomial mi = upoly::scale(raw_polynomial(1, 0), BigRational(-1));
  const NPolynomial mj = upoly::scale(raw_polynomial(0, 1), BigRational(-1));
  NPolynomial out;
  for (int k = 0; k <= p; ++k) {
    for (int l = 0; l <= q; ++l) {
      NPolynomial term = upoly::mul(npow(mi, p - k), npow(mj, q - l));
      term = upoly::mul(term, raw_polynomial(k, l));
      out = upoly::add(out, upoly::scale(term, binomial(p, k) * binomial(q, l)));
    }
  }
  upoly::trim(out);
  return out;
}

BigRational MomentEngine::central_moment(int p, int q, std::size_t n) const {
  const BigRational mi = -raw_moment(1, 0, n);
  const BigRational mj = -raw_moment(0, 1, n);
  BigRational out(0);
  for (int k = 0; k <= p; ++k) {
    for (int l = 0; l <= q; ++l) {
      out += binomial(p, k) * binomial(q, l) * pow(mi, static_cast<unsigned long>(p - k)) *
             pow(mj, static_cast<unsigned long>(q - l)) * raw_moment(k, l, n);
    }
  }
  return out;
}

std::size_t MomentEngine::recurrence_start(int p, int q) const { return entry(p, q).start; }

std::size_t MomentEngine::window_start(const MomentWindow& window) const {
  std::size_t start = window.start != 0 ? window.start : 4 * length_;
  for (const auto& [key, e] : entries_) start = std::max(start, e.start);
  return std::max<std::size_t>(start, 1);
}

std::pair<std::size_t, std::size_t> MomentEngine::verify(int p, int q,
                                                         const MomentWindow& window) const {
  if (window.length < 8) throw DomainError("verification window needs at least 8 points");
  const Entry& e = entry(p, q);
  const std::size_t start = window_start(window);
  const std::size_t end = start + window.length;
  // Residual r(n) = [x^n]F_pq - 2^n·P(n), with P = poly / (2·p!·q!).
  const BigRational scale = 2 * factorial(p) * factorial(q);
  const auto residual = [&](std::size_t n) -> BigRational {
    return coefficient(e, n) - pow2(n) * npoly_evaluate(e.poly, n) / scale;
  };
  const std::size_t d = e.rest.size() - 1;
  for (std::size_t n = start; n <= end; ++n) {
    BigRational acc(0);
    for (std::size_t k = 0; k <= d; ++k) acc += e.rest[k] * residual(n - k);
    if (acc != 0) {
      throw VerificationError("moment polynomial (" + std::to_string(p) + "," +
                              std::to_string(q) + ") fails its residual recurrence at n = " +
                              std::to_string(n) + "; try a larger window start");
    }
  }
  return {start, end};
}

MomentCheck MomentEngine::check(const NPolynomial& polynomial,
                                const std::function<BigRational(std::size_t)>& exact,
                                const MomentWindow& window) const {
  MomentCheck c;
  c.polynomial = polynomial;
  c.window_start = window_start(window);
  c.window_end = c.window_start + window.length;
  c.exact_on_window = true;
  c.max_residual = BigFloat(0, kFloatBits);
  for (std::size_t n = c.window_start; n <= c.window_end; ++n) {
    const BigRational diff = exact(n) - npoly_evaluate(polynomial, n);
    if (diff != 0) c.exact_on_window = false;
    const BigFloat gap = fabs_big(to_float(diff));
    if (gap > c.max_residual) c.max_residual = gap;
  }
  return c;
}

PairStatistics pair_statistics(const MomentEngine& engine, const MomentWindow& window) {
  if (engine.single()) throw DomainError("pair statistics need two distinct patterns");
  PairStatistics out;
  out.i = engine.i();
  out.j = engine.j();
  out.covariance = engine.check(
      engine.central_polynomial(1, 1),
      [&](std::size_t n) { return engine.central_moment(1, 1, n); }, window);
  const auto slope = [](const NPolynomial& p) -> BigRational {
    return p.size() > 1 ? p[1] : BigRational(0);
  };
  const BigRational c = slope(out.covariance.polynomial);
  const BigRational vi = slope(engine.central_polynomial(2, 0));
  const BigRational vj = slope(engine.central_polynomial(0, 2));
  const BigRational prod = vi * vj;
  if (prod <= 0) {
    out.correlation_value = BigFloat(0, kFloatBits);
    return out;
  }
  if (const auto root = rational_sqrt(prod)) out.correlation = c / *root;
  out.correlation_value = to_float(c) / fsqrt(to_float(prod));
  return out;
}

upoly::Dense bivariate_normal_polynomial(int p, int q) {
  // M(p, q) = (p-1)·M(p-2, q) + ρ·q·M(p-1, q-1); M(0, q) = M(q, 0).
  static thread_local std::map<std::pair<int, int>, Dense> memo;
  if (p < 0 || q < 0) return {};
  if (p == 0 && q == 0) return {BigRational(1)};
  if (p == 0) return bivariate_normal_polynomial(q, 0);
  if (const auto it = memo.find({p, q}); it != memo.end()) return it->second;
  Dense out = upoly::scale(bivariate_normal_polynomial(p - 2, q), BigRational(p - 1));
  Dense cross = upoly::scale(bivariate_normal_polynomial(p - 1, q - 1), BigRational(q));
  cross.insert(cross.begin(), BigRational(0));
  out = upoly::add(out, cross);
  upoly::trim(out);
  memo.emplace(std::make_pair(p, q), out);
  return out;
}

BigRational bivariate_normal_moment(int p, int q, const BigRational& rho) {
  return upoly::evaluate(bivariate_normal_polynomial(p, q), rho);
}

BigFloat bivariate_normal_moment(int p, int q, const BigFloat& rho) {
  const Dense poly = bivariate_normal_polynomial(p, q);
  BigFloat out(0, kFloatBits);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * rho + to_float(*it);
  return out;
}

NormalityTable normality_check(const MomentEngine& engine, std::size_t n) {
  if (n < 1) throw DomainError("normality check needs n >= 1");
  NormalityTable t;
  t.i = engine.i();
  t.j = engine.j();
  t.n = n;
  t.rho = engine.single() ? BigFloat(1, kFloatBits)
                          : pair_statistics(engine, MomentWindow{}).correlation_value;
  const BigFloat vi = to_float(engine.central_moment(2, 0, n));
  const BigFloat vj = engine.single() ? vi : to_float(engine.central_moment(0, 2, n));
  if (vi <= 0 || vj <= 0) throw DomainError("variance vanishes at n = " + std::to_string(n));
  for (int s = 1; s <= engine.order(); ++s) {
    for (int p = s; p >= 0; --p) {
      const int q = s - p;
      if (engine.single() && q != 0) continue;
      NormalityRow row;
      row.p = p;
      row.q = q;
      row.empirical = to_float(engine.central_moment(p, q, n)) /
                      (sigma_pow(vi, p) * sigma_pow(vj, q));
      row.target = bivariate_normal_moment(p, q, t.rho);
      row.gap = fabs_big(BigFloat(row.empirical - row.target, kFloatBits));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

NormalityTable normality_check(const PatternSet& patterns, std::size_t i, std::size_t j,
                               int order, std::size_t n) {
  if (order < 2) throw DomainError("normality check needs order >= 2");
  return normality_check(MomentEngine(patterns, i, j, order), n);
}

MomentReport moments(const PatternSet& patterns, const MomentOptions& options) {
  if (patterns.empty()) throw DomainError("moments need at least one pattern");
  if (options.order < 2) throw DomainError("moment order must be at least 2");
  const std::size_t r = patterns.size();
  const RationalFunction joint = joint_gf_shifted(patterns);

  std::vector<std::unique_ptr<MomentEngine>> engines;
  if (r == 1) {
    engines.push_back(std::make_unique<MomentEngine>(joint, patterns.length(), 0, 0,
                                                     options.order));
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        engines.push_back(std::make_unique<MomentEngine>(joint, patterns.length(), i, j,
                                                         options.order));
      }
    }
  }

  MomentReport report;
  report.patterns = patterns;
  report.order = options.order;
  for (const auto& e : engines) {
    for (int s = 0; s <= options.order; ++s) {
      for (int p = s; p >= 0; --p) {
        if (e->single() && p != s) continue;
        e->verify(p, s - p, options.window);
      }
    }
    if (!e->single()) report.pairs.push_back(pair_statistics(*e, options.window));
  }
  for (std::size_t k = 0; k < r; ++k) {
    const auto it = std::find_if(engines.begin(), engines.end(), [k](const auto& e) {
      return e->i() == k || e->j() == k;
    });
    const MomentEngine& e = **it;
    const int p1 = e.i() == k ? 1 : 0;
    const int q1 = 1 - p1;
    report.expectation.push_back(e.check(
        e.raw_polynomial(p1, q1), [&](std::size_t n) { return e.raw_moment(p1, q1, n); },
        options.window));
    report.variance.push_back(e.check(
        e.central_polynomial(2 * p1, 2 * q1),
        [&](std::size_t n) { return e.central_moment(2 * p1, 2 * q1, n); }, options.window));
  }
  if (options.normality_n != 0) {
    report.normality = normality_check(*engines.front(), options.normality_n);
  }
  return report;
}

}  // namespace compclust

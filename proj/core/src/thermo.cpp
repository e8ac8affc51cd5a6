#include "semicount/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "semicount/errors.hpp"

namespace semicount {

WordIndex::WordIndex(const SemigroupSpec& spec, int max_length) : symbols_(spec.symbol_count()), max_length_(max_length) {
  if (max_length < 1) throw DomainError("word index needs max_length >= 1");
  if (symbols_ > 255) throw ResourceError("word index supports at most 255 symbols");
  const int n = symbols_;
  Level one;
  for (int j = 0; j < n; ++j) {
    one.first.push_back(static_cast<std::uint8_t>(j));
    one.start.push_back(static_cast<std::uint32_t>(j));
  }
  levels_.push_back(std::move(one));
  for (int len = 2; len <= max_length; ++len) {
    const Level& prev = levels_.back();
    const std::size_t prev_total = prev.first.size();
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      std::uint64_t end = s + 1 < n ? prev.start[static_cast<std::size_t>(s + 1)] : prev_total;
      cnt[static_cast<std::size_t>(s)] = end - prev.start[static_cast<std::size_t>(s)];
    }
    Level cur;
    cur.cum.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    std::uint64_t total = 0;
    for (int j = 0; j < n; ++j) {
      cur.start.push_back(static_cast<std::uint32_t>(total));
      std::uint64_t off = 0;
      for (int s = 0; s < n; ++s) {
        cur.cum[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(off);
        if (spec.admissible(j, s)) off += cnt[static_cast<std::size_t>(s)];
      }
      total += off;
    }
    if (total > std::numeric_limits<std::uint32_t>::max() / 2) {
      throw ResourceError("too many cylinders at length " + std::to_string(len));
    }
    cur.first.resize(total);
    cur.tail.resize(total);
    cur.prefix.resize(total);
    levels_.push_back(std::move(cur));
    Level& c = levels_.back();
    const Level& p = levels_[levels_.size() - 2];
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        if (!spec.admissible(j, s)) continue;
        const std::uint32_t base = c.start[static_cast<std::size_t>(j)] + c.cum[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        const std::uint32_t t0 = p.start[static_cast<std::size_t>(s)];
        for (std::uint64_t k = 0; k < cnt[static_cast<std::size_t>(s)]; ++k) {
          const auto t = static_cast<std::uint32_t>(t0 + k);
          const auto i = static_cast<std::uint32_t>(base + k);
          c.first[i] = static_cast<std::uint8_t>(j);
          c.tail[i] = t;
          c.prefix[i] = len == 2 ? static_cast<std::uint32_t>(j) : index(len - 1, j, p.prefix[t]);
        }
      }
    }
  }
}

const WordIndex::Level& WordIndex::level(int length) const {
  if (length < 1 || length > max_length_) throw DomainError("word length outside the index");
  return levels_[static_cast<std::size_t>(length - 1)];
}

std::uint32_t WordIndex::index(int length, int j, std::uint32_t t) const {
  if (length == 1) return static_cast<std::uint32_t>(j);
  const Level& c = level(length);
  const Level& p = level(length - 1);
  const int s = p.first[t];
  return c.start[static_cast<std::size_t>(j)] + c.cum[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] +
         (t - p.start[static_cast<std::size_t>(s)]);
}

Word WordIndex::word(int length, std::uint32_t i) const {
  Word w;
  for (int len = length; len >= 1; --len) {
    w.push_back(first(len, i));
    if (len > 1) i = tail(len, i);
  }
  return w;
}

std::shared_ptr<const CylinderData> build_cylinders(const SemigroupSpec& spec, int depth) {
  if (depth < 1) throw DomainError("operator depth must be >= 1");
  auto out = std::make_shared<CylinderData>();
  out->depth = depth;
  out->irreducible = is_irreducible(spec);
  const int top = depth + 1;
  auto index = std::make_shared<WordIndex>(spec, top);
  out->index = index;
  const int dim = spec.boundary_dim();
  const auto d = static_cast<std::size_t>(dim);
  // anchors kept for two levels only, dim doubles per word
  std::vector<double> prev, cur;
  std::vector<double> tau_level;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    FloatPoint w = symbol_anchor(spec, j).to_float();
    FloatPoint img{};
    double der = 0.0;
    spec.branch(j).apply_with_derivative(w, img, der);
    for (std::size_t k = 0; k < d; ++k) prev.push_back(w[k]);
    tau_level.push_back(-std::log(der));
  }
  out->tau_sum.push_back(tau_level);
  for (int len = 2; len <= top; ++len) {
    const std::size_t n = index->count(len);
    cur.assign(n * d, 0.0);
    tau_level.assign(n, 0.0);
    std::vector<double> sum(n);
    const auto& psum = out->tau_sum.back();
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t t = index->tail(len, i);
      FloatPoint x{}, y{};
      for (std::size_t k = 0; k < d; ++k) x[k] = prev[t * d + k];
      double der = 0.0;
      if (!spec.branch(index->first(len, i)).apply_with_derivative(x, y, der)) {
        throw NumericError("cylinder anchor hits a pole");
      }
      for (std::size_t k = 0; k < d; ++k) cur[i * d + k] = y[k];
      tau_level[i] = -std::log(der);
      sum[i] = tau_level[i] + psum[t];
    }
    out->tau_sum.push_back(std::move(sum));
    std::swap(prev, cur);
  }
  out->tau = std::move(tau_level);
  return out;
}

DiscretizedOperator::DiscretizedOperator(std::shared_ptr<const CylinderData> cylinders, double s)
    : cyl_(std::move(cylinders)), s_(s) {
  weight_.resize(cyl_->size());
  for (std::size_t i = 0; i < weight_.size(); ++i) weight_[i] = std::exp(-s * cyl_->tau[i]);
}

std::vector<double> DiscretizedOperator::apply(const std::vector<double>& f) const {
  const WordIndex& idx = *cyl_->index;
  const int len = cyl_->length();
  std::vector<double> acc(idx.count(len - 1), 0.0);
  for (std::uint32_t b = 0; b < weight_.size(); ++b) acc[idx.tail(len, b)] += weight_[b] * f[b];
  std::vector<double> out(weight_.size());
  for (std::uint32_t a = 0; a < out.size(); ++a) out[a] = acc[idx.prefix(len, a)];
  return out;
}

std::vector<double> DiscretizedOperator::apply_left(const std::vector<double>& nu) const {
  const WordIndex& idx = *cyl_->index;
  const int len = cyl_->length();
  std::vector<double> acc(idx.count(len - 1), 0.0);
  for (std::uint32_t a = 0; a < nu.size(); ++a) acc[idx.prefix(len, a)] += nu[a];
  std::vector<double> out(weight_.size());
  for (std::uint32_t b = 0; b < out.size(); ++b) out[b] = weight_[b] * acc[idx.tail(len, b)];
  return out;
}

DiscretizedOperator build_operator(const SemigroupSpec& spec, double s, int depth) {
  return DiscretizedOperator(build_cylinders(spec, depth), s);
}

bool is_irreducible(const SemigroupSpec& spec) {
  const int n = spec.symbol_count();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (int k = 0; k < n; ++k) {
        bool edge = dir == 0 ? spec.admissible(j, k) : spec.admissible(k, j);
        if (edge && !seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = 1;
          stack.push_back(k);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

namespace {

// Normalized power iteration; returns the eigenvalue, v normalized to sum 1.
template <typename Step>
double power_iterate(std::vector<double>& v, const Step& step, int max_iterations, int& iterations, double& ratio) {
  double lambda = 0.0, last_diff = 0.0;
  ratio = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    std::vector<double> w = step(v);
    double sum = 0.0;
    for (double x : w) sum += x;
    if (!(sum > 0.0) || !std::isfinite(sum)) throw NumericError("power iteration lost positivity");
    double change = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] /= sum;
      change = std::max(change, std::fabs(w[i] - v[i]));
      vmax = std::max(vmax, w[i]);
    }
    v = std::move(w);
    double diff = std::fabs(sum - lambda);
    if (it > 2 && last_diff > 0.0 && diff > 0.0) ratio = diff / last_diff;
    last_diff = diff;
    lambda = sum;
    iterations = it;
    if (it > 1 && diff < 1e-12 * lambda && change < 1e-12 * vmax) return lambda;
  }
  throw NumericError("power iteration did not converge in " + std::to_string(max_iterations) + " iterations");
}

}  // namespace

RPFData leading_eigen(const DiscretizedOperator& op, int max_iterations, const RPFData* warm) {
  if (!op.cylinders().irreducible) throw DomainError("transition graph is not strongly connected");
  const std::size_t n = op.size();
  RPFData out;
  bool use_warm = warm != nullptr && warm->h.size() == n && warm->nu.size() == n;
  out.h = use_warm ? warm->h : std::vector<double>(n, 1.0 / static_cast<double>(n));
  out.nu = use_warm ? warm->nu : std::vector<double>(n, 1.0 / static_cast<double>(n));
  if (use_warm) {
    double sh = 0.0;
    for (double x : out.h) sh += x;
    for (double& x : out.h) x /= sh;
  }
  int it_r = 0, it_l = 0;
  double ratio_r = 0.0, ratio_l = 0.0;
  out.lambda = power_iterate(out.h, [&](const std::vector<double>& v) { return op.apply(v); }, max_iterations, it_r,
                             ratio_r);
  double lambda_l =
      power_iterate(out.nu, [&](const std::vector<double>& v) { return op.apply_left(v); }, max_iterations, it_l, ratio_l);
  if (std::fabs(lambda_l - out.lambda) > 1e-9 * out.lambda) {
    throw NumericError("left and right leading eigenvalues disagree");
  }
  double nh = 0.0;
  for (std::size_t i = 0; i < n; ++i) nh += out.nu[i] * out.h[i];
  for (double& x : out.h) x /= nh;
  out.iterations = it_r + it_l;
  out.second_ratio = ratio_r;
  return out;
}

double pressure(const SemigroupSpec& spec, double s, int depth) {
  return std::log(leading_eigen(build_operator(spec, s, depth)).lambda);
}

int default_depth(const SemigroupSpec& spec) {
  if (spec.kind() == SpecKind::ContinuedFractions && spec.alphabet().size() == 2) return 8;
  // largest depth <= 6 whose top level stays under kCylinderBudget words
  const int n = spec.symbol_count();
  std::vector<double> ends(static_cast<std::size_t>(n), 1.0);
  int depth = 1;
  for (int len = 2; len <= 7; ++len) {
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (spec.admissible(j, k)) next[static_cast<std::size_t>(j)] += ends[static_cast<std::size_t>(k)];
      }
      total += next[static_cast<std::size_t>(j)];
    }
    if (total > kCylinderBudget) break;
    ends = std::move(next);
    depth = len - 1;
  }
  return depth;
}

double bowen_root(const std::shared_ptr<const CylinderData>& cyl, double tol, double guess, double hi,
                  int max_iterations, double* residual) {
  RPFData warm;
  bool have = false;
  auto eval = [&](double s, double& dp) {
    DiscretizedOperator op(cyl, s);
    RPFData r = leading_eigen(op, 100000, have ? &warm : nullptr);
    // dP/ds = -sum nu tau h with nu(h) = 1
    dp = 0.0;
    for (std::size_t i = 0; i < r.h.size(); ++i) dp -= r.nu[i] * cyl->tau[i] * r.h[i];
    warm = std::move(r);
    have = true;
    return std::log(warm.lambda);
  };
  double lo = 0.0, dp = 0.0;
  double p_lo = eval(lo, dp);
  if (std::fabs(p_lo) < tol) {
    if (residual) *residual = p_lo;
    return lo;
  }
  if (p_lo < 0) throw NumericError("pressure at s = 0 is negative; no root in (0, hi]");
  double p_hi = eval(hi, dp);
  for (int k = 0; p_hi > 0 && k < 6; ++k) {
    lo = hi;
    hi *= 2;
    p_hi = eval(hi, dp);
  }
  if (p_hi > 0) throw NumericError("could not bracket the pressure root");
  double s = std::clamp(guess, lo, hi);
  if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
  for (int it = 0; it < max_iterations; ++it) {
    double p = eval(s, dp);
    // stop on the Newton step in s, not on |p|
    if (p == 0.0 || (dp < 0 && std::fabs(p / dp) < tol)) {
      if (residual) *residual = p;
      return dp < 0 ? s - p / dp : s;
    }
    (p > 0 ? lo : hi) = s;
    double next = dp < 0 ? s - p / dp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-15) {
      if (residual) *residual = p;
      return s;
    }
    s = next;
  }
  throw NumericError("Bowen root did not converge");
}

BowenResult bowen_delta(const SemigroupSpec& spec, double tol, const BowenOptions& opt) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!is_irreducible(spec)) throw DomainError("transition graph is not strongly connected");
  BowenResult out;
  out.depth = opt.depth > 0 ? opt.depth : default_depth(spec);
  std::vector<int> depths;
  if (opt.extrapolate) {
    for (int d : {out.depth - 4, out.depth - 2}) {
      if (d >= 1) depths.push_back(d);
    }
  }
  depths.push_back(out.depth);
  const double hi = spec.hyperbolic_dim() - 1;
  double guess = 0.5 * hi;
  for (int d : depths) {
    double res = 0.0;
    guess = bowen_root(build_cylinders(spec, d), tol, guess, hi, opt.max_iterations, &res);
    out.per_depth.emplace_back(d, guess);
    out.residual = res;
  }
  out.delta = guess;
  const std::size_t m = out.per_depth.size();
  if (m >= 2) out.error_estimate = std::fabs(out.per_depth[m - 1].second - out.per_depth[m - 2].second);
  if (m >= 3) {
    double d1 = out.per_depth[m - 2].second - out.per_depth[m - 3].second;
    double d2 = out.per_depth[m - 1].second - out.per_depth[m - 2].second;
    // Aitken only for a clean geometric pattern
    if (d1 != 0.0 && std::fabs(d2 / d1) < 0.9 && d2 / d1 > 0) {
      out.delta = out.per_depth[m - 1].second - d2 * d2 / (d2 - d1);
    }
  }
  return out;
}

GibbsReport gibbs_check(const SemigroupSpec& spec, double delta, int depth) {
  auto cyl = build_cylinders(spec, depth);
  DiscretizedOperator op(cyl, delta);
  RPFData r = leading_eigen(op);
  const WordIndex& idx = *cyl->index;
  GibbsReport out;
  out.c1 = std::numeric_limits<double>::infinity();
  out.c2 = 0.0;
  std::vector<double> nu = r.nu;
  for (int len = depth + 1; len >= 2; --len) {
    const auto& ts = cyl->tau_sum[static_cast<std::size_t>(len - 1)];
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      double ratio = nu[i] / std::exp(-delta * ts[i]);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.per_length.emplace_back(len, lo, hi);
    out.c1 = std::min(out.c1, lo);
    out.c2 = std::max(out.c2, hi);
    std::vector<double> shorter(idx.count(len - 1), 0.0);
    for (std::uint32_t i = 0; i < nu.size(); ++i) shorter[idx.prefix(len, i)] += nu[i];
    nu = std::move(shorter);
  }
  std::reverse(out.per_length.begin(), out.per_length.end());
  return out;
}

DecayReport congruence_decay_probe(const SemigroupSpec& spec, const GaussianInteger& q, std::complex<double> xi,
                                   int k_max, int trials, std::uint64_t seed, const DecayOptions& opt) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  if (trials < 1) throw DomainError("trials must be >= 1");
  QuotientGroup group = quotient_group(spec, q, opt.cap);
  auto cyl = build_cylinders(spec, opt.depth);
  const double delta = opt.delta ? *opt.delta : bowen_root(cyl, 1e-12, 0.5, spec.hyperbolic_dim() - 1, 200);
  DiscretizedOperator op(cyl, delta + xi.real());
  RPFData rpf = leading_eigen(op);
  const WordIndex& idx = *cyl->index;
  const int len = cyl->length();
  const std::size_t nc = cyl->size();
  const std::size_t g = group.size();
  std::vector<std::vector<std::uint32_t>> perm;
  for (int j = 0; j < spec.symbol_count(); ++j) perm.push_back(group.right_table(group.index_of(spec.generator(j))));
  // weight of b in the normalized operator, with the imaginary twist exp(-i b tau)
  std::vector<std::complex<double>> wb(nc);
  for (std::size_t b = 0; b < nc; ++b) {
    wb[b] = op.weights()[b] * rpf.h[b] / rpf.lambda * std::exp(std::complex<double>(0.0, -xi.imag() * cyl->tau[b]));
  }
  using Vec = std::vector<std::complex<double>>;
  auto project_mean_zero = [&](Vec& v) {
    for (std::size_t a = 0; a < nc; ++a) {
      std::complex<double> m = 0.0;
      for (std::size_t x = 0; x < g; ++x) m += v[a * g + x];
      m /= static_cast<double>(g);
      for (std::size_t x = 0; x < g; ++x) v[a * g + x] -= m;
    }
  };
  auto sup = [](const Vec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  };
  auto step = [&](const Vec& v) {
    Vec acc(idx.count(len - 1) * g, 0.0);
    for (std::uint32_t b = 0; b < nc; ++b) {
      const auto& p = perm[static_cast<std::size_t>(idx.first(len, b))];
      const std::size_t t = idx.tail(len, b);
      for (std::size_t x = 0; x < g; ++x) acc[t * g + x] += wb[b] * v[b * g + p[x]];
    }
    Vec out(nc * g);
    for (std::uint32_t a = 0; a < nc; ++a) {
      const std::size_t pa = idx.prefix(len, a);
      const double inv_h = 1.0 / rpf.h[a];
      for (std::size_t x = 0; x < g; ++x) out[a * g + x] = acc[pa * g + x] * inv_h;
    }
    return out;
  };
  DecayReport rep;
  rep.group_size = g;
  rep.cylinders = nc;
  rep.norms.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Vec v(nc * g);
    if (opt.constant_in_group) {
      for (std::size_t a = 0; a < nc; ++a) {
        double c = 1.0 + 0.5 * unit(rng);
        for (std::size_t x = 0; x < g; ++x) v[a * g + x] = c;
      }
    } else {
      for (auto& z : v) z = unit(rng);
      project_mean_zero(v);
    }
    const double n0 = sup(v);
    if (n0 == 0.0) continue;
    rep.norms[0] = 1.0;
    for (int k = 1; k <= k_max; ++k) {
      v = step(v);
      if (!opt.constant_in_group) project_mean_zero(v);
      rep.norms[static_cast<std::size_t>(k)] = std::max(rep.norms[static_cast<std::size_t>(k)], sup(v) / n0);
    }
  }
  if (rep.norms[0] == 0.0) {
    rep.degenerate = true;
    return rep;
  }
  // least squares slope of log norm against k over k = 1..k_max
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int k = 1; k <= k_max; ++k) {
    double y = rep.norms[static_cast<std::size_t>(k)];
    if (!(y > 0.0)) break;
    y = std::log(y);
    sx += k;
    sy += y;
    sxx += static_cast<double>(k) * k;
    sxy += k * y;
    ++m;
  }
  if (m >= 2) rep.eta = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

}  // namespace semicount

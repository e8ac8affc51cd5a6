#include "semicount/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "semicount/errors.hpp"

namespace semicount {

namespace {

std::string point_str(const FloatPoint& x, int dim) {
  return BoundaryPoint::from_float(x, dim).str();
}

// Signed distance-like margin of x inside the domain of symbol j; negative outside.
double membership_margin(const FloatPoint& x, int j, const SemigroupSpec& spec) {
  const int dim = spec.boundary_dim();
  if (spec.kind() == SpecKind::Schottky) {
    const Disk& d = spec.symbol_disk(j);
    return d.radius() - distance(x, d.float_center(), dim);
  }
  FloatPoint y{};
  if (!spec.inverse_branch(j).apply(x, y)) return -std::numeric_limits<double>::infinity();
  const double eps = static_cast<double>(spec.epsilon());
  if (dim == 1) return std::min(y[0] - eps, 1.0 - y[0]);
  double r = std::hypot(y[0] - 0.5, y[1]);
  return std::min({0.5 - r, y[0] - eps, 0.5 - eps / 4 - y[1]});
}

bool exact_member(const BoundaryPoint& x, int j, const SemigroupSpec& spec) {
  if (spec.kind() == SpecKind::Schottky) {
    const Disk& d = spec.symbol_disk(j);
    Rational s = 0;
    for (int i = 0; i < d.dim(); ++i) {
      Rational t = x.exact_coords()[static_cast<std::size_t>(i)] - d.center[static_cast<std::size_t>(i)];
      s += t * t;
    }
    return s <= d.radius_sq;
  }
  BoundaryPoint y = mobius_apply(spec.generator_inverse(j), x);
  if (y.is_infinity()) return false;
  const auto& c = y.exact_coords();
  const Rational& eps = spec.epsilon();
  if (c.size() == 1) return c[0] >= eps && c[0] <= 1;
  Rational half(1, 2);
  Rational dx = c[0] - half;
  return dx * dx + c[1] * c[1] <= half * half && c[0] >= eps && c[1] <= half - eps / 4;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<FloatPoint> symbol_anchors(const SemigroupSpec& spec) {
  std::vector<FloatPoint> out;
  for (int j = 0; j < spec.symbol_count(); ++j) out.push_back(symbol_anchor(spec, j).to_float());
  return out;
}

FloatPoint anchor_of(const Word& w, const SemigroupSpec& spec, const std::vector<FloatPoint>& anchors) {
  FloatPoint x = anchors[static_cast<std::size_t>(w.back())];
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    FloatPoint y{};
    spec.branch(w[i]).apply(x, y);
    x = y;
  }
  return x;
}

double max_derivative_on_disk(const FloatMobius& g, const Disk& d, int dim) {
  FloatPoint c = d.float_center();
  const double r = d.radius();
  double best = 0.0;
  if (dim == 1) {
    for (double s : {-1.0, 1.0}) {
      FloatPoint x = c;
      x[0] += s * r;
      best = std::max(best, g.derivative(x));
    }
    return best;
  }
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 512; ++k) {
    FloatPoint dir{};
    double n = 0.0;
    for (int i = 0; i < dim; ++i) {
      dir[static_cast<std::size_t>(i)] = dim == 2 ? (i == 0 ? std::cos(2 * M_PI * k / 512) : std::sin(2 * M_PI * k / 512))
                                                 : gauss(rng);
      n += dir[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(i)];
    }
    n = std::sqrt(n);
    FloatPoint x = c;
    for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] += r * dir[static_cast<std::size_t>(i)] / n;
    best = std::max(best, g.derivative(x));
  }
  // the maximum sits on the boundary; pad for the sampling gap
  return best * 1.01;
}

}  // namespace

int symbol_of(const FloatPoint& x, const SemigroupSpec& spec) {
  int found = -1;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    double m = membership_margin(x, j, spec);
    if (std::fabs(m) <= kDiskGuard) {
      throw DomainError("point " + point_str(x, spec.boundary_dim()) + " lies on the boundary band of D" +
                        std::to_string(j + 1));
    }
    if (m > 0) {
      if (found >= 0) {
        throw DomainError("point " + point_str(x, spec.boundary_dim()) + " lies in two disks");
      }
      found = j;
    }
  }
  if (found < 0) throw DomainError("point " + point_str(x, spec.boundary_dim()) + " lies outside every disk");
  return found;
}

int symbol_of(const BoundaryPoint& x, const SemigroupSpec& spec) {
  if (x.is_infinity()) throw DomainError("the point at infinity lies outside every disk");
  if (x.dim() != spec.boundary_dim()) throw DomainError("point dimension does not match the spec");
  if (!x.is_exact()) return symbol_of(x.to_float(), spec);
  int found = -1;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    if (exact_member(x, j, spec)) {
      if (found >= 0) throw DomainError("point " + x.str() + " lies in two disks");
      found = j;
    }
  }
  if (found < 0) throw DomainError("point " + x.str() + " lies outside every disk");
  return found;
}

MapStep expanding_map(const BoundaryPoint& x, const SemigroupSpec& spec) {
  int j = symbol_of(x, spec);
  return {mobius_apply(spec.generator_inverse(j), x), j};
}

double distortion(const BoundaryPoint& x, const SemigroupSpec& spec) {
  int j = symbol_of(x, spec);
  return std::log(conformal_derivative(spec.generator_inverse(j), x));
}

double periodic_birkhoff_sum(const Word& w, const SemigroupSpec& spec) {
  if (!is_cyclically_admissible(w, spec)) throw DomainError("word is not cyclically admissible");
  long double sum = 0.0L;
  Word rot = w;
  for (std::size_t j = 0; j < w.size(); ++j) {
    sum += distortion(periodic_point(rot, spec), spec);
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return static_cast<double>(sum);
}

double birkhoff_sum(const BoundaryPoint& x, int k, const SemigroupSpec& spec) {
  if (k < 0) throw DomainError("negative Birkhoff length");
  if (k == 0) return 0.0;
  const int dim = spec.boundary_dim();
  FloatPoint start = x.to_float();
  PreciseMobius::Point p{};
  for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = start[static_cast<std::size_t>(i)];
  long double sum = 0.0L;
  for (int step = 0; step < k; ++step) {
    FloatPoint f{};
    for (int i = 0; i < dim; ++i) f[static_cast<std::size_t>(i)] = static_cast<double>(p[static_cast<std::size_t>(i)]);
    int j;
    try {
      j = symbol_of(f, spec);
    } catch (const DomainError& e) {
      throw DomainError("orbit leaves the domain at step " + std::to_string(step) + ": " + e.what());
    }
    PreciseMobius::Point q{};
    long double d = 0.0L;
    spec.precise_inverse_branch(j).apply_with_derivative(p, q, d);
    sum += std::log(d);
    p = q;
  }
  return static_cast<double>(sum);
}

Word itinerary(const BoundaryPoint& x, int k, const SemigroupSpec& spec) {
  Word out;
  FloatPoint p = x.to_float();
  for (int step = 0; step < k; ++step) {
    int j;
    try {
      j = symbol_of(p, spec);
    } catch (const DomainError& e) {
      throw DomainError("orbit leaves the domain at step " + std::to_string(step) + ": " + e.what());
    }
    out.push_back(j);
    FloatPoint q{};
    spec.inverse_branch(j).apply(p, q);
    p = q;
  }
  return out;
}

BoundaryPoint periodic_point(const Word& w, const SemigroupSpec& spec) {
  if (w.empty()) throw DomainError("periodic_point needs a nonempty word");
  if (!is_cyclically_admissible(w, spec)) throw DomainError("word is not cyclically admissible");
  return fixed_points(word_to_element(w, spec)).attracting;
}

FloatPoint word_anchor(const Word& w, const SemigroupSpec& spec) {
  if (w.empty()) throw DomainError("word_anchor needs a nonempty word");
  return anchor_of(w, spec, symbol_anchors(spec));
}

std::vector<Cylinder> cylinders_at_depth(const SemigroupSpec& spec, int k) {
  if (k < 0) throw DomainError("negative cylinder depth");
  std::vector<FloatPoint> anchors = symbol_anchors(spec);
  std::vector<Cylinder> out;
  EnumerationBound b;
  b.min_length = k + 1;
  b.max_length = k + 1;
  const int dim = spec.boundary_dim();
  enumerate_words(spec, b, [&](const Word& w, const GroupElement&) {
    Word prefix(w.begin(), w.end() - 1);
    Cylinder c;
    c.word = w;
    c.hull = disk_image(word_to_element(prefix, spec), spec.symbol_disk(w.back()));
    c.anchor = BoundaryPoint::from_float(anchor_of(w, spec, anchors), dim);
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

double section_log_expansion(const Word& w, const FloatPoint& u, const SemigroupSpec& spec) {
  FloatPoint x = u;
  double s = 0.0;
  for (std::size_t i = w.size(); i-- > 0;) {
    FloatPoint y{};
    double d = 0.0;
    if (!spec.branch(w[i]).apply_with_derivative(x, y, d)) throw DomainError("section hits a pole");
    s -= std::log(d);
    x = y;
  }
  return s;
}

std::vector<FloatPoint> sample_limit_set(const SemigroupSpec& spec, std::size_t count, std::uint64_t seed, int length) {
  if (length < 1) throw DomainError("sample word length must be positive");
  std::vector<FloatPoint> anchors = symbol_anchors(spec);
  std::vector<FloatPoint> out;
  out.reserve(count);
  const int n = spec.symbol_count();
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng = stream(seed, i);
    Word w;
    while (static_cast<int>(w.size()) < length) {
      int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (!w.empty() && !spec.admissible(w.back(), s)) continue;
      w.push_back(s);
    }
    out.push_back(anchor_of(w, spec, anchors));
  }
  return out;
}

std::vector<FloatPoint> sample_domain(const SemigroupSpec& spec, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int dim = spec.boundary_dim();
  const int n = spec.symbol_count();
  std::vector<FloatPoint> out;
  out.reserve(count);
  while (out.size() < count) {
    int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    FloatPoint x{};
    if (spec.kind() == SpecKind::ContinuedFractions) {
      const double eps = static_cast<double>(spec.epsilon());
      FloatPoint y{};
      if (dim == 1) {
        y[0] = eps + (1.0 - eps) * unit(rng);
      } else {
        const double top = 0.5 - eps / 4;
        y[0] = eps + (1.0 - eps) * unit(rng);
        y[1] = -0.5 + (top + 0.5) * unit(rng);
        if (std::hypot(y[0] - 0.5, y[1]) > 0.5) continue;
      }
      spec.branch(j).apply(y, x);
    } else {
      const Disk& d = spec.symbol_disk(j);
      FloatPoint c = d.float_center();
      const double r = d.radius();
      double n2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        double t = 2.0 * unit(rng) - 1.0;
        x[static_cast<std::size_t>(i)] = t;
        n2 += t * t;
      }
      if (n2 > 1.0) continue;
      for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + r * x[static_cast<std::size_t>(i)];
    }
    out.push_back(x);
  }
  return out;
}

SandwichReport hyperbolicity_sandwich(const SemigroupSpec& spec, std::size_t samples, std::uint64_t seed) {
  if (spec.kind() != SpecKind::ContinuedFractions) throw DomainError("the sandwich bound is stated for CF specs");
  SandwichReport rep;
  const double eps = static_cast<double>(spec.epsilon());
  double cmax = 0.0;
  for (const auto& a : spec.alphabet()) cmax = std::max(cmax, std::abs(a.to_complex()));
  rep.lower = std::pow(1.0 + eps, 4);
  rep.upper = std::pow(1.0 + cmax, 4);
  rep.min_seen = std::numeric_limits<double>::infinity();
  for (const auto& x : sample_domain(spec, samples, seed)) {
    int j = symbol_of(x, spec);
    double d = spec.inverse_branch(j).derivative(x);
    rep.min_seen = std::min(rep.min_seen, d);
    rep.max_seen = std::max(rep.max_seen, d);
    if (d < rep.lower * (1 - 1e-12) || d > rep.upper * (1 + 1e-12)) ++rep.violations;
    ++rep.samples;
  }
  return rep;
}

double contraction_bound(const SemigroupSpec& spec) {
  const int dim = spec.boundary_dim();
  double best = 0.0;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    for (int k = 0; k < spec.symbol_count(); ++k) {
      if (!spec.admissible(j, k)) continue;
      best = std::max(best, max_derivative_on_disk(spec.branch(j), spec.symbol_disk(k), dim));
    }
  }
  return best;
}

LnicResult lnic_probe(const SemigroupSpec& spec, int m, std::size_t sample_count, std::uint64_t seed) {
  if (m < 1) throw DomainError("section length m must be >= 1");
  std::vector<Word> sections;
  EnumerationBound b;
  b.min_length = m;
  b.max_length = m;
  enumerate_words(spec, b, [&](const Word& w, const GroupElement&) {
    sections.push_back(w);
    return true;
  });
  if (sections.size() < 2) throw DomainError("fewer than two sections of length " + std::to_string(m));
  std::vector<FloatPoint> pts = sample_limit_set(spec, sample_count, seed);
  const int n = spec.symbol_count();
  const int dim = spec.boundary_dim();
  std::vector<std::vector<std::size_t>> by_disk(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pts.size(); ++i) by_disk[static_cast<std::size_t>(symbol_of(pts[i], spec))].push_back(i);
  // tau_m(v u) per section and point; NaN where the section does not apply
  const std::size_t ns = sections.size();
  std::vector<std::vector<double>> tau(ns, std::vector<double>(pts.size(), std::nan("")));
  for (std::size_t s = 0; s < ns; ++s) {
    for (int k = 0; k < n; ++k) {
      if (!spec.admissible(sections[s].back(), k)) continue;
      for (std::size_t i : by_disk[static_cast<std::size_t>(k)]) tau[s][i] = section_log_expansion(sections[s], pts[i], spec);
    }
  }
  LnicResult best;
  best.delta0 = -1.0;
  for (std::size_t a = 0; a < ns; ++a) {
    for (std::size_t c = a + 1; c < ns; ++c) {
      double worst = std::numeric_limits<double>::infinity();
      std::size_t pairs = 0;
      for (int k = 0; k < n; ++k) {
        const auto& idx = by_disk[static_cast<std::size_t>(k)];
        if (idx.empty() || std::isnan(tau[a][idx[0]]) || std::isnan(tau[c][idx[0]])) continue;
        for (std::size_t p = 0; p < idx.size(); ++p) {
          const double dp = tau[a][idx[p]] - tau[c][idx[p]];
          for (std::size_t q = p + 1; q < idx.size(); ++q) {
            double dist = distance(pts[idx[p]], pts[idx[q]], dim);
            if (dist < 1e-8) continue;
            double dq = tau[a][idx[q]] - tau[c][idx[q]];
            worst = std::min(worst, std::fabs(dp - dq) / dist);
            ++pairs;
          }
        }
      }
      if (pairs == 0) continue;
      ++best.section_pairs;
      best.point_pairs += pairs;
      if (worst > best.delta0) {
        best.delta0 = worst;
        best.v1 = sections[a];
        best.v2 = sections[c];
      }
    }
  }
  if (best.section_pairs == 0) throw DomainError("no section pair has sampled point pairs in a common disk");
  return best;
}

TemporalDistance temporal_distance(const Word& alpha, const Word& beta, const FloatPoint& u, const FloatPoint& u2,
                                   int depth, const SemigroupSpec& spec) {
  if (depth < 0) throw DomainError("negative depth");
  int k = symbol_of(u, spec);
  if (symbol_of(u2, spec) != k) throw DomainError("u and u' lie in different disks");
  auto partial = [&](const Word& w, double& last) {
    if (static_cast<int>(w.size()) < depth) throw DomainError("prefix shorter than the requested depth");
    for (int s : w) spec.check_symbol(s);
    if (depth > 0 && !spec.admissible(w[0], k)) throw DomainError("prefix not admissible before the disk symbol");
    FloatPoint p = u, p2 = u2;
    double sum = 0.0;
    last = 0.0;
    for (int j = 0; j < depth; ++j) {
      if (j > 0 && !spec.admissible(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(j - 1)])) {
        throw DomainError("prefix is not admissible");
      }
      const FloatMobius& g = spec.branch(w[static_cast<std::size_t>(j)]);
      FloatPoint q{}, q2{};
      double d = 0.0, d2 = 0.0;
      g.apply_with_derivative(p, q, d);
      g.apply_with_derivative(p2, q2, d2);
      // tau(g y) = -log|g'(y)|
      last = std::log(d2) - std::log(d);
      sum += last;
      p = q;
      p2 = q2;
    }
    return sum;
  };
  double la = 0.0, lb = 0.0;
  TemporalDistance out;
  out.value = partial(alpha, la) - partial(beta, lb);
  double rho = contraction_bound(spec);
  out.tail_estimate = rho < 1.0 ? (std::fabs(la) + std::fabs(lb)) * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace semicount

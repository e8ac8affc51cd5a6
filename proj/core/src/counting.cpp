#include "semicount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "semicount/dynamics.hpp"
#include "semicount/errors.hpp"

namespace semicount {

double TestFunction::value(const Word& head, const Word& tail, bool periodic) const {
  auto symbol_at = [&](std::size_t i, int& out) {
    if (i < head.size()) {
      out = head[i];
      return true;
    }
    i -= head.size();
    if (tail.empty()) return false;
    if (!periodic && i >= tail.size()) return false;
    out = tail[i % tail.size()];
    return true;
  };
  double v = default_value;
  std::size_t best = 0;
  bool found = false;
  for (const auto& [word, val] : cylinders) {
    if (found && word.size() <= best) continue;
    bool match = true;
    for (std::size_t i = 0; i < word.size() && match; ++i) {
      int s = 0;
      match = symbol_at(i, s) && s == word[i];
    }
    if (match) {
      v = val;
      best = word.size();
      found = true;
    }
  }
  return v;
}

std::uint64_t CountLedger::total(std::size_t k) const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts.at(k)) t += c;
  return t;
}

std::size_t CountLedger::attained(std::size_t k) const {
  const auto& row = counts.at(k);
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](std::uint64_t c) { return c > 0; }));
}

std::vector<Rational> geometric_schedule(double r0, int m) {
  if (!(r0 > 0) || !std::isfinite(r0)) throw DomainError("radius R0 must be positive and finite");
  if (m < 1) throw DomainError("schedule needs at least one checkpoint");
  Rational r(r0);
  Rational sq = r * r;
  std::vector<Rational> out;
  for (int j = 0; j < m; ++j) {
    out.push_back(sq);
    sq *= 2;
  }
  return out;
}

namespace {

Integer floor_integer(const Rational& x) {
  BigInt n = boost::multiprecision::numerator(x);
  BigInt d = boost::multiprecision::denominator(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return Integer(q);
}

// Enumerates nonempty gamma with gamma gamma0 admissible and ||gamma gamma0||^2
// <= thresholds.back(), reporting the first checkpoint that contains it.
class BallWalker {
 public:
  using Visit = std::function<void(const Word&, std::uint32_t cls, std::size_t level)>;

  BallWalker(const SemigroupSpec& spec, const QuotientGroup& group, const Word& base,
             const std::vector<Rational>& radius_sq)
      : spec_(spec), group_(group), base_(base), base_el_(word_to_element(base, spec)) {
    if (!base.empty() && !is_admissible(base, spec)) throw DomainError("base word is not admissible");
    if (radius_sq.empty()) throw DomainError("radius schedule is empty");
    for (std::size_t k = 1; k < radius_sq.size(); ++k) {
      if (!(radius_sq[k] > radius_sq[k - 1])) throw DomainError("radius schedule must be increasing");
    }
    if (!(radius_sq.front() > 0)) throw DomainError("radii must be positive");
    const Integer n0 = frobenius_norm_sq(base_el_);
    const Rational n0r = n0.to_rational();
    for (const Rational& r : radius_sq) thresholds_.push_back(floor_integer(r * n0r));
    // ||gamma|| <= ||gamma gamma0|| ||gamma0^{-1}||
    gamma_bound_ = floor_integer(radius_sq.back() * n0r * frobenius_norm_sq(base_el_.inverse()).to_rational());
    schottky_ = spec.kind() == SpecKind::Schottky;
    if (schottky_) {
      escape_ = schottky_escape_constant(spec);
      dmax_ = distance_for_norm_sq(spec.generator(0), gamma_bound_);
    }
    for (int j = 0; j < spec.symbol_count(); ++j) {
      right_.push_back(group.right_table(group.index_of(spec.generator(j))));
    }
  }

  // Returns false when the node budget ran out.
  bool run_subtree(int j, std::uint64_t budget, std::uint64_t& nodes, const Visit& visit) const {
    std::vector<std::uint32_t> cls(2, group_.identity());
    nodes = 0;
    bool exhausted = false;
    auto process = [&](const Word& w, const GroupElement& g) {
      if (nodes >= budget) {
        exhausted = true;
        return Walk::Stop;
      }
      ++nodes;
      const std::size_t len = w.size();
      if (cls.size() <= len) cls.resize(len + 1);
      cls[len] = right_[static_cast<std::size_t>(w.back())][cls[len - 1]];
      const Integer ng = frobenius_norm_sq(g);
      if (ng > gamma_bound_) {
        // CF norms are monotone under extension; Schottky uses the escape bound
        if (!schottky_) return Walk::Prune;
        if (hyperbolic_distance(g) - escape_ > dmax_ + 1e-9 * (1.0 + dmax_)) return Walk::Prune;
        return Walk::Descend;
      }
      if (!base_.empty() && !spec_.admissible(w.back(), base_.front())) return Walk::Descend;
      const Integer m = base_.empty() ? ng : frobenius_norm_sq(g * base_el_);
      auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), m);
      if (it != thresholds_.end()) visit(w, cls[len], static_cast<std::size_t>(it - thresholds_.begin()));
      return Walk::Descend;
    };
    Word root{j};
    Walk top = process(root, spec_.generator(j));
    if (top == Walk::Stop) return false;
    if (top == Walk::Descend) {
      walk_words(spec_, Extension::Append, 1 << 20, process, root);
    }
    return !exhausted;
  }

  std::size_t levels() const { return thresholds_.size(); }
  const GroupElement& base_element() const { return base_el_; }

 private:
  const SemigroupSpec& spec_;
  const QuotientGroup& group_;
  Word base_;
  GroupElement base_el_;
  std::vector<Integer> thresholds_;
  Integer gamma_bound_;
  bool schottky_ = false;
  double escape_ = 0.0, dmax_ = 0.0;
  std::vector<std::vector<std::uint32_t>> right_;
};

}  // namespace

CountLedger ball_count(const SemigroupSpec& spec, const GaussianInteger& q, const Word& base,
                       const std::vector<Rational>& radius_sq, const BallCountOptions& opt) {
  if (q.is_zero()) throw DomainError("modulus must be nonzero");
  if (opt.threads < 1) throw DomainError("threads must be >= 1");
  QuotientGroup group = quotient_group(spec, q, opt.group_cap);
  BallWalker walker(spec, group, base, radius_sq);
  const int n = spec.symbol_count();
  const std::size_t m = walker.levels();
  const std::size_t gs = group.size();

  struct Part {
    std::vector<std::uint64_t> counts;
    std::vector<double> weighted;
    std::uint64_t nodes = 0;
    bool complete = true;
    std::exception_ptr error;
  };
  std::vector<Part> parts(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int j = next++; j < n; j = next++) {
      Part& p = parts[static_cast<std::size_t>(j)];
      try {
        p.counts.assign(m * gs, 0);
        p.weighted.assign(m * gs, 0.0);
        const std::uint64_t share = opt.budget / static_cast<std::uint64_t>(n) +
                                    (static_cast<std::uint64_t>(j) < opt.budget % static_cast<std::uint64_t>(n) ? 1 : 0);
        p.complete = walker.run_subtree(j, share, p.nodes, [&](const Word& w, std::uint32_t c, std::size_t k) {
          p.counts[k * gs + c] += 1;
          p.weighted[k * gs + c] += opt.weight.is_constant() ? opt.weight.default_value : opt.weight.value(w, base);
        });
      } catch (...) {
        p.error = std::current_exception();
      }
    }
  };
  const int nt = std::min(opt.threads, n);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CountLedger out;
  out.q = q;
  out.group_size = gs;
  out.base = base;
  out.radius_sq = radius_sq;
  for (const Rational& r : radius_sq) out.radius.push_back(std::sqrt(r.convert_to<double>()));
  out.counts.assign(m, std::vector<std::uint64_t>(gs, 0));
  out.weighted.assign(m, std::vector<double>(gs, 0.0));
  for (const Part& p : parts) {
    if (p.error) std::rethrow_exception(p.error);
    out.enumerated += p.nodes;
    out.partial = out.partial || !p.complete;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t c = 0; c < gs; ++c) {
        out.counts[k][c] += p.counts[k * gs + c];
        out.weighted[k][c] += p.weighted[k * gs + c];
      }
    }
  }
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t c = 0; c < gs; ++c) {
      out.counts[k][c] += out.counts[k - 1][c];
      out.weighted[k][c] += out.weighted[k - 1][c];
    }
  }
  return out;
}

FloatPoint LimitPoint::point(const SemigroupSpec& spec) const {
  if (period.empty()) throw DomainError("limit point needs a nonempty period");
  Word full = head;
  full.insert(full.end(), period.begin(), period.end());
  if (!is_admissible(full, spec) || !is_cyclically_admissible(period, spec)) {
    throw DomainError("limit point itinerary is not admissible");
  }
  FloatPoint x = periodic_point(period, spec).to_float();
  for (std::size_t i = head.size(); i-- > 0;) {
    FloatPoint y{};
    double d = 0.0;
    // same call as the preimage traversal, so points agree bitwise
    if (!spec.branch(head[i]).apply_with_derivative(x, y, d)) throw DomainError("limit point hits a pole");
    x = y;
  }
  return x;
}

std::vector<double> act(const QuotientGroup& group, std::uint32_t c, const std::vector<double>& phi) {
  if (phi.size() != group.size()) throw DomainError("phi must have one entry per group element");
  const std::vector<std::uint32_t> right = group.right_table(c);
  std::vector<double> out(phi.size());
  for (std::size_t x = 0; x < phi.size(); ++x) out[x] = phi[right[x]];
  return out;
}

namespace {

std::vector<double> combine(const QuotientGroup& group, const std::vector<double>& weight_by_class,
                            const std::vector<double>& phi) {
  std::vector<double> out(phi.size(), 0.0);
  for (std::uint32_t c = 0; c < weight_by_class.size(); ++c) {
    if (weight_by_class[c] == 0.0) continue;
    const std::vector<std::uint32_t> right = group.right_table(c);
    for (std::size_t x = 0; x < phi.size(); ++x) out[x] += weight_by_class[c] * phi[right[x]];
  }
  return out;
}

struct TreeNode {
  FloatPoint x;
  double remaining;
  Word head;  // symbols prepended to u.head
  std::uint32_t cls;
};

template <typename Container, typename Pop>
std::vector<double> preimage_sum(const SemigroupSpec& spec, const QuotientGroup& group, double r, const LimitPoint& u,
                                 const std::vector<double>& phi, const TestFunction& f, Pop pop) {
  if (phi.size() != group.size()) throw DomainError("phi must have one entry per group element");
  std::vector<double> weight(group.size(), 0.0);
  if (!(r >= 0.0)) return std::vector<double>(phi.size(), 0.0);
  std::vector<std::vector<std::uint32_t>> right;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    right.push_back(group.right_table(group.index_of(spec.generator(j))));
  }
  Container pending;
  pending.push_back({u.point(spec), r, {}, group.identity()});
  while (!pending.empty()) {
    TreeNode node = pop(pending);
    Word full = node.head;
    full.insert(full.end(), u.head.begin(), u.head.end());
    weight[node.cls] += f.is_constant() ? f.default_value : f.value(full, u.period, true);
    const int first = full.empty() ? u.period.front() : full.front();
    for (int s = 0; s < spec.symbol_count(); ++s) {
      if (!spec.admissible(s, first)) continue;
      FloatPoint y{};
      double d = 0.0;
      if (!spec.branch(s).apply_with_derivative(node.x, y, d)) throw DomainError("preimage hits a pole");
      const double tau = -std::log(d);
      if (!(tau > 0.0)) throw DomainError("branch is not contracting on the preimage tree");
      const double rest = node.remaining - tau;
      if (!(rest >= 0.0)) continue;
      Word h{s};
      h.insert(h.end(), node.head.begin(), node.head.end());
      pending.push_back({y, rest, std::move(h), right[static_cast<std::size_t>(s)][node.cls]});
    }
  }
  return combine(group, weight, phi);
}

}  // namespace

std::vector<double> boundary_count(const SemigroupSpec& spec, const QuotientGroup& group, double r,
                                   const LimitPoint& u, const std::vector<double>& phi, const TestFunction& f) {
  return preimage_sum<std::vector<TreeNode>>(spec, group, r, u, phi, f, [](std::vector<TreeNode>& v) {
    TreeNode n = std::move(v.back());
    v.pop_back();
    return n;
  });
}

std::vector<double> boundary_count_bfs(const SemigroupSpec& spec, const QuotientGroup& group, double r,
                                       const LimitPoint& u, const std::vector<double>& phi, const TestFunction& f) {
  return preimage_sum<std::deque<TreeNode>>(spec, group, r, u, phi, f, [](std::deque<TreeNode>& v) {
    TreeNode n = std::move(v.front());
    v.pop_front();
    return n;
  });
}

std::vector<double> ball_vector(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                const Word& base, const std::vector<double>& phi, const TestFunction& f) {
  if (phi.size() != group.size()) throw DomainError("phi must have one entry per group element");
  std::vector<double> weight(group.size(), 0.0);
  auto value = [&](const Word& w) {
    return f.is_constant() ? f.default_value : f.value(w, base);
  };
  if (radius_sq >= 1) weight[group.identity()] += value({});
  if (radius_sq > 0) {
    BallWalker walker(spec, group, base, {radius_sq});
    constexpr std::uint64_t kLimit = 100'000'000;
    for (int j = 0; j < spec.symbol_count(); ++j) {
      std::uint64_t nodes = 0;
      bool done = walker.run_subtree(j, kLimit, nodes, [&](const Word& w, std::uint32_t c, std::size_t) {
        weight[c] += value(w);
      });
      if (!done) throw ResourceError("ball enumeration exceeded its node limit");
    }
  }
  return combine(group, weight, phi);
}

RenewalSides renewal_sides(const SemigroupSpec& spec, const QuotientGroup& group, double r, const LimitPoint& u,
                           const std::vector<double>& phi, const TestFunction& f) {
  RenewalSides out;
  out.lhs = boundary_count(spec, group, r, u, phi, f);
  out.rhs.assign(phi.size(), 0.0);
  if (!(r >= 0.0)) return out;
  const FloatPoint x = u.point(spec);
  const int first = u.first_symbol();
  for (int s = 0; s < spec.symbol_count(); ++s) {
    if (!spec.admissible(s, first)) continue;
    FloatPoint y{};
    double d = 0.0;
    if (!spec.branch(s).apply_with_derivative(x, y, d)) throw DomainError("preimage hits a pole");
    LimitPoint child{u.head, u.period};
    child.head.insert(child.head.begin(), s);
    std::vector<double> term = boundary_count(spec, group, r - (-std::log(d)), child, phi, f);
    // c_q(u') acts on the value N_q(., u', phi)
    term = act(group, group.index_of(spec.generator(s)), term);
    for (std::size_t i = 0; i < term.size(); ++i) out.rhs[i] += term[i];
  }
  const double fu = f.is_constant() ? f.default_value : f.value(u.head, u.period, true);
  for (std::size_t i = 0; i < phi.size(); ++i) out.rhs[i] += fu * phi[i];
  return out;
}

RenewalSides ball_renewal_sides(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                const Word& base, const std::vector<double>& phi, const TestFunction& f) {
  RenewalSides out;
  out.lhs = ball_vector(spec, group, radius_sq, base, phi, f);
  out.rhs.assign(phi.size(), 0.0);
  const GroupElement g0 = word_to_element(base, spec);
  const Rational n0 = frobenius_norm_sq(g0).to_rational();
  for (int j = 0; j < spec.symbol_count(); ++j) {
    if (!base.empty() && !spec.admissible(j, base.front())) continue;
    Word child{j};
    child.insert(child.end(), base.begin(), base.end());
    const Rational n1 = frobenius_norm_sq(spec.generator(j) * g0).to_rational();
    std::vector<double> shifted = act(group, group.index_of(spec.generator(j)), phi);
    std::vector<double> term = ball_vector(spec, group, radius_sq * n0 / n1, child, shifted, f);
    for (std::size_t i = 0; i < term.size(); ++i) out.rhs[i] += term[i];
  }
  if (radius_sq >= 1) {
    const double fb = f.is_constant() ? f.default_value : f.value({}, base);
    for (std::size_t i = 0; i < phi.size(); ++i) out.rhs[i] += fb * phi[i];
  }
  return out;
}

RenewalReport compare_sides(const RenewalSides& sides, double tol) {
  if (sides.lhs.size() != sides.rhs.size()) throw DomainError("renewal sides differ in size");
  RenewalReport rep;
  rep.same_support = true;
  double scale = 1.0;
  for (std::size_t i = 0; i < sides.lhs.size(); ++i) {
    scale = std::max({scale, std::fabs(sides.lhs[i]), std::fabs(sides.rhs[i])});
  }
  for (std::size_t i = 0; i < sides.lhs.size(); ++i) {
    if ((sides.lhs[i] != 0.0) != (sides.rhs[i] != 0.0)) rep.same_support = false;
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::fabs(sides.lhs[i] - sides.rhs[i]));
  }
  rep.holds = rep.same_support && rep.max_discrepancy <= tol * scale;
  return rep;
}

RenewalReport renewal_check(const SemigroupSpec& spec, const QuotientGroup& group, double r, const LimitPoint& u,
                            const std::vector<double>& phi, const TestFunction& f) {
  return compare_sides(renewal_sides(spec, group, r, u, phi, f));
}

RenewalReport ball_renewal_check(const SemigroupSpec& spec, const QuotientGroup& group, const Rational& radius_sq,
                                 const Word& base, const std::vector<double>& phi, const TestFunction& f) {
  return compare_sides(ball_renewal_sides(spec, group, radius_sq, base, phi, f));
}

ExponentFit exponent_fit(const std::vector<double>& radius, const std::vector<double>& totals) {
  if (radius.size() != totals.size()) throw DomainError("radius and totals differ in length");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radius.size(); ++i) {
    if (totals[i] > 0 && radius[i] > 0) {
      xs.push_back(std::log(radius[i]));
      ys.push_back(std::log(totals[i]));
    }
  }
  const std::size_t n = xs.size();
  if (n < 5) throw DomainError("exponent fit needs at least 5 checkpoints with nonzero totals");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0)) throw DomainError("exponent fit needs distinct radii");
  ExponentFit fit;
  fit.points = n;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = ys[i] - fit.intercept - fit.slope * xs[i];
    ssr += e * e;
  }
  fit.residual = std::sqrt(ssr / static_cast<double>(n));
  fit.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  return fit;
}

ExponentFit exponent_fit(const CountLedger& ledger) {
  std::vector<double> totals;
  for (std::size_t k = 0; k < ledger.counts.size(); ++k) totals.push_back(static_cast<double>(ledger.total(k)));
  return exponent_fit(ledger.radius, totals);
}

EquidistributionReport equidistribution_report(const CountLedger& ledger) {
  if (ledger.counts.empty()) throw DomainError("ledger has no checkpoints");
  if (ledger.group_size < 2) throw DomainError("equidistribution needs a nontrivial quotient (q != 1)");
  EquidistributionReport out;
  out.radius = ledger.radius;
  for (std::size_t k = 0; k < ledger.counts.size(); ++k) {
    const auto& row = ledger.counts[k];
    const double total = static_cast<double>(ledger.total(k));
    const std::size_t a = ledger.attained(k);
    out.attained.push_back(a);
    if (a == 0) {
      out.tv_attained.push_back(std::numeric_limits<double>::quiet_NaN());
      out.tv_group.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    double tv_a = 0.0, tv_g = 0.0;
    for (std::uint64_t c : row) {
      const double p = static_cast<double>(c) / total;
      if (c > 0) tv_a += std::fabs(p - 1.0 / static_cast<double>(a));
      tv_g += std::fabs(p - 1.0 / static_cast<double>(row.size()));
    }
    out.tv_attained.push_back(0.5 * tv_a);
    out.tv_group.push_back(0.5 * tv_g);
  }
  return out;
}

namespace {

bool gaussian_less(const GaussianInteger& a, const GaussianInteger& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace

ZarembaSets zaremba_sets(const std::vector<GaussianInteger>& alphabet, const Integer& bound) {
  if (alphabet.empty()) throw DomainError("alphabet is empty");
  for (const auto& a : alphabet) {
    if (a.re() < Integer(1)) throw DomainError("digits need real part >= 1");
  }
  const Integer bound_sq = bound * bound;
  struct State {
    GaussianInteger pp, p, qp, q;
  };
  // bottom row (q_{k-1}, q_k) of g_{a_1}..g_{a_k}; |q_k| is nondecreasing in k
  std::vector<State> stack{{1, 0, 0, 1}};
  ZarembaSets out;
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    for (const auto& a : alphabet) {
      State t{s.p, s.pp + a * s.p, s.q, s.qp + a * s.q};
      if (t.q.norm() > bound_sq) continue;
      out.fractions.emplace_back(t.p, t.q);
      stack.push_back(std::move(t));
    }
  }
  auto less = [](const auto& x, const auto& y) {
    if (!(x.second == y.second)) return gaussian_less(x.second, y.second);
    return gaussian_less(x.first, y.first);
  };
  std::sort(out.fractions.begin(), out.fractions.end(), less);
  out.fractions.erase(std::unique(out.fractions.begin(), out.fractions.end()), out.fractions.end());
  for (const auto& fr : out.fractions) {
    if (out.denominators.empty() || !(out.denominators.back() == fr.second)) out.denominators.push_back(fr.second);
  }
  return out;
}

std::vector<bool> zaremba_denominators(const std::vector<GaussianInteger>& alphabet, std::uint64_t n) {
  if (alphabet.empty()) throw DomainError("alphabet is empty");
  std::vector<std::uint64_t> digits;
  for (const auto& a : alphabet) {
    if (!a.is_real() || a.re() < Integer(1)) {
      throw DomainError("density over [1, N] needs positive integer digits; use zaremba_sets");
    }
    digits.push_back(static_cast<std::uint64_t>(a.re().to_int64()));
  }
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  std::vector<bool> seen(n + 1, false);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{0, 1}};
  while (!stack.empty()) {
    auto [qp, q] = stack.back();
    stack.pop_back();
    for (std::uint64_t a : digits) {
      // q_k = a q_{k-1} + q_{k-2} increases with a
      if (a > (n - qp) / q) break;
      const std::uint64_t next = a * q + qp;
      seen[next] = true;
      stack.emplace_back(q, next);
    }
  }
  return seen;
}

ZarembaDensity zaremba_density(const std::vector<GaussianInteger>& alphabet, std::uint64_t n) {
  if (n < 1) throw DomainError("N must be >= 1");
  std::vector<bool> seen = zaremba_denominators(alphabet, n);
  ZarembaDensity out;
  out.n = n;
  out.count = static_cast<std::uint64_t>(std::count(seen.begin() + 1, seen.end(), true));
  out.ratio = static_cast<double>(out.count) / static_cast<double>(n);
  return out;
}

}  // namespace semicount

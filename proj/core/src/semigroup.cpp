#include "semicount/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "semicount/errors.hpp"

namespace semicount {

namespace {

struct CRat {
  Rational re, im;
};

CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator*(const CRat& a, const CRat& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CRat conj(const CRat& a) { return {a.re, -a.im}; }
CRat to_crat(const GaussianInteger& z) { return {z.re().to_rational(), z.im().to_rational()}; }

using CMat = std::array<CRat, 4>;  // row-major 2x2

CMat cmul(const CMat& x, const CMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

CMat adjoint(const CMat& x) { return {conj(x[0]), conj(x[2]), conj(x[1]), conj(x[3])}; }

// Hermitian form [[A, B], [conj B, C]] of the region A|z|^2 + 2 Re(conj(B) z) + C < 0.
CMat hermitian_of(const Disk& d) {
  CRat c{d.center[0], d.dim() > 1 ? d.center[1] : Rational(0)};
  Rational c2 = c.re * c.re + c.im * c.im;
  return {CRat{1, 0}, CRat{-c.re, -c.im}, CRat{-c.re, c.im}, CRat{c2 - d.radius_sq, 0}};
}

CMat inverse_matrix(const GroupElement& g) {
  GroupElement h = g.inverse();
  return {to_crat(h.at(0, 0)), to_crat(h.at(0, 1)), to_crat(h.at(1, 0)), to_crat(h.at(1, 1))};
}

// Hermitian form of g(region) for the region with form h.
CMat push_forward(const GroupElement& g, const CMat& h) {
  CMat gi = inverse_matrix(g);
  return cmul(cmul(adjoint(gi), h), gi);
}

// sphere vector (c, (1 + r^2 - |c|^2)/2, (1 - r^2 + |c|^2)/2): B(v(u), s) = r^2 - |u - c|^2
std::vector<Rational> sphere_vector(const Disk& d) {
  Rational c2 = 0;
  for (const auto& x : d.center) c2 += x * x;
  std::vector<Rational> s(d.center);
  s.push_back((1 + d.radius_sq - c2) / 2);
  s.push_back((1 - d.radius_sq + c2) / 2);
  return s;
}

std::vector<Rational> apply_matrix(const GroupElement& g, const std::vector<Rational>& v) {
  const int n = g.size();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += g.at(r, k).re().to_rational() * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

Rational lorentz(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * y[i];
  return s - x.back() * y.back();
}

bool positive_multiple(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] != 0) {
      lambda = x[i] / y[i];
      break;
    }
  }
  if (!lambda || *lambda <= 0) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != *lambda * y[i]) return false;
  }
  return true;
}

bool positive_multiple(const CMat& x, const CMat& y) {
  std::vector<Rational> a, b;
  for (int i = 0; i < 4; ++i) {
    a.push_back(x[static_cast<std::size_t>(i)].re);
    a.push_back(x[static_cast<std::size_t>(i)].im);
    b.push_back(y[static_cast<std::size_t>(i)].re);
    b.push_back(y[static_cast<std::size_t>(i)].im);
  }
  return positive_multiple(a, b);
}

bool disks_disjoint(const Disk& a, const Disk& b) {
  Rational d2 = 0;
  for (int i = 0; i < a.dim(); ++i) {
    Rational t = a.center[static_cast<std::size_t>(i)] - b.center[static_cast<std::size_t>(i)];
    d2 += t * t;
  }
  // |c_a - c_b| > r_a + r_b without square roots
  Rational e = d2 - a.radius_sq - b.radius_sq;
  return e > 0 && e * e > 4 * a.radius_sq * b.radius_sq;
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string word_str(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s + ")";
}

bool real_alphabet(const std::vector<GaussianInteger>& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(), [](const GaussianInteger& a) { return a.is_real(); });
}

void check_alphabet(const std::vector<GaussianInteger>& alphabet) {
  if (alphabet.size() < 2) throw DomainError("continued fractions alphabet needs at least 2 digits");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i].re() < Integer(1)) throw DomainError("digit " + alphabet[i].str() + " has real part < 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet[i] == alphabet[j]) throw DomainError("repeated digit " + alphabet[i].str());
    }
  }
}

// Exact sufficient conditions for g_a D^eps inside D^eps, pairwise disjoint.
std::vector<std::string> cf_violations(const std::vector<GaussianInteger>& alphabet, const Rational& eps,
                                       std::vector<std::pair<int, int>>* overlapping) {
  std::vector<std::string> out;
  if (eps <= 0 || eps >= 1) {
    out.push_back("epsilon " + rat_str(eps) + " outside (0,1)");
    return out;
  }
  const std::size_t m = alphabet.size();
  if (real_alphabet(alphabet)) {
    // g_a [eps, 1] = [1/(1+a), 1/(eps+a)]
    std::vector<std::pair<Rational, Rational>> iv;
    for (const auto& a : alphabet) {
      Rational ar = a.re().to_rational();
      Rational lo = 1 / (1 + ar), hi = 1 / (eps + ar);
      if (lo < eps || hi > 1) out.push_back("g_" + a.str() + " [eps,1] not inside [eps,1]");
      iv.emplace_back(lo, hi);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(iv[i].second < iv[j].first || iv[j].second < iv[i].first)) {
          out.push_back("digit images " + alphabet[j].str() + " and " + alphabet[i].str() + " overlap");
          if (overlapping) overlapping->emplace_back(static_cast<int>(j), static_cast<int>(i));
        }
      }
    }
    return out;
  }
  const Rational half(1, 2);
  const Rational top = half - eps / 4;
  const Rational c0 = 1 / (2 * eps);
  for (const auto& a : alphabet) {
    Rational re = a.re().to_rational(), im = a.im().to_rational();
    // (i) D^eps + a inside disk(a + 1/2, 1/2) inside {Re(1/z) >= eps} = disk(c0, c0)
    Rational dx = re + half - c0;
    if (c0 - half < 0 || dx * dx + im * im > (c0 - half) * (c0 - half)) {
      out.push_back("g_" + a.str() + " D^eps leaves Re >= eps");
    }
    // (ii) |Im(1/z)| <= 1/(2 Re z) <= 1/(2 t)
    Rational t = eps + re;
    if (1 / (2 * t) > half || 1 / (2 * t) > top) out.push_back("g_" + a.str() + " D^eps leaves Im <= 1/2 - eps/4");
  }
  // (iii) translated boxes [eps,1] x [-1/2, 1/2 - eps/4] + a pairwise disjoint
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational xi = alphabet[i].re().to_rational(), yi = alphabet[i].im().to_rational();
      Rational xj = alphabet[j].re().to_rational(), yj = alphabet[j].im().to_rational();
      bool sep_x = (1 + xi < eps + xj) || (1 + xj < eps + xi);
      bool sep_y = (top + yi < -half + yj) || (top + yj < -half + yi);
      if (!sep_x && !sep_y) {
        out.push_back("digit images " + alphabet[j].str() + " and " + alphabet[i].str() + " overlap");
        if (overlapping) overlapping->emplace_back(static_cast<int>(j), static_cast<int>(i));
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- disks

double Disk::radius() const { return std::sqrt(static_cast<double>(radius_sq)); }

FloatPoint Disk::float_center() const {
  FloatPoint p{};
  for (int i = 0; i < dim(); ++i) p[static_cast<std::size_t>(i)] = static_cast<double>(center[static_cast<std::size_t>(i)]);
  return p;
}

bool Disk::contains(const FloatPoint& x, double guard) const {
  FloatPoint c = float_center();
  double d2 = 0.0;
  for (int i = 0; i < dim(); ++i) {
    double t = x[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
    d2 += t * t;
  }
  return d2 <= static_cast<double>(radius_sq) * (1.0 + guard) + guard;
}

Disk disk_image(const GroupElement& g, const Disk& d) {
  if (d.dim() != g.boundary_dim()) throw DomainError("disk dimension does not match the group element");
  if (g.setting() == Setting::SOQ) {
    std::vector<Rational> s = apply_matrix(g, sphere_vector(d));
    const std::size_t n = s.size();
    Rational t = s[n - 2] + s[n - 1];
    if (t <= 0) throw DomainError("disk image is not a bounded ball");
    Disk out;
    for (std::size_t i = 0; i + 2 < n; ++i) out.center.push_back(s[i] / t);
    out.radius_sq = lorentz(s, s) / (t * t);
    return out;
  }
  CMat h = push_forward(g, hermitian_of(d));
  Rational a = h[0].re;
  if (a <= 0) throw DomainError("disk image is not a bounded ball");
  CRat c{-h[1].re / a, -h[1].im / a};
  Disk out;
  out.center.push_back(c.re);
  if (d.dim() > 1) out.center.push_back(c.im);
  out.radius_sq = c.re * c.re + c.im * c.im - h[3].re / a;
  return out;
}

// ---------------------------------------------------------------- spec

SemigroupSpec SemigroupSpec::schottky(std::vector<GroupElement> generators, std::vector<Disk> disks) {
  if (generators.empty()) throw DomainError("Schottky spec needs generators");
  if (disks.size() < 2 || disks.size() % 2 != 0) throw DomainError("Schottky spec needs an even number of disks >= 2");
  SemigroupSpec s;
  s.kind_ = SpecKind::Schottky;
  s.n0_ = static_cast<int>(disks.size() / 2);
  const int n = static_cast<int>(generators.size());
  if (n < s.n0_ || n > 2 * s.n0_) {
    throw DomainError("Schottky spec needs N0 <= #generators <= 2 N0 (N0 = #disks/2)");
  }
  for (const auto& g : generators) {
    if (g.setting() != generators.front().setting() || g.size() != generators.front().size()) {
      throw DomainError("Schottky generators must share one setting");
    }
  }
  const int dim = generators.front().boundary_dim();
  if (dim > kMaxBoundaryDim) throw DomainError("boundary dimension above " + std::to_string(kMaxBoundaryDim));
  for (const auto& d : disks) {
    if (d.dim() != dim) throw DomainError("disk dimension does not match the generators");
    if (d.radius_sq <= 0) throw DomainError("disk radius must be positive");
  }
  for (int j = 0; j < n - s.n0_; ++j) {
    if (!(generators[static_cast<std::size_t>(s.n0_ + j)] == generators[static_cast<std::size_t>(j)].inverse())) {
      throw DomainError("generator " + std::to_string(s.n0_ + j + 1) + " must be the inverse of generator " +
                        std::to_string(j + 1));
    }
  }
  s.generators_ = std::move(generators);
  s.disks_ = std::move(disks);
  s.finish();
  return s;
}

SemigroupSpec SemigroupSpec::continued_fractions(std::vector<GaussianInteger> alphabet, Rational epsilon) {
  check_alphabet(alphabet);
  if (epsilon <= 0 || epsilon >= 1) throw DomainError("epsilon must lie in (0,1)");
  SemigroupSpec s;
  s.kind_ = SpecKind::ContinuedFractions;
  s.alphabet_ = std::move(alphabet);
  s.epsilon_ = epsilon;
  const Setting setting = real_alphabet(s.alphabet_) ? Setting::SL2R : Setting::SL2C;
  for (const auto& a : s.alphabet_) {
    for (const auto& b : s.alphabet_) {
      // (0 1; 1 a)(0 1; 1 b) = (1 b; a ab + 1)
      s.generators_.push_back(GroupElement::sl2(setting, 1, b, a, a * b + GaussianInteger(1)));
    }
  }
  s.n0_ = s.symbol_count();
  Disk hull = s.base_hull();
  for (const auto& g : s.generators_) s.disks_.push_back(disk_image(g, hull));
  s.finish();
  return s;
}

void SemigroupSpec::finish() {
  for (const auto& g : generators_) {
    inverses_.push_back(g.inverse());
    branches_.emplace_back(g);
    inverse_branches_.emplace_back(inverses_.back());
    precise_branches_.emplace_back(g);
    precise_inverse_branches_.emplace_back(inverses_.back());
  }
}

std::pair<int, int> SemigroupSpec::digits(int j) const {
  if (kind_ != SpecKind::ContinuedFractions) throw DomainError("digits() needs a continued fractions spec");
  check_symbol(j);
  const int m = static_cast<int>(alphabet_.size());
  return {j / m, j % m};
}

Disk SemigroupSpec::base_hull() const {
  if (kind_ != SpecKind::ContinuedFractions) throw DomainError("base_hull() needs a continued fractions spec");
  Disk d;
  if (real_alphabet(alphabet_)) {
    d.center = {(1 + epsilon_) / 2};
    d.radius_sq = (1 - epsilon_) * (1 - epsilon_) / 4;
  } else {
    d.center = {Rational(1, 2), Rational(0)};
    d.radius_sq = Rational(1, 4);
  }
  return d;
}

int SemigroupSpec::pair(int j) const {
  if (kind_ != SpecKind::Schottky) return -1;
  return j < n0_ ? j + n0_ : j - n0_;
}

bool SemigroupSpec::admissible(int j, int k) const {
  if (kind_ == SpecKind::ContinuedFractions) return true;
  return k != pair(j);
}

void SemigroupSpec::check_symbol(int j) const {
  if (j < 0 || j >= symbol_count()) {
    throw DomainError("symbol " + std::to_string(j + 1) + " out of range 1.." + std::to_string(symbol_count()));
  }
}

std::string SemigroupSpec::describe() const {
  std::ostringstream os;
  if (kind_ == SpecKind::ContinuedFractions) {
    os << "continued fractions, alphabet {";
    for (std::size_t i = 0; i < alphabet_.size(); ++i) os << (i ? "," : "") << alphabet_[i].str();
    os << "}, eps " << epsilon_ << ", " << symbol_count() << " block symbols";
  } else {
    os << "Schottky, n = " << hyperbolic_dim() << ", N0 = " << n0_ << ", N1 = " << n1();
  }
  return os.str();
}

// ---------------------------------------------------------------- words

bool is_admissible(const Word& w, const SemigroupSpec& spec) {
  for (int s : w) spec.check_symbol(s);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!spec.admissible(w[i], w[i + 1])) return false;
  }
  return true;
}

bool is_cyclically_admissible(const Word& w, const SemigroupSpec& spec) {
  if (!is_admissible(w, spec)) return false;
  return w.empty() || spec.admissible(w.back(), w.front());
}

GroupElement word_to_element(const Word& w, const SemigroupSpec& spec) {
  if (!is_admissible(w, spec)) throw DomainError("inadmissible word " + word_str(w));
  const GroupElement& g0 = spec.generator(0);
  GroupElement out = GroupElement::identity(g0.setting(), g0.size());
  for (int s : w) out = out * spec.generator(s);
  return out;
}

GroupElement cocycle(const Word& w, const SemigroupSpec& spec) {
  if (!is_admissible(w, spec)) throw DomainError("inadmissible word " + word_str(w));
  const GroupElement& g0 = spec.generator(0);
  GroupElement out = GroupElement::identity(g0.setting(), g0.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * spec.generator(*it);
  return out;
}

// ---------------------------------------------------------------- validation

Rational find_trim_epsilon(const std::vector<GaussianInteger>& alphabet) {
  check_alphabet(alphabet);
  for (int k = 1023; k >= 1; --k) {
    Rational eps(k, 1024);
    if (cf_violations(alphabet, eps, nullptr).empty()) return eps;
  }
  throw DomainError("no trim parameter on the 1/1024 grid passes ping-pong");
}

PingPongReport validate_ping_pong(const SemigroupSpec& spec) {
  PingPongReport rep;
  if (spec.kind() == SpecKind::ContinuedFractions) {
    rep.violations = cf_violations(spec.alphabet(), spec.epsilon(), &rep.overlapping);
    rep.passed = rep.violations.empty();
    return rep;
  }
  const auto& disks = spec.disks();
  const int nd = static_cast<int>(disks.size());
  for (int i = 0; i < nd; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!disks_disjoint(disks[static_cast<std::size_t>(i)], disks[static_cast<std::size_t>(j)])) {
        rep.overlapping.emplace_back(j, i);
        rep.violations.push_back("disks D" + std::to_string(j + 1) + " and D" + std::to_string(i + 1) + " overlap");
      }
    }
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  for (int j = 0; j < spec.symbol_count(); ++j) {
    const GroupElement& g = spec.generator(j);
    const std::string name = "g" + std::to_string(j + 1);
    if (!is_hyperbolic(g)) rep.violations.push_back(name + " is not hyperbolic");
    const Disk& src = disks[static_cast<std::size_t>(spec.pair(j))];
    const Disk& dst = disks[static_cast<std::size_t>(j)];
    bool exact_ok;
    if (g.setting() == Setting::SOQ) {
      std::vector<Rational> s = apply_matrix(g, sphere_vector(src));
      for (auto& x : s) x = -x;
      exact_ok = positive_multiple(s, sphere_vector(dst));
    } else {
      CMat h = hermitian_of(src);
      for (auto& x : h) x = CRat{-x.re, -x.im};
      exact_ok = positive_multiple(push_forward(g, h), hermitian_of(dst));
    }
    if (!exact_ok) {
      rep.violations.push_back(name + " does not map the exterior of D" + std::to_string(spec.pair(j) + 1) +
                               " onto D" + std::to_string(j + 1));
    }
    // sampled boundary points of the source land on the boundary of the target
    const int dim = src.dim();
    FloatPoint c = src.float_center(), cd = dst.float_center();
    double r = src.radius(), rd = dst.radius();
    int bad = 0;
    for (int k = 0; k < 32; ++k) {
      FloatPoint dir{};
      double nrm = 0.0;
      if (dim == 1) {
        dir[0] = (k % 2) ? 1.0 : -1.0;
        nrm = 1.0;
      } else {
        for (int i = 0; i < dim; ++i) {
          dir[static_cast<std::size_t>(i)] = gauss(rng);
          nrm += dir[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(i)];
        }
        nrm = std::sqrt(nrm);
      }
      FloatPoint x{}, y{};
      for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + r * dir[static_cast<std::size_t>(i)] / nrm;
      if (!spec.branch(j).apply(x, y)) {
        ++bad;
        continue;
      }
      if (std::fabs(distance(y, cd, dim) - rd) > 1e-9 * std::max(1.0, rd)) ++bad;
    }
    if (bad) rep.violations.push_back(name + ": " + std::to_string(bad) + " sampled boundary points off the target circle");
  }
  rep.passed = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------- enumeration

EnumerationStats walk_words(const SemigroupSpec& spec, Extension ext, int max_length,
                            const std::function<Walk(const Word&, const GroupElement&)>& cb, const Word& root) {
  EnumerationStats st;
  const int n = spec.symbol_count();
  Word word = root;
  std::vector<GroupElement> elems{word_to_element(root, spec)};
  std::vector<int> next{0};
  const bool append = ext == Extension::Append;
  auto drop = [&] {
    if (append) {
      word.pop_back();
    } else {
      word.erase(word.begin());
    }
  };
  while (!next.empty()) {
    int& j = next.back();
    if (j >= n || static_cast<int>(word.size()) >= max_length) {
      next.pop_back();
      elems.pop_back();
      if (!next.empty()) drop();
      continue;
    }
    const int s = j++;
    if (!word.empty() && !(append ? spec.admissible(word.back(), s) : spec.admissible(s, word.front()))) continue;
    if (append) {
      word.push_back(s);
    } else {
      word.insert(word.begin(), s);
    }
    GroupElement el = append ? elems.back() * spec.generator(s) : spec.generator(s) * elems.back();
    ++st.nodes;
    Walk w = cb(word, el);
    if (w == Walk::Stop) {
      st.stopped = true;
      return st;
    }
    if (w == Walk::Descend) {
      elems.push_back(std::move(el));
      next.push_back(0);
    } else {
      drop();
    }
  }
  return st;
}

double schottky_escape_constant(const SemigroupSpec& spec) {
  if (spec.kind() != SpecKind::Schottky) throw DomainError("escape constant is defined for Schottky specs");
  const auto& disks = spec.disks();
  const int dim = spec.boundary_dim();
  struct Ball {
    std::vector<double> p;
    double rho;
  };
  std::vector<Ball> balls;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    std::vector<Rational> s = sphere_vector(disks[k]);
    double last = static_cast<double>(s.back());
    if (!(last > 0.0)) {
      throw DomainError("base point lies inside the hemisphere over D" + std::to_string(k + 1));
    }
    Ball b;
    for (int i = 0; i <= dim; ++i) b.p.push_back(static_cast<double>(s[static_cast<std::size_t>(i)]) / last);
    b.rho = disks[k].radius() / last;
    balls.push_back(std::move(b));
  }
  double c = 0.0;
  for (std::size_t a = 0; a < balls.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < balls[a].p.size(); ++i) d2 += (balls[a].p[i] - balls[b].p[i]) * (balls[a].p[i] - balls[b].p[i]);
      double gap = std::sqrt(d2) - balls[a].rho - balls[b].rho;
      if (!(gap > 0.0)) throw DomainError("hemispheres over distinct disks are not separated");
      c = std::max(c, std::log(2.0) - 2.0 * std::log(gap));
    }
  }
  return c + 1e-9;
}

double distance_for_norm_sq(const GroupElement& sample, const Integer& norm_sq) {
  double b = norm_sq.to_double();
  double ch;
  if (sample.setting() == Setting::SOQ) {
    const double n = sample.size() - 1;
    ch = std::sqrt(std::max(0.0, (b - n + 3.0) / 4.0));
  } else {
    ch = b / 2.0;
  }
  if (!std::isfinite(ch)) return 0.5 * norm_sq.log_abs() + std::log(2.0);
  return std::acosh(std::max(1.0, ch));
}

EnumerationStats enumerate_words(const SemigroupSpec& spec, const EnumerationBound& bound, const WordVisitor& visit) {
  if (!bound.max_length && !bound.max_norm_sq) throw DomainError("enumeration needs a length or norm bound");
  const int max_len = bound.max_length ? *bound.max_length : 1 << 20;
  EnumerationStats st;
  const GroupElement& g0 = spec.generator(0);
  GroupElement id = GroupElement::identity(g0.setting(), g0.size());
  auto meets = [&](const GroupElement& g) { return !bound.max_norm_sq || frobenius_norm_sq(g) <= *bound.max_norm_sq; };
  if (bound.min_length <= 0 && meets(id)) {
    ++st.visited;
    if (!visit({}, id)) {
      st.stopped = true;
      return st;
    }
  }
  double escape = 0.0, dmax = 0.0;
  const bool schottky_norm = bound.max_norm_sq && spec.kind() == SpecKind::Schottky;
  if (schottky_norm) {
    escape = schottky_escape_constant(spec);
    dmax = distance_for_norm_sq(g0, *bound.max_norm_sq);
  }
  EnumerationStats inner = walk_words(spec, Extension::Append, max_len, [&](const Word& w, const GroupElement& g) {
    bool ok = true;
    if (bound.max_norm_sq) {
      ok = frobenius_norm_sq(g) <= *bound.max_norm_sq;
      if (!ok) {
        // CF norms are monotone under extension; Schottky uses the escape bound
        if (!schottky_norm) return Walk::Prune;
        if (hyperbolic_distance(g) - escape > dmax + 1e-9 * (1.0 + dmax)) return Walk::Prune;
      }
    }
    if (ok && static_cast<int>(w.size()) >= bound.min_length) {
      ++st.visited;
      if (!visit(w, g)) return Walk::Stop;
    }
    return Walk::Descend;
  });
  st.nodes = inner.nodes;
  st.stopped = inner.stopped;
  return st;
}

BoundaryPoint symbol_anchor(const SemigroupSpec& spec, int y) {
  spec.check_symbol(y);
  return fixed_points(spec.generator(y)).attracting;
}

}  // namespace semicount

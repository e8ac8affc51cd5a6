#include "semicount/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <Eigen/Dense>

#include "semicount/errors.hpp"

namespace semicount {

ResidueMatrix project(const GroupElement& g, const ResidueRing& ring) {
  ResidueMatrix out;
  out.reserve(g.entries().size());
  for (const auto& e : g.entries()) out.push_back(ring.index_of(e));
  return out;
}

Modulus spec_modulus(const SemigroupSpec& spec, const GaussianInteger& q) {
  if (q.norm().is_zero()) throw DomainError("modulus must be nonzero");
  if (spec.setting() == Setting::SL2C) return Modulus::gaussian(q);
  if (!q.im().is_zero()) throw DomainError("Gaussian modulus " + q.str() + " for a real setting");
  return Modulus::integer(q.re());
}

std::size_t QuotientGroup::KeyHash::operator()(const ResidueMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t v : m) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

ResidueMatrix QuotientGroup::mul(const ResidueMatrix& a, const ResidueMatrix& b) const {
  const int n = size_;
  ResidueMatrix out(a.size(), ring_.zero());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::uint32_t s = ring_.zero();
      for (int k = 0; k < n; ++k) {
        s = ring_.add(s, ring_.mul(a[static_cast<std::size_t>(r * n + k)], b[static_cast<std::size_t>(k * n + c)]));
      }
      out[static_cast<std::size_t>(r * n + c)] = s;
    }
  }
  return out;
}

ResidueMatrix QuotientGroup::inv(const ResidueMatrix& a) const {
  if (setting_ != Setting::SOQ) return {a[3], ring_.neg(a[1]), ring_.neg(a[2]), a[0]};
  // J M^T J, as for the integral inverse
  const int n = size_;
  ResidueMatrix out(a.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      bool flip = (r == n - 1) != (c == n - 1);
      std::uint32_t v = a[static_cast<std::size_t>(c * n + r)];
      out[static_cast<std::size_t>(r * n + c)] = flip ? ring_.neg(v) : v;
    }
  }
  return out;
}

QuotientGroup::QuotientGroup(const std::vector<GroupElement>& generators, const Modulus& q, std::size_t cap)
    : ring_(q) {
  if (generators.empty()) throw DomainError("quotient group needs at least one generator");
  setting_ = generators.front().setting();
  size_ = generators.front().size();
  std::vector<ResidueMatrix> gens;
  for (const auto& g : generators) {
    if (g.size() != size_) throw DomainError("generators of different sizes");
    gens.push_back(project(g, ring_));
    gens.push_back(project(g.inverse(), ring_));
  }
  ResidueMatrix id(static_cast<std::size_t>(size_ * size_), ring_.zero());
  for (int i = 0; i < size_; ++i) id[static_cast<std::size_t>(i * size_ + i)] = ring_.one();
  auto add = [&](ResidueMatrix m) {
    auto [it, fresh] = index_.emplace(m, static_cast<std::uint32_t>(elements_.size()));
    if (fresh) {
      if (elements_.size() >= cap) {
        throw ResourceError("quotient group mod " + q.str() + " exceeds the cap of " + std::to_string(cap) +
                            " elements");
      }
      elements_.push_back(std::move(m));
    }
  };
  add(id);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : gens) add(mul(elements_[head], s));
  }
  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverses_[i] = index_.at(inv(elements_[i]));
}

std::optional<std::uint32_t> QuotientGroup::find(const ResidueMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t QuotientGroup::index_of(const GroupElement& g) const {
  if (g.size() != size_) throw DomainError("element size does not match the quotient group");
  auto i = find(project(g, ring_));
  if (!i) throw DomainError("reduction of " + g.str() + " is not in the quotient group");
  return *i;
}

std::uint32_t QuotientGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  return index_.at(mul(elements_.at(a), elements_.at(b)));
}

std::vector<std::uint32_t> QuotientGroup::right_table(std::uint32_t h) const {
  std::vector<std::uint32_t> out(size());
  for (std::uint32_t x = 0; x < size(); ++x) out[x] = multiply(x, h);
  return out;
}

std::vector<std::uint32_t> QuotientGroup::left_table(std::uint32_t h) const {
  std::vector<std::uint32_t> out(size());
  for (std::uint32_t x = 0; x < size(); ++x) out[x] = multiply(h, x);
  return out;
}

std::string QuotientGroup::str(std::uint32_t i) const {
  std::ostringstream os;
  const auto& m = element(i);
  os << '(';
  for (int r = 0; r < size_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < size_; ++c) {
      if (c) os << ' ';
      os << ring_.element(m[static_cast<std::size_t>(r * size_ + c)]).str();
    }
  }
  os << ')';
  return os.str();
}

QuotientGroup quotient_group(const SemigroupSpec& spec, const GaussianInteger& q, std::size_t cap) {
  return QuotientGroup(spec.generators(), spec_modulus(spec, q), cap);
}

namespace {

std::vector<Word> excursions(const SemigroupSpec& spec, int p, int y, int z) {
  if (p < 1) throw DomainError("p must be >= 1");
  spec.check_symbol(y);
  spec.check_symbol(z);
  // v = (alpha_p, ..., alpha_1) read left to right after y
  std::vector<Word> out;
  Word v;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(v.size()) == p) {
      if (spec.admissible(v.back(), z)) out.emplace_back(v.rbegin(), v.rend());
      return;
    }
    int prev = v.empty() ? y : v.back();
    for (int s = 0; s < spec.symbol_count(); ++s) {
      if (!spec.admissible(prev, s)) continue;
      v.push_back(s);
      rec();
      v.pop_back();
    }
  };
  rec();
  if (out.empty()) throw DomainError("no admissible excursion from y to z");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ReturnTrajectorySet return_trajectory_set(const SemigroupSpec& spec, int p, int y, int z) {
  ReturnTrajectorySet out;
  out.excursions = excursions(spec, p, y, z);
  std::vector<GroupElement> w, winv;
  for (const auto& a : out.excursions) {
    w.push_back(word_to_element(a, spec));
    winv.push_back(w.back().inverse());
  }
  std::unordered_set<GroupElement> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      ++out.products;
      GroupElement g = w[i] * winv[j];
      if (seen.insert(g).second) out.elements.push_back(std::move(g));
    }
  }
  return out;
}

GapReport cayley_gap(const QuotientGroup& group, const std::vector<std::uint32_t>& generators, std::size_t max_size) {
  if (generators.empty()) throw DomainError("generator set is empty");
  const std::size_t n = group.size();
  if (n > max_size) {
    throw ResourceError("group of " + std::to_string(n) + " elements exceeds the eigensolve cap of " +
                        std::to_string(max_size));
  }
  if (n < 2) throw DomainError("spectral gap needs a group with at least two elements");
  std::vector<std::uint32_t> s(generators);
  for (std::uint32_t h : generators) s.push_back(group.inverse(h));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const double w = 1.0 / static_cast<double>(s.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::uint32_t h : s) {
    auto right = group.right_table(h);
    for (std::size_t x = 0; x < n; ++x) lap(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(right[x])) -= w;
  }
  GapReport rep;
  rep.group_size = n;
  rep.generator_count = s.size();
  rep.constant_residual = (lap * Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n))).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Laplacian eigensolve failed");
  rep.lambda1 = es.eigenvalues()(0);
  rep.lambda2 = es.eigenvalues()(1);
  return rep;
}

SphereTest sphere_containment_test(const std::vector<FloatPoint>& points, int dim, double tol) {
  if (dim < 1 || dim > kMaxBoundaryDim) throw DomainError("unsupported point dimension");
  const std::size_t need = static_cast<std::size_t>(dim) + 2;
  if (points.size() < need) {
    throw DomainError("sphere test needs at least " + std::to_string(need) + " points, got " +
                      std::to_string(points.size()));
  }
  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd x(m, dim);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (int k = 0; k < dim; ++k) x(i, k) = points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  double scale = x.rowwise().norm().maxCoeff();
  SphereTest out;
  if (scale == 0.0) {
    out.contained = true;
    return out;
  }
  x /= scale;
  Eigen::MatrixXd lift(m, dim + 2);
  lift.col(0).setOnes();
  lift.middleCols(1, dim) = x;
  lift.col(dim + 1) = x.rowwise().squaredNorm();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lift);
  const auto& sv = svd.singularValues();
  out.ratio = sv(sv.size() - 1) / sv(0);
  out.contained = out.ratio < tol;
  return out;
}

std::string to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::Witnessed:
      return "density witnessed";
    case DensityVerdict::Contained:
      return "contained in a sphere";
    case DensityVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

DensityReport zariski_density_probe(const std::vector<GroupElement>& generators, int max_length,
                                    std::size_t max_elements) {
  if (generators.empty()) throw DomainError("empty generator set");
  const int dim = generators.front().boundary_dim();
  std::vector<GroupElement> letters;
  std::unordered_set<GroupElement> seen_letters;
  for (const auto& g : generators) {
    for (const auto& h : {g, g.inverse()}) {
      if (!h.is_identity() && seen_letters.insert(h).second) letters.push_back(h);
    }
  }
  std::unordered_set<GroupElement> seen;
  std::vector<GroupElement> layer{GroupElement::identity(generators.front().setting(), generators.front().size())};
  std::vector<FloatPoint> pts;
  DensityReport rep;
  auto add_point = [&](const GroupElement& g) {
    if (!is_hyperbolic(g)) return;
    ++rep.hyperbolic_elements;
    BoundaryPoint x = fixed_points(g).attracting;
    if (x.is_infinity()) return;
    FloatPoint f = x.to_float();
    for (const auto& p : pts) {
      if (distance(p, f, dim) < 1e-9) return;
    }
    pts.push_back(f);
  };
  for (int len = 1; len <= max_length && seen.size() < max_elements; ++len) {
    std::vector<GroupElement> next;
    for (const auto& w : layer) {
      for (const auto& s : letters) {
        if (seen.size() >= max_elements) break;
        GroupElement g = w * s;
        if (g.is_identity() || !seen.insert(g).second) continue;
        add_point(g);
        next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  rep.distinct_points = pts.size();
  if (pts.size() < static_cast<std::size_t>(dim) + 2) return rep;
  SphereTest t = sphere_containment_test(pts, dim);
  rep.ratio = t.ratio;
  rep.verdict = t.contained ? DensityVerdict::Contained : DensityVerdict::Witnessed;
  return rep;
}

DensityReport zariski_density_probe(const SemigroupSpec& spec, int p, int y, int z) {
  return zariski_density_probe(return_trajectory_set(spec, p, y, z).elements);
}

GaussianInteger trace_case_formula(int c, const GaussianInteger& a, const GaussianInteger& b) {
  const GaussianInteger two(2), four(4);
  GaussianInteger d = a - b;
  GaussianInteger d2 = d * d;
  GaussianInteger ab = a * b;
  switch (c) {
    case 1:
      return d2 + two;
    case 2:
      return d2 * d2 + (ab * ab + four) * d2 + two;
    case 3:
      return -((ab * ab + four * ab + four) * d2) + two;
    case 4:
      return two * a * a * a * b - a * a * a * a - ab * ab + two;
    default:
      throw DomainError("trace case must be 1..4");
  }
}

GroupElement trace_case_element(int c, const GaussianInteger& a, const GaussianInteger& b) {
  Setting s = a.im().is_zero() && b.im().is_zero() ? Setting::SL2R : Setting::SL2C;
  // g_x g_y = (1 y; x xy+1); the single letters have determinant -1
  auto block = [&](const GaussianInteger& x, const GaussianInteger& y) {
    return GroupElement::sl2(s, 1, y, x, x * y + GaussianInteger(1));
  };
  switch (c) {
    case 1:
      return block(a, a) * block(b, b).inverse();
    case 2:
      return block(a, a) * block(a, a) * (block(b, b) * block(b, b)).inverse();
    case 3:
      return block(a, b) * block(a, b) * (block(b, a) * block(b, a)).inverse();
    case 4:
      return block(a, a) * block(a, a) * (block(a, b) * block(a, b)).inverse();
    default:
      throw DomainError("trace case must be 1..4");
  }
}

TraceWitness trace_field_witness(const SemigroupSpec& spec, int p, int y, int z) {
  if (spec.kind() != SpecKind::ContinuedFractions) throw DomainError("trace field witness needs a CF spec");
  const auto& alpha = spec.alphabet();
  bool real = std::all_of(alpha.begin(), alpha.end(), [](const GaussianInteger& a) { return a.im().is_zero(); });
  if (real) throw DomainError("alphabet is real: the trace field is real");
  if (p < 1) throw DomainError("p must be >= 1");
  spec.check_symbol(y);
  spec.check_symbol(z);
  const int m = static_cast<int>(alpha.size());
  auto sym = [&](int i, int j) { return i * m + j; };
  for (int c = 1; c <= 4; ++c) {
    const int head = c == 1 ? 1 : 2;
    if (p < head) break;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const GaussianInteger& a = alpha[static_cast<std::size_t>(i)];
        const GaussianInteger& b = alpha[static_cast<std::size_t>(j)];
        GaussianInteger t = trace_case_formula(c, a, b);
        if (t.im().is_zero()) continue;
        Word w1, w2;
        switch (c) {
          case 1:
            w1 = {sym(i, i)};
            w2 = {sym(j, j)};
            break;
          case 2:
            w1 = {sym(i, i), sym(i, i)};
            w2 = {sym(j, j), sym(j, j)};
            break;
          case 3:
            w1 = {sym(i, j), sym(i, j)};
            w2 = {sym(j, i), sym(j, i)};
            break;
          default:
            w1 = {sym(i, i), sym(i, i)};
            w2 = {sym(i, j), sym(i, j)};
        }
        // a common tail cancels in W(alpha) W(alpha~)^{-1}
        while (static_cast<int>(w1.size()) < p) {
          w1.push_back(sym(i, i));
          w2.push_back(sym(i, i));
        }
        Word seq1{y}, seq2{y};
        seq1.insert(seq1.end(), w1.rbegin(), w1.rend());
        seq2.insert(seq2.end(), w2.rbegin(), w2.rend());
        seq1.push_back(z);
        seq2.push_back(z);
        if (!is_admissible(seq1, spec) || !is_admissible(seq2, spec)) continue;
        TraceWitness out{word_to_element(w1, spec) * word_to_element(w2, spec).inverse(), c, a, b, t, w1, w2};
        out.trace = out.element.trace();
        if (!(out.trace == t)) {
          throw NumericError("case " + std::to_string(c) + " formula disagrees with the matrix trace");
        }
        return out;
      }
    }
  }
  throw DomainError("no case element with a non-real trace");
}

}  // namespace semicount

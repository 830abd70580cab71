#include "acedag/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acedag/indexsets.hpp"

namespace acedag {

namespace {

constexpr double kPi = std::numbers::pi;

int sh_slot(int l, int m) { return l * l + l + m; }

bool has_radius(Group g) { return g != Group::T; }

}  // namespace

int coordinate_count(Group g) {
  switch (g) {
    case Group::T:
      return 1;
    case Group::SO2:
      return 2;
    case Group::O3:
      return 3;
    case Group::O3F:
      return 4;
  }
  return 0;
}

void validate_config(const ParticleConfig& config) {
  if (config.coords.cols() != coordinate_count(config.group)) {
    throw std::domain_error("configuration for group " + std::string(group_name(config.group)) + " needs " +
                            std::to_string(coordinate_count(config.group)) + " coordinates per particle");
  }
  if (!config.coords.allFinite()) throw std::domain_error("non-finite particle coordinate");
  if (has_radius(config.group) && config.size() > 0) {
    const auto r = config.coords.col(0);
    if (r.minCoeff() < 0.0 || r.maxCoeff() > 1.0) throw std::domain_error("radius outside [0, 1]");
  }
  if (config.group == Group::O3F && config.size() > 0) {
    const auto mu = config.coords.col(3);
    if (mu.minCoeff() < -1.0 || mu.maxCoeff() > 1.0) throw std::domain_error("feature mu outside [-1, 1]");
  }
}

double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double radial_basis(int n, double r) { return chebyshev_t(n, 2.0 * r - 1.0); }

Eigen::VectorXcd spherical_harmonics(int lmax, double theta, double phi) {
  const auto size = static_cast<Eigen::Index>((lmax + 1) * (lmax + 1));
  Eigen::VectorXcd y(size);
  if (lmax < 0) return y;
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // normalized associated Legendre functions p(l, m), m >= 0, upward in l
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(lmax + 1, lmax + 1);
  p(0, 0) = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= lmax; ++m) p(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * p(m - 1, m - 1);
  for (int m = 0; m < lmax; ++m) p(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * p(m, m);
  for (int m = 0; m <= lmax; ++m) {
    for (int l = m + 2; l <= lmax; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
      const double b = std::sqrt((static_cast<double>(l - 1) * (l - 1) - static_cast<double>(m) * m) /
                                 (4.0 * (l - 1) * (l - 1) - 1.0));
      p(l, m) = a * (x * p(l - 1, m) - b * p(l - 2, m));
    }
  }
  for (int l = 0; l <= lmax; ++l) {
    for (int m = 0; m <= l; ++m) {
      const Complex v = p(l, m) * std::polar(1.0, m * phi);
      y(sh_slot(l, m)) = v;
      if (m > 0) y(sh_slot(l, -m)) = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(v);
    }
  }
  return y;
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("spherical_harmonic requires |m| <= l");
  return spherical_harmonics(l, theta, phi)(sh_slot(l, m));
}

Complex one_particle(Group g, const OneParticleIndex& k, const Eigen::Ref<const Eigen::RowVectorXd>& coords) {
  if (coords.size() != coordinate_count(g)) throw std::domain_error("wrong number of particle coordinates");
  if (!coords.allFinite()) throw std::domain_error("non-finite particle coordinate");
  if (has_radius(g) && (coords(0) < 0.0 || coords(0) > 1.0)) throw std::domain_error("radius outside [0, 1]");
  switch (g) {
    case Group::T:
      return std::polar(1.0, k.m * coords(0));
    case Group::SO2:
      return radial_basis(k.n, coords(0)) * std::polar(1.0, -k.m * coords(1));
    case Group::O3:
      return radial_basis(k.n, coords(0)) * spherical_harmonic(k.l, k.m, coords(1), coords(2));
    case Group::O3F:
      if (coords(3) < -1.0 || coords(3) > 1.0) throw std::domain_error("feature mu outside [-1, 1]");
      return radial_basis(k.n, coords(0)) * spherical_harmonic(k.l, k.m, coords(1), coords(2)) *
             chebyshev_t(k.f, coords(3));
  }
  return {};
}

PooledBasis::PooledBasis(std::vector<OneParticleIndex> indices, Eigen::VectorXcd values)
    : indices_(std::move(indices)), values_(std::move(values)) {
  if (static_cast<Eigen::Index>(indices_.size()) != values_.size()) {
    throw std::invalid_argument("PooledBasis: index and value counts differ");
  }
  if (!std::is_sorted(indices_.begin(), indices_.end())) throw std::invalid_argument("PooledBasis: unsorted indices");
}

Complex PooledBasis::at(const OneParticleIndex& k) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), k);
  if (it == indices_.end() || *it != k) {
    throw MissingSeedError("no pooled value for one-particle index (n=" + std::to_string(k.n) +
                           ", l=" + std::to_string(k.l) + ", m=" + std::to_string(k.m) + ", f=" + std::to_string(k.f) +
                           ")");
  }
  return values_(std::distance(indices_.begin(), it));
}

PooledBasis pool(Group g, const DegreeSpec& spec, const ParticleConfig& config) {
  if (config.group != g) throw std::invalid_argument("configuration group does not match");
  validate_config(config);
  auto indices = one_particle_indices(g, spec.D);
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(indices.size()));
  const int D = std::max(spec.D, 0);

  Eigen::VectorXd radial(D + 1);
  Eigen::VectorXd feature(D + 1);
  Eigen::VectorXcd phase(2 * D + 1);
  Eigen::VectorXcd ylm;
  for (Eigen::Index j = 0; j < config.size(); ++j) {
    const auto row = config.coords.row(j);
    switch (g) {
      case Group::T:
        for (int m = -D; m <= D; ++m) phase(m + D) = std::polar(1.0, m * row(0));
        break;
      case Group::SO2:
        for (int n = 0; n <= D; ++n) radial(n) = radial_basis(n, row(0));
        for (int m = -D; m <= D; ++m) phase(m + D) = std::polar(1.0, -m * row(1));
        break;
      case Group::O3F:
        for (int f = 0; f <= D; ++f) feature(f) = chebyshev_t(f, row(3));
        [[fallthrough]];
      case Group::O3:
        for (int n = 0; n <= D; ++n) radial(n) = radial_basis(n, row(0));
        ylm = spherical_harmonics(D, row(1), row(2));
        break;
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      const auto& k = indices[i];
      Complex v;
      switch (g) {
        case Group::T:
          v = phase(k.m + D);
          break;
        case Group::SO2:
          v = radial(k.n) * phase(k.m + D);
          break;
        case Group::O3:
          v = radial(k.n) * ylm(sh_slot(k.l, k.m));
          break;
        case Group::O3F:
          v = radial(k.n) * ylm(sh_slot(k.l, k.m)) * feature(k.f);
          break;
      }
      values(static_cast<Eigen::Index>(i)) += v;
    }
  }
  return PooledBasis(std::move(indices), std::move(values));
}

namespace {

void fill_seeds(const EvalGraph& graph, const PooledBasis& pooled, Eigen::Ref<Eigen::VectorXcd> out) {
  const auto& nodes = graph.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].tuple.order() == 1) out(static_cast<Eigen::Index>(i)) = pooled.at(nodes[i].tuple[0]);
  }
}

}  // namespace

Eigen::VectorXcd eval_graph(const EvalGraph& graph, const PooledBasis& pooled, std::size_t* products) {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(graph.size()));
  fill_seeds(graph, pooled, values);
  propagate_products(graph, values);
  if (products) {
    *products = static_cast<std::size_t>(
        std::count_if(graph.nodes().begin(), graph.nodes().end(), [](const GraphNode& n) { return n.parents.has_value(); }));
  }
  return values;
}

Eigen::MatrixXcd eval_graph_batch(const EvalGraph& graph, const std::vector<PooledBasis>& pooled) {
  Eigen::MatrixXcd values(static_cast<Eigen::Index>(graph.size()), static_cast<Eigen::Index>(pooled.size()));
  for (std::size_t c = 0; c < pooled.size(); ++c) fill_seeds(graph, pooled[c], values.col(static_cast<Eigen::Index>(c)));
  propagate_products(graph, values);
  return values;
}

Complex naive_eval(const BasisTuple& t, const PooledBasis& pooled) {
  Complex v = 1.0;
  for (const auto& k : t) v *= pooled.at(k);
  return v;
}

Complex eval_model(const EvalGraph& graph, const CoefficientVector& coeffs, const ParticleConfig& config,
                   ModelOptions options) {
  const auto& meta = graph.meta();
  std::vector<std::pair<NodeId, Complex>> resolved;
  resolved.reserve(coeffs.size());
  for (const auto& [tuple, c] : coeffs) {
    const auto id = graph.find(tuple);
    if (!id) throw UnknownTupleError("coefficient for tuple [" + format_tuple(tuple, meta.group) + "] not in graph");
    if (!graph.is_target(tuple)) {
      throw std::invalid_argument("coefficient for non-target tuple [" + format_tuple(tuple, meta.group) + "]");
    }
    resolved.emplace_back(*id, c);
  }
  const auto values = eval_graph(graph, pool(meta.group, meta.spec, config));
  Complex phi = 0.0;
  for (const auto& [id, c] : resolved) phi += c * values(id);
  return options.real_part ? Complex(phi.real(), 0.0) : phi;
}

namespace {

double wrap_angle(double a) {
  const double r = std::fmod(a, 2.0 * kPi);
  return r < 0 ? r + 2.0 * kPi : r;
}

ParticleConfig rotated(const ParticleConfig& config, double alpha) {
  ParticleConfig out = config;
  const int col = config.group == Group::T ? 0 : (config.group == Group::SO2 ? 1 : 2);
  for (Eigen::Index j = 0; j < out.size(); ++j) out.coords(j, col) = wrap_angle(out.coords(j, col) + alpha);
  return out;
}

ParticleConfig inverted(const ParticleConfig& config) {
  ParticleConfig out = config;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    out.coords(j, 1) = kPi - out.coords(j, 1);
    out.coords(j, 2) = wrap_angle(out.coords(j, 2) + kPi);
  }
  return out;
}

double target_deviation(const EvalGraph& graph, const Eigen::VectorXcd& base, const Eigen::VectorXcd& moved) {
  double worst = 0.0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& node = graph.nodes()[i];
    if (!graph.is_target(node.tuple)) continue;
    const auto id = static_cast<Eigen::Index>(i);
    worst = std::max(worst, std::abs(moved(id) - base(id)) / (1.0 + std::abs(base(id))));
  }
  return worst;
}

double control_deviation(const BasisTuple& t, const PooledBasis& base, const PooledBasis& moved) {
  const Complex v = naive_eval(t, base);
  const Complex w = naive_eval(t, moved);
  const double scale = std::abs(v);
  return scale > 0.0 ? std::abs(w - v) / scale : 0.0;
}

}  // namespace

InvarianceReport invariance_check(const EvalGraph& graph, const ParticleConfig& config, int trials,
                                  std::uint64_t seed) {
  const auto& meta = graph.meta();
  if (config.group != meta.group) throw std::invalid_argument("configuration group does not match graph");
  InvarianceReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

  const auto base_pool = pool(meta.group, meta.spec, config);
  const auto base = eval_graph(graph, base_pool);
  const bool o3_like = meta.group == Group::O3 || meta.group == Group::O3F;

  for (int t = 0; t < trials; ++t) {
    const auto moved = eval_graph(graph, pool(meta.group, meta.spec, rotated(config, angle(rng))));
    report.rotation_deviation = std::max(report.rotation_deviation, target_deviation(graph, base, moved));
  }
  if (o3_like) {
    const auto moved = eval_graph(graph, pool(meta.group, meta.spec, inverted(config)));
    report.inversion_deviation = target_deviation(graph, base, moved);
  }

  // Control: [k, k] with m = 1 picks up e^{2i alpha}; at alpha = pi/2 it flips
  // sign. For O3/O3F an odd-l singleton flips sign under inversion.
  if (meta.spec.D >= 1) {
    OneParticleIndex k;
    switch (meta.group) {
      case Group::T:
        k = torus_index(1);
        break;
      case Group::SO2:
        k = so2_index(0, 1);
        break;
      case Group::O3:
        k = o3_index(0, 1, 1);
        break;
      case Group::O3F:
        k = o3f_index(0, 1, 1, 0);
        break;
    }
    const BasisTuple pair{k, k};
    const auto turned = pool(meta.group, meta.spec, rotated(config, kPi / 2));
    report.control_deviation = control_deviation(pair, base_pool, turned);
    report.control_tuple = format_tuple(pair, meta.group);
    if (o3_like) {
      k.m = 0;
      const BasisTuple odd{k};
      const auto flipped = pool(meta.group, meta.spec, inverted(config));
      report.control_deviation = std::min(report.control_deviation, control_deviation(odd, base_pool, flipped));
      report.control_tuple += " | " + format_tuple(odd, meta.group);
    }
  }
  return report;
}

ParticleConfig random_config(Group g, int J, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ParticleConfig config;
  config.group = g;
  config.coords.resize(J, coordinate_count(g));
  for (int j = 0; j < J; ++j) {
    switch (g) {
      case Group::T:
        config.coords(j, 0) = 2.0 * kPi * unit(rng);
        break;
      case Group::SO2:
        config.coords(j, 0) = unit(rng);
        config.coords(j, 1) = 2.0 * kPi * unit(rng);
        break;
      case Group::O3F:
        config.coords(j, 3) = 2.0 * unit(rng) - 1.0;
        [[fallthrough]];
      case Group::O3:
        config.coords(j, 0) = unit(rng);
        config.coords(j, 1) = std::acos(2.0 * unit(rng) - 1.0);
        config.coords(j, 2) = 2.0 * kPi * unit(rng);
        break;
    }
  }
  return config;
}

}  // namespace acedag

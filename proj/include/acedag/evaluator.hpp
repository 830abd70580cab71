#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "acedag/core.hpp"
#include "acedag/errors.hpp"
#include "acedag/graph.hpp"

namespace acedag {

using Complex = std::complex<double>;

/// Coordinates per particle: theta (T); r, theta (SO2); r, theta, phi (O3);
/// r, theta, phi, mu (O3F). theta is the polar angle for O3/O3F.
int coordinate_count(Group g);

/// A multiset of particles stored as a J x coordinate_count(group) matrix.
struct ParticleConfig {
  Group group = Group::T;
  Eigen::MatrixXd coords;

  Eigen::Index size() const { return coords.rows(); }
};

/// Throws std::domain_error unless every coordinate is finite, r in [0, 1]
/// and mu in [-1, 1].
void validate_config(const ParticleConfig& config);

/// Chebyshev polynomial of the first kind.
double chebyshev_t(int n, double x);

/// R_n(r) = T_n(2r - 1) on [0, 1].
double radial_basis(int n, double r);

/// Orthonormal complex spherical harmonic with Condon-Shortley phase.
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// Y_l^m for all l <= lmax, stored at position l*l + l + m.
Eigen::VectorXcd spherical_harmonics(int lmax, double theta, double phi);

/// phi_k at one particle: e^{i m theta} (T), R_n(r) e^{-i m theta} (SO2),
/// R_n(r) Y_l^m (O3), R_n(r) Y_l^m T_f(mu) (O3F).
Complex one_particle(Group g, const OneParticleIndex& k, const Eigen::Ref<const Eigen::RowVectorXd>& coords);

/// Pooled one-particle features A_k = sum_j phi_k(r_j), aligned with a sorted
/// list of indices.
class PooledBasis {
 public:
  PooledBasis(std::vector<OneParticleIndex> indices, Eigen::VectorXcd values);

  const std::vector<OneParticleIndex>& indices() const { return indices_; }
  const Eigen::VectorXcd& values() const { return values_; }

  /// Throws MissingSeedError if `k` was not pooled.
  Complex at(const OneParticleIndex& k) const;

 private:
  std::vector<OneParticleIndex> indices_;
  Eigen::VectorXcd values_;
};

/// A_k for every one-particle index with element degree <= spec.D.
PooledBasis pool(Group g, const DegreeSpec& spec, const ParticleConfig& config);

/// Seeds take their pooled values; every other node is the product of its
/// parents. Works on a vector (one configuration) or on a nodes x batch
/// matrix whose seed rows are already filled.
template <typename Derived>
void propagate_products(const EvalGraph& graph, Eigen::MatrixBase<Derived>& values) {
  const auto& nodes = graph.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].parents) continue;
    const auto [a, b] = *nodes[i].parents;
    values.row(static_cast<Eigen::Index>(i)) = values.row(a).cwiseProduct(values.row(b));
  }
}

/// Node values indexed by node id. If `products` is given it receives the
/// number of complex multiplications performed.
Eigen::VectorXcd eval_graph(const EvalGraph& graph, const PooledBasis& pooled, std::size_t* products = nullptr);

/// Node values for many configurations at once, one column per configuration.
Eigen::MatrixXcd eval_graph_batch(const EvalGraph& graph, const std::vector<PooledBasis>& pooled);

/// Direct product of pooled features over the tuple.
Complex naive_eval(const BasisTuple& t, const PooledBasis& pooled);

using CoefficientVector = std::vector<std::pair<BasisTuple, Complex>>;

struct ModelOptions {
  /// Return Re(phi); gives invariance under reflections for T/SO2.
  bool real_part = false;
};

/// sum_k c_k A_k over the graph. Throws UnknownTupleError for a key that is
/// not a graph node and std::invalid_argument for a key that is a node but
/// not a target.
Complex eval_model(const EvalGraph& graph, const CoefficientVector& coeffs, const ParticleConfig& config,
                   ModelOptions options = {});

struct InvarianceReport {
  int trials = 0;
  /// max over trials and target nodes of |v' - v| / (1 + |v|) under a global
  /// rotation (T/SO2) or a rotation about z (O3/O3F)
  double rotation_deviation = 0.0;
  /// same under point inversion; O3/O3F only
  double inversion_deviation = 0.0;
  /// |v' - v| / |v| for a non-invariant control tuple; smallest over the
  /// applicable transformations
  double control_deviation = 0.0;
  std::string control_tuple;
};

InvarianceReport invariance_check(const EvalGraph& graph, const ParticleConfig& config, int trials,
                                  std::uint64_t seed);

/// Uniformly random configuration of J particles inside the valid domain.
ParticleConfig random_config(Group g, int J, std::mt19937_64& rng);

}  // namespace acedag

#pragma once

#include <span>
#include <vector>

#include "algcon/graph.hpp"

namespace algcon {

/// Shared numeric tolerances.
namespace tol {
inline constexpr double kMultiplicity = 1e-7;  // eigenvalues this close count as one repeated value
inline constexpr double kCompare = 1e-8;       // slack for "<=" verdicts on alpha
inline constexpr double kEquality = 1e-6;      // classification of alpha ties
inline constexpr double kStrict = 1e-9;        // margin for ">" claims
}  // namespace tol

/// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  static SymMatrix diagonal(std::span<const double> d);

  int size() const noexcept { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  double max_asymmetry() const;
  double frobenius_norm() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  int n_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // column j (stride n) belongs to eigenvalues[j]; empty if not requested
  int sweeps = 0;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  std::vector<double> vector(int j) const;
  /// Second-smallest eigenvalue.
  double alpha() const { return eigenvalues[eigenvalues.size() - 2]; }
};

struct EigOptions {
  double tolerance = 1e-12;  // stop when off-diagonal Frobenius norm <= tolerance * ||m||_F
  int max_sweeps = 100;
  bool vectors = true;
};

/// Cyclic Jacobi eigensolver. Throws NumericalFailure on asymmetric input (> 1e-12)
/// or when max_sweeps is exhausted.
Spectrum eig_sym(const SymMatrix& m, EigOptions options = {});

SymMatrix laplacian(const Graph& g);

/// Laplacian eigenvalues, descending, without eigenvectors.
std::vector<double> laplacian_eigenvalues(const Graph& g);
Spectrum laplacian_spectrum(const Graph& g);

/// Second-smallest Laplacian eigenvalue. Exactly 0 for disconnected graphs. Requires n >= 2.
double algebraic_connectivity(const Graph& g);

/// Largest Laplacian eigenvalue.
double lambda_max(const Graph& g);

struct FiedlerVector {
  std::vector<double> values;  // unit norm, orthogonal to the all-ones vector
  double alpha = 0.0;
  int multiplicity = 1;        // eigenvalues within tol::kMultiplicity of alpha

  bool simple() const noexcept { return multiplicity == 1; }
};

/// Fiedler vector of a connected graph, with the first coordinate of magnitude > 1e-9 made positive.
FiedlerVector fiedler_vector(const Graph& g);

struct ComplementAlphaCheck {
  double alpha = 0.0;           // alpha(G)
  double via_complement = 0.0;  // n - lambda_max(complement(G))
};

ComplementAlphaCheck complement_alpha_check(const Graph& g);

}  // namespace algcon

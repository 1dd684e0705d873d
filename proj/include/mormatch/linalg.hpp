#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace mormatch {

using Complex = std::complex<double>;

/// Render a double with 17 significant digits (lossless round-trip).
std::string fmt17(double value);

/// Kronecker product of two dense matrices.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Numerical rank: number of singular values above tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Orthonormal basis of the column space of m (empty matrix for rank 0).
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Orthonormal basis of the right null space of m.
Eigen::MatrixXd null_basis(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Orthonormal basis of span(u) ∩ span(v); u, v orthonormal bases.
Eigen::MatrixXd intersect_subspaces(const Eigen::MatrixXd& u,
                                    const Eigen::MatrixXd& v,
                                    double tol = 1e-9);

/// Monic polynomial with the given roots, ascending coefficients
/// [c0, c1, ..., c_{n-1}] with the leading 1 implicit.
Eigen::VectorXcd poly_from_roots(const std::vector<Complex>& roots);

/// Real coefficients of poly_from_roots for a conjugate-closed root set.
/// Throws NotConjugateClosed if imaginary residue exceeds tol.
Eigen::VectorXd real_poly_from_roots(const std::vector<Complex>& roots,
                                     double tol = 1e-8);

/// Bottom-row companion matrix of the monic polynomial s^n + a_{n-1}s^{n-1}
/// + ... + a_0: ones on the superdiagonal, -a on the last row.
Eigen::MatrixXd companion_matrix(const Eigen::VectorXd& ascending_coeffs);

/// Minimum pairwise distance between two spectra.
double spectra_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// Relative disjointness test used before every Sylvester-type solve.
bool spectra_disjoint(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                      double rel_tol = 1e-8);

/// Linear solve with one step of iterative refinement; throws
/// IllConditioned when the LU condition estimate exceeds cond_limit.
Eigen::VectorXd solve_refined(const Eigen::MatrixXd& a,
                              const Eigen::VectorXd& b,
                              double cond_limit = 1e12);
Eigen::MatrixXcd solve_refined(const Eigen::MatrixXcd& a,
                               const Eigen::MatrixXcd& b,
                               double cond_limit = 1e14);

} // namespace mormatch

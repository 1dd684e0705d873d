#pragma once

#include "mormatch/linalg.hpp"

#include <Eigen/Dense>
#include <vector>

namespace mormatch {

/// Dense single-input single-output state-space system
///   x' = A x + B u,  y = C x.
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;

    StateSpace() = default;
    StateSpace(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::RowVectorXd c);

    int order() const { return static_cast<int>(A.rows()); }
};

/// Moments eta_0(s*), ..., eta_k(s*) of one system at one point.
struct MomentTable {
    Complex point;
    std::vector<Complex> values;
    int order = 0;
};

/// Strictly proper rational function with monic denominator,
///   (b_{r-1} s^{r-1} + ... + b_0) / (s^r + a_{r-1} s^{r-1} + ... + a_0).
/// Coefficients are stored ascending; the leading 1 is implicit.
struct RationalTF {
    Eigen::VectorXd numerator;
    Eigen::VectorXd denominator;

    RationalTF() = default;
    RationalTF(Eigen::VectorXd num, Eigen::VectorXd den);

    int degree() const { return static_cast<int>(denominator.size()); }
};

/// Transfer function value C (sI - A)^{-1} B by one linear solve.
Complex eval_tf(const StateSpace& sys, Complex s);

/// Moment of order k at s*: C (s*I - A)^{-(k+1)} B via k+1 linear solves.
Complex moment(const StateSpace& sys, Complex s_star, int k);

/// Taylor coefficients c_0..c_kmax of W(s) around 0; c_j = (-1)^j eta_j(0).
Eigen::VectorXd taylor_coeffs_at_zero(const StateSpace& sys, int kmax);

/// Eigenvalues with multiplicity.
Eigen::VectorXcd spectrum(const Eigen::MatrixXd& m);

/// Kalman controllability and observability rank tests at tolerance tol.
bool is_minimal(const StateSpace& sys, double tol = 1e-9);

/// Controllable companion realization of a rational transfer function.
StateSpace companion_realization(const RationalTF& tf);

/// Direct evaluation of a RationalTF (used to cross-check realizations).
Complex eval_rational(const RationalTF& tf, Complex s);

/// Collapse a numerically-real complex value, keeping it complex otherwise.
Complex tidy_complex(Complex z, double tol = 1e-10);

} // namespace mormatch

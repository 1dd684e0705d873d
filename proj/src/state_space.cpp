#include "mormatch/state_space.hpp"

#include "mormatch/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <sstream>

namespace mormatch {

namespace {

// Shared resolvent factorization: LU of (sI - A) with a singularity guard.
Eigen::PartialPivLU<Eigen::MatrixXcd> resolvent_lu(const StateSpace& sys, Complex s)
{
    const Eigen::Index n = sys.A.rows();
    Eigen::MatrixXcd shifted = -sys.A.cast<Complex>();
    shifted.diagonal().array() += s;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    if (!(lu.rcond() > 1e-13)) {
        std::ostringstream msg;
        msg << "resolvent (sI - A) is numerically singular at s = " << s;
        const Eigen::VectorXcd eigs = spectrum(sys.A);
        Eigen::Index nearest = 0;
        (eigs.array() - s).abs().minCoeff(&nearest);
        msg << " (nearest eigenvalue " << eigs(nearest) << ")";
        fail(ErrorCode::SingularResolvent, msg.str());
    }
    (void)n;
    return lu;
}

} // namespace

StateSpace::StateSpace(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::RowVectorXd c)
    : A(std::move(a)), B(std::move(b)), C(std::move(c))
{
    if (A.rows() != A.cols() || B.size() != A.rows() || C.size() != A.rows() ||
        A.rows() < 1)
        fail(ErrorCode::DimensionMismatch,
             "state-space dimensions inconsistent: A is " + std::to_string(A.rows()) +
                 "x" + std::to_string(A.cols()) + ", B has " + std::to_string(B.size()) +
                 " rows, C has " + std::to_string(C.size()) + " columns");
}

RationalTF::RationalTF(Eigen::VectorXd num, Eigen::VectorXd den)
    : numerator(std::move(num)), denominator(std::move(den))
{
    if (denominator.size() < 1)
        fail(ErrorCode::BadDegree, "rational function must have degree >= 1");
    if (numerator.size() != denominator.size())
        fail(ErrorCode::BadDegree,
             "numerator has " + std::to_string(numerator.size()) +
                 " coefficients, expected " + std::to_string(denominator.size()));
}

Complex eval_tf(const StateSpace& sys, Complex s)
{
    auto lu = resolvent_lu(sys, s);
    const Eigen::VectorXcd z = lu.solve(sys.B.cast<Complex>());
    return (sys.C.cast<Complex>() * z).value();
}

Complex moment(const StateSpace& sys, Complex s_star, int k)
{
    auto lu = resolvent_lu(sys, s_star);
    Eigen::VectorXcd z = sys.B.cast<Complex>();
    for (int j = 0; j <= k; ++j) z = lu.solve(z);
    return (sys.C.cast<Complex>() * z).value();
}

Eigen::VectorXd taylor_coeffs_at_zero(const StateSpace& sys, int kmax)
{
    auto lu = resolvent_lu(sys, Complex(0.0, 0.0));
    Eigen::VectorXd coeffs(kmax + 1);
    Eigen::VectorXcd z = sys.B.cast<Complex>();
    double sign = 1.0;
    for (int j = 0; j <= kmax; ++j) {
        z = lu.solve(z);
        coeffs(j) = sign * (sys.C.cast<Complex>() * z).value().real();
        sign = -sign;
    }
    return coeffs;
}

Eigen::VectorXcd spectrum(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols())
        fail(ErrorCode::DimensionMismatch, "spectrum requires a square matrix");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::ConvergenceFailure, "dense eigensolver did not converge");
    return solver.eigenvalues();
}

bool is_minimal(const StateSpace& sys, double tol)
{
    const Eigen::Index n = sys.A.rows();
    Eigen::MatrixXd ctrb(n, n), obsv(n, n);
    Eigen::VectorXd col = sys.B;
    Eigen::RowVectorXd row = sys.C;
    for (Eigen::Index i = 0; i < n; ++i) {
        ctrb.col(i) = col;
        obsv.row(i) = row;
        col = sys.A * col;
        row = row * sys.A;
    }
    return numerical_rank(ctrb, tol) == n && numerical_rank(obsv, tol) == n;
}

StateSpace companion_realization(const RationalTF& tf)
{
    const int r = tf.degree();
    Eigen::MatrixXd f = companion_matrix(tf.denominator);
    Eigen::VectorXd g = Eigen::VectorXd::Unit(r, r - 1);
    Eigen::RowVectorXd h = tf.numerator.transpose();
    return StateSpace(std::move(f), std::move(g), std::move(h));
}

Complex eval_rational(const RationalTF& tf, Complex s)
{
    const int r = tf.degree();
    Complex num = 0.0, den = 1.0; // implicit leading 1
    for (int j = r - 1; j >= 0; --j) {
        num = num * s + tf.numerator(j);
        den = den * s + tf.denominator(j);
    }
    // den currently equals s^r + ... evaluated by Horner with leading 1
    return num / den;
}

Complex tidy_complex(Complex z, double tol)
{
    if (std::abs(z.imag()) < tol) return Complex(z.real(), 0.0);
    return z;
}

} // namespace mormatch

#pragma once

#include <vector>

namespace hd {

/// Rising factorial x(x+1)...(x+k-1); pochhammer(x, 0) = 1.
double pochhammer(double x, int k);

/// 2F1(-n, b; c; x) as a polynomial of degree n in x.
class TerminatingHyp {
public:
    /// Throws DomainError if (c)_k vanishes for some k < n.
    TerminatingHyp(int n, double b, double c);

    int n() const { return n_; }
    double b() const { return b_; }
    double c() const { return c_; }
    const std::vector<double>& coefficients() const { return coeff_; }

    /// Compensated summation of the stored terms.
    double operator()(double x) const;
    /// Horner evaluation of the same polynomial.
    double horner(double x) const;
    /// d/dx via the contiguous relation: (-n b / c) 2F1(1-n, b+1; c+1; x).
    double derivative(double x) const;

private:
    int n_;
    double b_;
    double c_;
    std::vector<double> coeff_;
};

double hyp2f1_terminating(int n, double b, double c, double x);

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence. Requires a, b > -1.
double jacobi_p(int n, double a, double b, double x);

} // namespace hd

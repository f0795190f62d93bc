#include "hd/specfun.hpp"

#include "hd/errors.hpp"

#include <cmath>

namespace hd {

double pochhammer(double x, int k)
{
    if (k < 0)
        throw DomainError("pochhammer order must be nonnegative");
    double p = 1.0;
    for (int i = 0; i < k; ++i)
        p *= x + i;
    return p;
}

TerminatingHyp::TerminatingHyp(int n, double b, double c) : n_(n), b_(b), c_(c)
{
    if (n < 0)
        throw DomainError("terminating 2F1 needs n >= 0");
    coeff_.reserve(static_cast<std::size_t>(n) + 1);
    double t = 1.0;
    coeff_.push_back(t);
    for (int k = 0; k < n; ++k) {
        const double ck = c + k;
        if (ck == 0.0)
            throw DomainError("2F1 lower parameter hits a pole inside the terminating series");
        t *= (k - n) * (b + k) / (ck * (k + 1));
        coeff_.push_back(t);
    }
}

double TerminatingHyp::operator()(double x) const
{
    double sum = 0.0;
    double comp = 0.0;
    double xk = 1.0;
    for (double a : coeff_) {
        const double y = a * xk - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        xk *= x;
    }
    return sum;
}

double TerminatingHyp::horner(double x) const
{
    double v = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        v = v * x + *it;
    return v;
}

double TerminatingHyp::derivative(double x) const
{
    if (n_ == 0)
        return 0.0;
    return (-n_ * b_ / c_) * TerminatingHyp(n_ - 1, b_ + 1.0, c_ + 1.0)(x);
}

double hyp2f1_terminating(int n, double b, double c, double x)
{
    return TerminatingHyp(n, b, c)(x);
}

double jacobi_p(int n, double a, double b, double x)
{
    if (n < 0)
        throw DomainError("Jacobi degree must be nonnegative");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("Jacobi parameters must exceed -1");
    double p0 = 1.0;
    if (n == 0)
        return p0;
    double p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace hd

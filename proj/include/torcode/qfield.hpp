#pragma once

/*
 * Exact arithmetic in Q(sqrt D).
 *
 * An element is stored as (p + q*sqrt(D)) / s with s > 0 and
 * gcd(p, q, s) = 1. D is kept exactly as given (it is not reduced to its
 * squarefree part), so sqrt(8) stays sqrt(8) and never becomes 2*sqrt(2).
 *
 * Ordering and floors are decided with integer arithmetic only:
 *
 *     sign(p + q*sqrt(D)) is read off the signs of p and q, and when they
 *     differ, from the sign of p^2 - q^2*D.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace torcode {

using Int = mpz_class;
using Rat = mpq_class;

Int isqrt(const Int &n);
bool is_square(const Int &n);

struct QuadExt {
        Int p{0};
        Int q{0};
        Int s{1};
        Int D{5};

        bool is_zero() const { return p == 0 && q == 0; }
        bool is_rational() const { return q == 0; }
        int sign() const;
        double to_double() const;
        std::string approx(int digits = 15) const;
        std::string str() const;

        friend bool operator==(const QuadExt &x, const QuadExt &y) {
                return x.D == y.D && x.p == y.p && x.q == y.q && x.s == y.s;
        }
};

QuadExt qx_make(const Int &p, const Int &q, const Int &s, const Int &D);
QuadExt qx_int(const Int &n, const Int &D);
QuadExt qx_rat(const Rat &x, const Int &D);
QuadExt qx_sqrtD(const Int &D);

QuadExt operator+(const QuadExt &x, const QuadExt &y);
QuadExt operator-(const QuadExt &x, const QuadExt &y);
QuadExt operator*(const QuadExt &x, const QuadExt &y);
QuadExt operator/(const QuadExt &x, const QuadExt &y);
QuadExt operator-(const QuadExt &x);
QuadExt operator*(const Int &n, const QuadExt &x);

QuadExt qx_conj(const QuadExt &x);
Rat qx_norm(const QuadExt &x);
Rat qx_trace(const QuadExt &x);
QuadExt qx_pow(const QuadExt &x, long n);
QuadExt qx_abs(const QuadExt &x);

std::strong_ordering qx_compare(const QuadExt &x, const QuadExt &y);
inline bool operator<(const QuadExt &x, const QuadExt &y) { return qx_compare(x, y) < 0; }
inline bool operator<=(const QuadExt &x, const QuadExt &y) { return qx_compare(x, y) <= 0; }
inline bool operator>(const QuadExt &x, const QuadExt &y) { return qx_compare(x, y) > 0; }
inline bool operator>=(const QuadExt &x, const QuadExt &y) { return qx_compare(x, y) >= 0; }

Int qx_floor(const QuadExt &x);
QuadExt qx_frac(const QuadExt &x);
/* Distance to the nearest integer. */
QuadExt qx_dist_int(const QuadExt &x);

/* lambda = (r + sqrt D)/2 with D = r^2 - 4 sigma, and its conjugate. */
Int disc_of(const Int &r, int sigma);
QuadExt qx_lambda(const Int &r, int sigma);
QuadExt qx_lambda_bar(const Int &r, int sigma);

/* x in Z + lambda Z. */
bool in_order(const QuadExt &x, const Int &r);
/* Coordinates (m, n) with x = m + n lambda; requires in_order. */
void order_coords(const QuadExt &x, const Int &r, Int &m, Int &n);

/* (x + y sqrt D)/2 with x^2 - D y^2 = +-4, y > 0 minimal. */
QuadExt pell_fundamental_unit(const Int &D, const Int &bound = Int(1000000));

struct UnitGroupDesc {
        QuadExt fundamental_unit;  /* unit of the maximal order, > 1 */
        QuadExt order_generator;   /* generator of units of Z + lambda Z mod +-1, > 1 */
        int exponent_index = 1;
};

UnitGroupDesc unit_group_of_order(const Int &r, int sigma, int bound = 200);

/* D = f^2 d0 with d0 a fundamental discriminant. */
void fundamental_discriminant(const Int &D, Int &d0, Int &f);

} // namespace torcode

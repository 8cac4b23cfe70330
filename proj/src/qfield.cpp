#include "torcode/qfield.hpp"

#include <stdexcept>
#include <vector>

namespace torcode {

Int isqrt(const Int &n)
{
        if (n < 0)
                throw std::domain_error("isqrt of negative number");
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
}

bool is_square(const Int &n)
{
        return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

static Int gcd3(const Int &a, const Int &b, const Int &c)
{
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
}

static QuadExt canon(Int p, Int q, Int s, const Int &D)
{
        if (s == 0)
                throw std::domain_error("zero denominator");
        if (p == 0 && q == 0)
                return QuadExt{0, 0, 1, D};
        if (s < 0) {
                p = -p;
                q = -q;
                s = -s;
        }
        Int g = gcd3(p, q, s);
        if (g != 1) {
                p /= g;
                q /= g;
                s /= g;
        }
        return QuadExt{p, q, s, D};
}

QuadExt qx_make(const Int &p, const Int &q, const Int &s, const Int &D)
{
        if (D <= 0 || is_square(D))
                throw std::invalid_argument("D must be a positive non-square, got " + D.get_str());
        if (s == 0)
                throw std::invalid_argument("denominator must be nonzero");
        return canon(p, q, s, D);
}

QuadExt qx_int(const Int &n, const Int &D) { return canon(n, 0, 1, D); }

QuadExt qx_rat(const Rat &x, const Int &D)
{
        return canon(x.get_num(), 0, x.get_den(), D);
}

QuadExt qx_sqrtD(const Int &D) { return canon(0, 1, 1, D); }

static void same_field(const QuadExt &x, const QuadExt &y)
{
        if (x.D != y.D)
                throw std::invalid_argument("elements of different fields: D=" + x.D.get_str() + " vs D=" +
                                            y.D.get_str());
}

QuadExt operator+(const QuadExt &x, const QuadExt &y)
{
        same_field(x, y);
        return canon(x.p * y.s + y.p * x.s, x.q * y.s + y.q * x.s, x.s * y.s, x.D);
}

QuadExt operator-(const QuadExt &x) { return QuadExt{-x.p, -x.q, x.s, x.D}; }

QuadExt operator-(const QuadExt &x, const QuadExt &y) { return x + (-y); }

QuadExt operator*(const QuadExt &x, const QuadExt &y)
{
        same_field(x, y);
        return canon(x.p * y.p + x.q * y.q * x.D, x.p * y.q + x.q * y.p, x.s * y.s, x.D);
}

QuadExt operator*(const Int &n, const QuadExt &x) { return canon(n * x.p, n * x.q, x.s, x.D); }

QuadExt operator/(const QuadExt &x, const QuadExt &y)
{
        same_field(x, y);
        if (y.is_zero())
                throw std::domain_error("division by zero element");
        /* x / y = x * conj(y) * s_y^2 / (s_x * s_y * (p_y^2 - q_y^2 D)) */
        Int n = y.p * y.p - y.q * y.q * y.D;
        Int p = x.p * y.p - x.q * y.q * x.D;
        Int q = x.q * y.p - x.p * y.q;
        return canon(p * y.s, q * y.s, x.s * n, x.D);
}

QuadExt qx_conj(const QuadExt &x) { return QuadExt{x.p, -x.q, x.s, x.D}; }

Rat qx_norm(const QuadExt &x)
{
        Rat r(x.p * x.p - x.q * x.q * x.D, x.s * x.s);
        r.canonicalize();
        return r;
}

Rat qx_trace(const QuadExt &x)
{
        Rat r(2 * x.p, x.s);
        r.canonicalize();
        return r;
}

QuadExt qx_pow(const QuadExt &x, long n)
{
        if (n < 0)
                return qx_pow(qx_int(1, x.D) / x, -n);
        QuadExt result = qx_int(1, x.D);
        QuadExt base = x;
        while (n > 0) {
                if (n & 1)
                        result = result * base;
                base = base * base;
                n >>= 1;
        }
        return result;
}

int QuadExt::sign() const
{
        int sp = sgn(p), sq = sgn(q);
        if (sp >= 0 && sq >= 0)
                return (sp == 0 && sq == 0) ? 0 : 1;
        if (sp <= 0 && sq <= 0)
                return -1;
        Int d = p * p - q * q * D;
        /* d != 0 because D is not a square and q != 0 here */
        return sp > 0 ? sgn(d) : -sgn(d);
}

QuadExt qx_abs(const QuadExt &x) { return x.sign() < 0 ? -x : x; }

std::strong_ordering qx_compare(const QuadExt &x, const QuadExt &y)
{
        int s = (x - y).sign();
        if (s < 0)
                return std::strong_ordering::less;
        if (s > 0)
                return std::strong_ordering::greater;
        return std::strong_ordering::equal;
}

Int qx_floor(const QuadExt &x)
{
        /* m = floor(q sqrt D), then x lies in [(p+m)/s, (p+m+1)/s). */
        Int m;
        if (x.q == 0)
                m = 0;
        else if (x.q > 0)
                m = isqrt(x.q * x.q * x.D);
        else
                m = -isqrt(x.q * x.q * x.D) - 1;
        Int num = x.p + m;
        Int c;
        mpz_fdiv_q(c.get_mpz_t(), num.get_mpz_t(), x.s.get_mpz_t());
        while (qx_int(c, x.D) > x)
                c -= 1;
        while (qx_int(c + 1, x.D) <= x)
                c += 1;
        return c;
}

QuadExt qx_frac(const QuadExt &x) { return x - qx_int(qx_floor(x), x.D); }

QuadExt qx_dist_int(const QuadExt &x)
{
        QuadExt f = qx_frac(x);
        QuadExt g = qx_int(1, x.D) - f;
        return f <= g ? f : g;
}

static mpf_class to_mpf(const QuadExt &x, unsigned bits)
{
        mpf_class D(x.D, bits), p(x.p, bits), q(x.q, bits), s(x.s, bits);
        mpf_class r(0, bits);
        r = sqrt(D);
        r = (p + q * r) / s;
        return r;
}

double QuadExt::to_double() const { return to_mpf(*this, 256).get_d(); }

std::string QuadExt::approx(int digits) const
{
        mpf_class v = to_mpf(*this, 512);
        std::vector<char> buf(digits + 64);
        gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, v.get_mpf_t());
        return std::string(buf.data());
}

std::string QuadExt::str() const
{
        std::string num;
        if (q == 0)
                num = p.get_str();
        else {
                std::string root = "sqrt" + D.get_str();
                std::string qs = (q == 1) ? root : (q == -1) ? "-" + root : q.get_str() + "*" + root;
                if (p == 0)
                        num = qs;
                else
                        num = p.get_str() + (q > 0 ? "+" : "") + qs;
        }
        if (s == 1)
                return num;
        return "(" + num + ")/" + s.get_str();
}

Int disc_of(const Int &r, int sigma) { return r * r - 4 * sigma; }

QuadExt qx_lambda(const Int &r, int sigma) { return qx_make(r, 1, 2, disc_of(r, sigma)); }

QuadExt qx_lambda_bar(const Int &r, int sigma) { return qx_make(r, -1, 2, disc_of(r, sigma)); }

bool in_order(const QuadExt &x, const Int &r)
{
        Int two_q = 2 * x.q;
        if (!mpz_divisible_p(two_q.get_mpz_t(), x.s.get_mpz_t()))
                return false;
        Int n = two_q / x.s;
        Int num = 2 * x.p - n * r * x.s;
        Int den = 2 * x.s;
        return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

void order_coords(const QuadExt &x, const Int &r, Int &m, Int &n)
{
        if (!in_order(x, r))
                throw std::domain_error("element " + x.str() + " is not in Z + lambda Z");
        n = 2 * x.q / x.s;
        m = (2 * x.p - n * r * x.s) / (2 * x.s);
}

QuadExt pell_fundamental_unit(const Int &D, const Int &bound)
{
        if (D <= 0 || is_square(D))
                throw std::invalid_argument("pell: D must be a positive non-square");
        for (Int y = 1; y <= bound; ++y) {
                Int dy2 = D * y * y;
                for (int e : {-4, 4}) {
                        Int x2 = dy2 + e;
                        if (x2 > 0 && is_square(x2))
                                return qx_make(isqrt(x2), y, 2, D);
                }
        }
        throw std::runtime_error("pell: no solution with y <= " + bound.get_str());
}

void fundamental_discriminant(const Int &D, Int &d0, Int &f)
{
        Int rest = D, sq = 1, core = 1;
        for (Int p = 2; p * p <= rest; ++p) {
                while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                        rest /= p;
                        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                                rest /= p;
                                sq *= p;
                        } else {
                                core *= p;
                        }
                }
        }
        core *= rest;
        /* D = sq^2 * core with core squarefree */
        if (core % 4 == 1) {
                d0 = core;
                f = sq;
        } else {
                d0 = 4 * core;
                if (sq % 2 != 0)
                        throw std::invalid_argument("not a discriminant: " + D.get_str());
                f = sq / 2;
        }
}

UnitGroupDesc unit_group_of_order(const Int &r, int sigma, int bound)
{
        Int D = disc_of(r, sigma);
        if (D <= 0 || is_square(D))
                throw std::invalid_argument("(r, sigma) is not hyperbolic");
        Int d0, f;
        fundamental_discriminant(D, d0, f);
        QuadExt e0 = pell_fundamental_unit(d0);
        /* sqrt d0 = sqrt D / f */
        QuadExt eps = qx_make(e0.p * f, e0.q, e0.s * f, D);
        QuadExt power = eps;
        for (int j = 1; j <= bound; ++j) {
                if (in_order(power, r))
                        return UnitGroupDesc{eps, power, j};
                power = power * eps;
        }
        throw std::runtime_error("unit_group_of_order: no power up to " + std::to_string(bound) +
                                 " lies in Z + lambda Z");
}

} // namespace torcode

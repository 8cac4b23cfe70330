#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace torcode;

TEST_CASE("field operations agree with high-precision floats")
{
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> d(-40, 40), den(1, 12);
        for (long D : {5L, 8L, 12L, 13L, 21L, 32L}) {
                for (int i = 0; i < 60; ++i) {
                        QuadExt x = qx_make(d(rng), d(rng), den(rng), D);
                        QuadExt y = qx_make(d(rng), d(rng), den(rng), D);
                        mpf_class fx = oracle::to_f(x), fy = oracle::to_f(y);
                        CHECK(abs(oracle::to_f(x + y) - (fx + fy)) < 1e-60);
                        CHECK(abs(oracle::to_f(x * y) - fx * fy) < 1e-60);
                        if (!y.is_zero())
                                CHECK(abs(oracle::to_f(x / y) - fx / fy) < 1e-50);
                        CHECK((x < y) == (fx < fy));
                        CHECK(qx_floor(x) == Int(mpf_class(floor(fx)).get_si()));
                        CHECK(abs(oracle::to_f(qx_conj(x)) - (mpf_class(x.p, 512) - mpf_class(x.q, 512) * sqrt(mpf_class(D, 512))) / mpf_class(x.s, 512)) < 1e-60);
                }
        }
}

TEST_CASE("normal form keeps D and reduces the triple")
{
        QuadExt x = qx_make(4, 6, 8, 8);
        CHECK(x.p == 2);
        CHECK(x.q == 3);
        CHECK(x.s == 4);
        CHECK(x.D == 8);
        CHECK(qx_sqrtD(8) * qx_sqrtD(8) == qx_int(8, 8));
        CHECK(qx_make(0, 0, 7, 5).s == 1);
}

TEST_CASE("lambda is the dominant root of x^2 - r x + sigma")
{
        for (long r = 1; r <= 8; ++r)
                for (int sigma : {-1, 1}) {
                        if (sigma == 1 && r < 3)
                                continue;
                        QuadExt l = qx_lambda(r, sigma), lb = qx_lambda_bar(r, sigma);
                        CHECK((l * l - Int(r) * l + qx_int(sigma, l.D)).is_zero());
                        CHECK(l + lb == qx_int(r, l.D));
                        CHECK(l * lb == qx_int(sigma, l.D));
                        CHECK(qx_abs(lb) < qx_int(1, l.D));
                        CHECK(l > qx_int(1, l.D));
                }
}

TEST_CASE("distance to the nearest integer")
{
        QuadExt x = qx_make(1, 1, 2, 5);
        CHECK(qx_dist_int(x) == qx_int(2, 5) - x);
        CHECK(qx_dist_int(qx_make(1, 0, 2, 5)) == qx_make(1, 0, 2, 5));
        CHECK(qx_dist_int(qx_int(-3, 5)).is_zero());
}

TEST_CASE("order membership and coordinates")
{
        QuadExt lam = qx_lambda(3, 1);
        QuadExt x = qx_int(4, 5) - Int(7) * lam;
        CHECK(in_order(x, 3));
        Int m, n;
        order_coords(x, 3, m, n);
        CHECK(m == 4);
        CHECK(n == -7);
        CHECK_FALSE(in_order(lam / qx_int(2, 5), 3));
        CHECK(in_order(qx_make(1, 1, 2, 5), 3));
        CHECK_FALSE(in_order(qx_make(1, 1, 4, 5), 1));
        CHECK(in_order(qx_make(1, 1, 2, 5), 1));
}

TEST_CASE("Pell fundamental unit matches brute force")
{
        for (long D : {5L, 8L, 12L, 13L, 17L, 20L, 21L, 29L, 32L, 40L, 45L, 60L}) {
                QuadExt u = pell_fundamental_unit(D);
                auto [x, y] = oracle::pell_brute(D);
                CAPTURE(D);
                CHECK(u == qx_make(x, y, 2, D));
                CHECK(abs(qx_norm(u)) == 1);
        }
}

TEST_CASE("unit group of Z + lambda Z")
{
        UnitGroupDesc g = unit_group_of_order(4, -1);
        CHECK(g.exponent_index == 3);
        CHECK(g.order_generator == qx_lambda(4, -1));
        CHECK(qx_pow(g.fundamental_unit, 3) == g.order_generator);

        UnitGroupDesc h = unit_group_of_order(3, 1);
        CHECK(h.order_generator == qx_make(1, 1, 2, 5));
        CHECK(qx_pow(h.order_generator, 2) == qx_lambda(3, 1));

        UnitGroupDesc f = unit_group_of_order(1, -1);
        CHECK(f.exponent_index == 1);
        CHECK(f.order_generator == qx_lambda(1, -1));
}

TEST_CASE("fundamental discriminant")
{
        Int d0, f;
        fundamental_discriminant(20, d0, f);
        CHECK(d0 == 5);
        CHECK(f == 2);
        fundamental_discriminant(32, d0, f);
        CHECK(d0 == 8);
        CHECK(f == 2);
        fundamental_discriminant(12, d0, f);
        CHECK(d0 == 12);
        CHECK(f == 1);
}

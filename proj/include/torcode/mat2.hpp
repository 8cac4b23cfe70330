#pragma once

#include "torcode/qfield.hpp"

#include <array>
#include <string>

namespace torcode {

using Vec2 = std::array<Int, 2>;

/* 2x2 integer matrix [[a, b], [c, d]], row-major. */
struct Mat2 {
        Int a{1}, b{0}, c{0}, d{1};

        static Mat2 identity() { return Mat2{1, 0, 0, 1}; }
        static Mat2 diag(const Int &x, const Int &y) { return Mat2{x, 0, 0, y}; }

        Int det() const { return a * d - b * c; }
        Int trace() const { return a + d; }
        Mat2 transpose() const { return Mat2{a, c, b, d}; }
        /* adj * M = det * I */
        Mat2 adj() const { return Mat2{d, -b, -c, a}; }
        /* inverse of a matrix with det +-1 */
        Mat2 inverse() const;
        Mat2 pow(long n) const;
        Vec2 apply(const Vec2 &v) const { return Vec2{a * v[0] + b * v[1], c * v[0] + d * v[1]}; }
        std::string str() const;

        friend bool operator==(const Mat2 &x, const Mat2 &y) {
                return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
        }
};

Mat2 operator*(const Mat2 &x, const Mat2 &y);
Mat2 operator+(const Mat2 &x, const Mat2 &y);
Mat2 operator-(const Mat2 &x);
Mat2 operator*(const Int &k, const Mat2 &x);

/* Parses "a,b,c,d". */
Mat2 parse_mat2(const std::string &s);

} // namespace torcode

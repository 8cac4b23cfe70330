#include "torcode/mat2.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace torcode {

Mat2 operator*(const Mat2 &x, const Mat2 &y)
{
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator+(const Mat2 &x, const Mat2 &y) { return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

Mat2 operator-(const Mat2 &x) { return Mat2{-x.a, -x.b, -x.c, -x.d}; }

Mat2 operator*(const Int &k, const Mat2 &x) { return Mat2{k * x.a, k * x.b, k * x.c, k * x.d}; }

Mat2 Mat2::inverse() const
{
        Int dt = det();
        if (dt == 1)
                return adj();
        if (dt == -1)
                return -adj();
        throw std::domain_error("matrix " + str() + " is not unimodular");
}

Mat2 Mat2::pow(long n) const
{
        Mat2 base = n < 0 ? inverse() : *this;
        unsigned long e = n < 0 ? -(unsigned long)n : (unsigned long)n;
        Mat2 result = identity();
        while (e > 0) {
                if (e & 1)
                        result = result * base;
                base = base * base;
                e >>= 1;
        }
        return result;
}

std::string Mat2::str() const
{
        return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

Mat2 parse_mat2(const std::string &s)
{
        std::vector<Int> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
                size_t i = item.find_first_not_of(" \t");
                size_t j = item.find_last_not_of(" \t");
                if (i == std::string::npos)
                        throw std::invalid_argument("empty matrix entry in \"" + s + "\"");
                Int x;
                if (x.set_str(item.substr(i, j - i + 1), 10) != 0)
                        throw std::invalid_argument("bad matrix entry \"" + item + "\"");
                v.push_back(x);
        }
        if (v.size() != 4)
                throw std::invalid_argument("matrix needs 4 entries \"a,b,c,d\", got \"" + s + "\"");
        return Mat2{v[0], v[1], v[2], v[3]};
}

} // namespace torcode

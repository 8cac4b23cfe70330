#pragma once

// Indefinite binary quadratic forms a x^2 + b xy + c y^2.
//
// Composition convention: for a transform T = [[x, y], [z, t]],
//     (f o T)(X, Y) = f(x X + y Y, z X + t Y),
// so f o (T1 T2) = (f o T1) o T2, and the first column of T is the vector
// whose value f o T takes at (1, 0).
//
// Reduction: [a, b, c] with discriminant disc is reduced iff
//     0 < b < sqrt(disc)  and  sqrt(disc) - b < 2|a| < sqrt(disc) + b.
// The neighbour step rho sends [a, b, c] to [c, b', (b'^2 - disc)/(4c)] with
// b' = -b mod 2c normalised into (sqrt(disc) - 2|c|, sqrt(disc)) when
// |c| < sqrt(disc), and into (-|c|, |c|] otherwise.

#include "torcode/mat2.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace torcode {

struct BinForm {
        Int a{0}, b{0}, c{0};

        Int disc() const { return b * b - 4 * a * c; }
        Int operator()(const Int &x, const Int &y) const { return a * x * x + b * x * y + c * y * y; }
        Int content() const;
        bool is_primitive() const { return content() == 1; }
        BinForm operator-() const { return BinForm{-a, -b, -c}; }
        std::string str() const;

        friend bool operator==(const BinForm &f, const BinForm &g) {
                return f.a == g.a && f.b == g.b && f.c == g.c;
        }
};

struct FormTransform {
        Mat2 m;
        int det = 1;
};

struct ReductionCycle {
        std::vector<BinForm> forms;
        /* transforms[i] maps forms[i] to forms[(i+1) % n] */
        std::vector<FormTransform> transforms;
};

FormTransform make_transform(const Mat2 &m);
BinForm compose(const BinForm &f, const Mat2 &t);

/* The form [b, -(a-d), -c] of M = [[a,b],[c,d]]. */
BinForm associated_form(const Mat2 &M);

/* Both matrices mapping to f; first has positive trace. */
std::pair<Mat2, Mat2> theta_preimage(const BinForm &f);

bool is_reduced(const BinForm &f);
std::pair<BinForm, FormTransform> reduce(const BinForm &f);
ReductionCycle cycle(const BinForm &f);

std::optional<FormTransform> properly_equivalent(const BinForm &f1, const BinForm &f2);
std::optional<FormTransform> equivalent(const BinForm &f1, const BinForm &f2);

Int integral_minimum(const BinForm &f);
/* min |f| over 0 < max(|x|,|y|) <= bound */
Int brute_min(const BinForm &f, long bound);

/* The proper automorph generating all proper automorphs modulo -I. */
Mat2 fundamental_automorph(const BinForm &f);

/*
 * One representative per orbit of solutions of f(x, y) = m under the proper
 * automorphs of f (which contain -I). Requires 4 m^2 < disc.
 */
std::vector<Vec2> represent(const BinForm &f, const Int &m);
/* Brute-force: all (x, y) with max(|x|,|y|) <= bound and f(x, y) = m. */
std::vector<Vec2> brute_represent(const BinForm &f, const Int &m, long bound);

/* The representative of v's orbit under the group generated by U and -I with least |x|+|y|. */
Vec2 canonical_in_orbit(const Vec2 &v, const Mat2 &U);

struct AutomorphInfo {
        FormTransform generator;
        bool exceptional = false; /* forms equivalent to x^2 - 3xy + y^2 */
};
AutomorphInfo automorph_generator(const BinForm &f);

/* q_n with f_{M^n} = q_n f_M. */
Int power_form_factor(const Int &r, int sigma, long n);

} // namespace torcode

#pragma once

// GL(2,Z): hyperbolicity, conjugacy via forms, roots, orbit spans and
// kernels of integer matrices acting on R^2/Z^2.

#include "torcode/binforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torcode {

using TorusRat = std::array<Rat, 2>;

struct HypInfo {
        bool hyperbolic = false;
        Int r;
        int sigma = 1;
        Int D;
};

HypInfo is_hyperbolic(const Mat2 &M);
/* Throws std::invalid_argument unless M is unimodular and hyperbolic. */
HypInfo require_hyperbolic(const Mat2 &M);

std::pair<Mat2, bool> normalize_trace(const Mat2 &M);
Mat2 companion(const Int &r, int sigma);

/* B = [[x, y], [-d x + c y, b x - a y]]; det B = f_M(x, y). */
Mat2 conjugator_from_solution(const Mat2 &M, const Int &x, const Int &y);
/* B with B M B^-1 = C_{r,sigma}, or nothing when f_M = +-1 has no solution. */
std::optional<Mat2> conjugator_to_companion(const Mat2 &M);
/* B with B M1 B^-1 = M2. */
std::optional<Mat2> is_conjugate(const Mat2 &M1, const Mat2 &M2);

struct PrimitivityInfo {
        bool primitive = true;
        std::optional<Mat2> root; /* K with K^n = M, n maximal */
        long exponent = 1;
        long unit_exponent = 1;   /* lambda = eps^k for the fundamental unit eps */
};
PrimitivityInfo is_primitive(const Mat2 &M, long bound = 200);

bool orbit_span_full(const Mat2 &M, const Int &x, const Int &y);
/* Index in Z^2 of the lattice spanned by M^n (x,y), |n| <= span. 0 if rank < 2. */
Int orbit_span_lattice_index(const Mat2 &M, const Int &x, const Int &y, int span = 3);

/* Representatives of solutions of f_M = +-m modulo +-(M^T)^n. */
std::vector<Vec2> solution_orbits(const Mat2 &M, const Int &m);

struct CoverBound {
        Int bound;
        std::string note;
};
CoverBound min_orbit_cover_bound(const Mat2 &M);

struct KernelGroup {
        Int order;
        std::vector<Int> invariants; /* nontrivial invariant factors d1 | d2 */
        std::vector<TorusRat> generators;
        std::vector<TorusRat> elements; /* sorted, filled when order <= 10^4 */
};

Rat frac(const Rat &x);
TorusRat torus_reduce(const TorusRat &v);
TorusRat torus_apply(const Mat2 &M, const TorusRat &v);

KernelGroup kernel_group(const Mat2 &B);
bool kernel_isomorphic_under_T(const Mat2 &M, const KernelGroup &K1, const KernelGroup &K2, long bound = 12);

} // namespace torcode

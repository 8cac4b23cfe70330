#pragma once

// Arithmetic codings of a hyperbolic toral automorphism M.
//
// A coding is fixed by a homoclinic point t = (xi, eta) in the plane, with
// M t = lambda t. Parameters (p, q) give
//
//     (n, k)^T = -sigma M (-q, p)^T,
//     xi  = (-q + n lambda) / sqrt D,
//     eta = ( p + k lambda) / sqrt D,
//
// and the coding is K-to-1 with K = |f_M(p, q)|.
//
// The coding map of a word with split (x1, x2) is x1 t - x2 conj(t) mod Z^2;
// on finite words this is sum eps_n lambda^-n t.

#include "torcode/betasym.hpp"
#include "torcode/glz.hpp"

#include <array>
#include <optional>
#include <vector>

namespace torcode {

using QPoint = std::array<QuadExt, 2>;

struct HomoclinicPoint {
        Int p, q, n, k;
        QuadExt xi, eta;
        QPoint toral;
};

struct CodingSpec {
        Mat2 matrix;
        HomoclinicPoint point;
        Int multiplicity;
        HypInfo hyp;

        Compactum compactum() const { return compactum_for(hyp.r, hyp.sigma); }
        QPoint t() const { return {point.xi, point.eta}; }
};

HomoclinicPoint homoclinic_point(const Mat2 &M, const Int &p, const Int &q);
CodingSpec make_spec(const Mat2 &M, const Int &p, const Int &q);
/* The spec whose planar xi equals xi_sqrtD / sqrt D; xi_sqrtD must lie in Z + lambda Z. */
CodingSpec spec_from_planar(const Mat2 &M, const QuadExt &xi_sqrtD);

Int multiplicity(const CodingSpec &s);
/* sqrt D |conj(xi) eta - xi conj(eta)| */
QuadExt determinant_area(const CodingSpec &s);

struct BacFamily {
        bool exists = false;
        bool exceptional = false; /* the unit group of Z + lambda Z is generated by a proper root of lambda */
        QuadExt generator;        /* g with every BAC parameter +-g^k xi_0 */
        long generator_power = 1; /* lambda = g^generator_power */
        std::optional<Vec2> base_solution;
        std::vector<CodingSpec> specs;
        std::vector<long> exponents;
        std::vector<int> signs;
};
BacFamily enumerate_bac(const Mat2 &M, long k_lo = -2, long k_hi = 2);

struct MacFamily {
        Int m;
        std::vector<CodingSpec> specs;
        std::vector<Mat2> kernel_matrices;
        std::vector<KernelGroup> kernels;
        int kernel_classes = 0; /* classes of kernels up to +-M^n */
};
MacFamily enumerate_mac(const Mat2 &M);
/* [[x, y], (x, y) M^-1] */
Mat2 kernel_matrix(const Mat2 &M, const Vec2 &v);

QPoint torus_mod(const QPoint &P);
QPoint phi_eval(const CodingSpec &s, const SymWord &w);
QPoint matrix_act(const Mat2 &M, const QPoint &P);

struct DomainPolygon {
        std::vector<QPoint> vertices;
        QuadExt area;
};
QuadExt polygon_area(const std::vector<QPoint> &v);
DomainPolygon fundamental_domain(const CodingSpec &s);
QuadExt Pi_area(const Compactum &c);

struct Decoded {
        SymWord word;
        bool exact = false;    /* phi_eval(word) == target */
        bool certified = false; /* within lambda^(2 - window) in each coordinate */
        QPoint error;          /* per-coordinate distance on the torus */
};
Decoded decode(const CodingSpec &s, const QPoint &target, long window);
/* (x1, x2) with x1 t - x2 conj(t) = P */
std::pair<QuadExt, QuadExt> split_of_point(const CodingSpec &s, const QPoint &P);

/* A = a I + b M with t_spec = A t_bac */
Mat2 coding_ratio_matrix(const CodingSpec &spec, const CodingSpec &bac);
KernelGroup kernel_of_coding(const CodingSpec &spec, const CodingSpec &bac);

bool pisot_member(const QuadExt &x, const Int &r, int sigma);
struct DecayReport {
        std::vector<QuadExt> dist; /* ||x lambda^n||, n = 0..n_max */
        long threshold = -1;       /* first n with |conj(x)| |conj(lambda)|^n < 1/2 */
        bool exact_decay = false;  /* dist[n] = |conj(x)| |conj(lambda)|^n for n >= threshold */
};
DecayReport homoclinic_decay_check(const QuadExt &x, const Int &r, int sigma, long n_max);

bool is_homoclinic_torus_point(const CodingSpec &bac, const QPoint &P);
bool homoclinic_class_image_check(const CodingSpec &bac, const SymWord &w1, const SymWord &w2);

} // namespace torcode

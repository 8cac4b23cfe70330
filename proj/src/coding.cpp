#include "torcode/coding.hpp"

#include <numeric>
#include <stdexcept>

namespace torcode {

static HypInfo require_normalized(const Mat2 &M)
{
        HypInfo h = require_hyperbolic(M);
        if (h.r < 0)
                throw std::invalid_argument("matrix " + M.str() + " has negative trace; normalize it first");
        return h;
}

QPoint torus_mod(const QPoint &P) { return {qx_frac(P[0]), qx_frac(P[1])}; }

QPoint matrix_act(const Mat2 &M, const QPoint &P)
{
        return torus_mod({M.a * P[0] + M.b * P[1], M.c * P[0] + M.d * P[1]});
}

HomoclinicPoint homoclinic_point(const Mat2 &M, const Int &p, const Int &q)
{
        HypInfo h = require_normalized(M);
        HomoclinicPoint hp;
        hp.p = p;
        hp.q = q;
        Vec2 nk = M.apply(Vec2{-q, p});
        hp.n = -h.sigma * nk[0];
        hp.k = -h.sigma * nk[1];
        QuadExt lam = qx_lambda(h.r, h.sigma), rt = qx_sqrtD(h.D);
        hp.xi = (qx_int(-q, h.D) + hp.n * lam) / rt;
        hp.eta = (qx_int(p, h.D) + hp.k * lam) / rt;
        if (!(M.a * hp.xi + M.b * hp.eta == lam * hp.xi) || !(M.c * hp.xi + M.d * hp.eta == lam * hp.eta))
                throw std::logic_error("homoclinic_point: not an unstable eigenvector");
        hp.toral = torus_mod({hp.xi, hp.eta});
        return hp;
}

CodingSpec make_spec(const Mat2 &M, const Int &p, const Int &q)
{
        if (p == 0 && q == 0)
                throw std::invalid_argument("the zero parameter does not define a coding");
        CodingSpec s;
        s.matrix = M;
        s.hyp = require_normalized(M);
        s.point = homoclinic_point(M, p, q);
        s.multiplicity = multiplicity(s);
        return s;
}

CodingSpec spec_from_planar(const Mat2 &M, const QuadExt &xi_sqrtD)
{
        HypInfo h = require_normalized(M);
        Int m, n;
        order_coords(xi_sqrtD, h.r, m, n);
        Int q = -m, num = -h.sigma * n + M.a * q;
        if (!mpz_divisible_p(num.get_mpz_t(), M.b.get_mpz_t()))
                throw std::invalid_argument("planar parameter " + xi_sqrtD.str() + "/sqrtD is not a homoclinic point of " +
                                            M.str());
        CodingSpec s = make_spec(M, num / M.b, q);
        if (!(s.point.xi * qx_sqrtD(h.D) == xi_sqrtD))
                throw std::logic_error("spec_from_planar: round trip failed");
        return s;
}

Int multiplicity(const CodingSpec &s)
{
        if (s.point.p == 0 && s.point.q == 0)
                throw std::invalid_argument("multiplicity of the zero parameter");
        return abs(associated_form(s.matrix)(s.point.p, s.point.q));
}

QuadExt determinant_area(const CodingSpec &s)
{
        const QuadExt &x = s.point.xi, &e = s.point.eta;
        return qx_abs(qx_sqrtD(s.hyp.D) * (qx_conj(x) * e - x * qx_conj(e)));
}

BacFamily enumerate_bac(const Mat2 &M, long k_lo, long k_hi)
{
        HypInfo h = require_normalized(M);
        BinForm f = associated_form(M);
        BacFamily fam;
        for (int m : {1, -1}) {
                auto sols = represent(f, m);
                if (!sols.empty()) {
                        fam.base_solution = sols.front();
                        break;
                }
        }
        UnitGroupDesc ug = unit_group_of_order(h.r, h.sigma);
        QuadExt lam = qx_lambda(h.r, h.sigma), g = ug.order_generator;
        fam.generator = g;
        QuadExt pw = g;
        for (long j = 1; j <= 200; ++j, pw = pw * g)
                if (pw == lam) {
                        fam.generator_power = j;
                        break;
                }
        fam.exceptional = fam.generator_power > 1;
        if (!fam.base_solution)
                return fam;
        fam.exists = true;
        CodingSpec base = make_spec(M, (*fam.base_solution)[0], (*fam.base_solution)[1]);
        QuadExt rt = qx_sqrtD(h.D), one = qx_int(1, h.D);
        QuadExt X0 = base.point.xi * rt;
        if (X0.sign() < 0)
                X0 = -X0;
        while (X0 >= g)
                X0 = X0 / g;
        while (X0 < one)
                X0 = X0 * g;
        for (long k = k_lo; k <= k_hi; ++k)
                for (int sg : {1, -1}) {
                        CodingSpec s = spec_from_planar(M, Int(sg) * qx_pow(g, k) * X0);
                        if (s.multiplicity != 1)
                                throw std::logic_error("enumerate_bac: member with multiplicity " +
                                                       s.multiplicity.get_str());
                        fam.specs.push_back(s);
                        fam.exponents.push_back(k);
                        fam.signs.push_back(sg);
                }
        return fam;
}

Mat2 kernel_matrix(const Mat2 &M, const Vec2 &v)
{
        Mat2 Mi = M.inverse();
        return Mat2{v[0], v[1], v[0] * Mi.a + v[1] * Mi.c, v[0] * Mi.b + v[1] * Mi.d};
}

MacFamily enumerate_mac(const Mat2 &M)
{
        require_normalized(M);
        MacFamily fam;
        fam.m = integral_minimum(associated_form(M));
        std::vector<Vec2> sols = solution_orbits(M, fam.m);
        std::vector<int> cls(sols.size());
        std::iota(cls.begin(), cls.end(), 0);
        for (const Vec2 &v : sols) {
                fam.specs.push_back(make_spec(M, v[0], v[1]));
                fam.kernel_matrices.push_back(kernel_matrix(M, v));
                fam.kernels.push_back(kernel_group(fam.kernel_matrices.back()));
                if (fam.kernels.back().order != fam.m)
                        throw std::logic_error("enumerate_mac: kernel order differs from m");
        }
        for (size_t i = 0; i < sols.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                        if (cls[j] == (int)j && cls[i] == (int)i &&
                            kernel_isomorphic_under_T(M, fam.kernels[i], fam.kernels[j]))
                                cls[i] = (int)j;
        for (size_t i = 0; i < cls.size(); ++i)
                fam.kernel_classes += cls[i] == (int)i;
        return fam;
}

QPoint phi_eval(const CodingSpec &s, const SymWord &w)
{
        Compactum c = s.compactum();
        if (!is_admissible(w, c))
                throw std::invalid_argument("word " + word_to_string(w) + " is not admissible for " + c.describe());
        auto [x1, x2] = split_value(w, c);
        QPoint t = s.t();
        return torus_mod({x1 * t[0] - x2 * qx_conj(t[0]), x1 * t[1] - x2 * qx_conj(t[1])});
}

QuadExt polygon_area(const std::vector<QPoint> &v)
{
        QuadExt acc = qx_int(0, v.front()[0].D);
        for (size_t i = 0; i < v.size(); ++i) {
                const QPoint &a = v[i], &b = v[(i + 1) % v.size()];
                acc = acc + a[0] * b[1] - b[0] * a[1];
        }
        return qx_abs(acc) / qx_int(2, acc.D);
}

QuadExt Pi_area(const Compactum &c)
{
        std::vector<QPoint> v;
        for (auto &[x1, x2] : Pi_vertices(c))
                v.push_back({x1, x2});
        return polygon_area(v);
}

DomainPolygon fundamental_domain(const CodingSpec &s)
{
        DomainPolygon poly;
        QPoint t = s.t();
        for (auto &[x1, x2] : Pi_vertices(s.compactum()))
                poly.vertices.push_back({x1 * t[0] - x2 * qx_conj(t[0]), x1 * t[1] - x2 * qx_conj(t[1])});
        poly.area = polygon_area(poly.vertices);
        return poly;
}

std::pair<QuadExt, QuadExt> split_of_point(const CodingSpec &s, const QPoint &P)
{
        const QuadExt &x = s.point.xi, &e = s.point.eta;
        QuadExt xb = qx_conj(x), eb = qx_conj(e);
        QuadExt det = xb * e - x * eb;
        return {(xb * P[1] - eb * P[0]) / det, (x * P[1] - e * P[0]) / det};
}

Decoded decode(const CodingSpec &s, const QPoint &target, long window)
{
        if (s.multiplicity != 1)
                throw std::invalid_argument("decode needs a bijective coding; this one is " +
                                            s.multiplicity.get_str() + "-to-1");
        if (window < 1)
                throw std::invalid_argument("decode window must be positive");
        Compactum c = s.compactum();
        auto [y1, y2] = split_of_point(s, target);
        auto [x1, x2] = reduce_into_Pi(y1, y2, c);
        Decoded out;
        out.word = expand_split(x1, x2, c, window).word;
        QPoint img = phi_eval(s, out.word);
        out.error = {qx_dist_int(img[0] - target[0]), qx_dist_int(img[1] - target[1])};
        out.exact = out.error[0].is_zero() && out.error[1].is_zero();
        QuadExt bound = qx_pow(qx_lambda(s.hyp.r, s.hyp.sigma), 2 - window);
        out.certified = out.error[0] <= bound && out.error[1] <= bound;
        return out;
}

Mat2 coding_ratio_matrix(const CodingSpec &spec, const CodingSpec &bac)
{
        if (!(spec.matrix == bac.matrix))
                throw std::invalid_argument("codings of different matrices");
        QuadExt lam = qx_lambda(spec.hyp.r, spec.hyp.sigma), lamb = qx_lambda_bar(spec.hyp.r, spec.hyp.sigma);
        QuadExt c = spec.point.xi / bac.point.xi;
        if (!(spec.point.eta == c * bac.point.eta))
                throw std::logic_error("coding_ratio_matrix: points are not proportional");
        QuadExt b = (c - qx_conj(c)) / (lam - lamb), a = c - b * lam;
        if (!a.is_rational() || !b.is_rational() || a.s != 1 || b.s != 1)
                throw std::invalid_argument("the spec point is not an integer combination of the BAC point orbit");
        return a.p * Mat2::identity() + b.p * spec.matrix;
}

KernelGroup kernel_of_coding(const CodingSpec &spec, const CodingSpec &bac)
{
        if (bac.multiplicity != 1)
                throw std::invalid_argument("kernel_of_coding: reference coding is not bijective");
        return kernel_group(coding_ratio_matrix(spec, bac));
}

bool pisot_member(const QuadExt &x, const Int &r, int sigma)
{
        Int D = disc_of(r, sigma);
        if (x.D != D)
                throw std::invalid_argument("element of a different field");
        return in_order(x * qx_sqrtD(D), r);
}

DecayReport homoclinic_decay_check(const QuadExt &x, const Int &r, int sigma, long n_max)
{
        QuadExt lam = qx_lambda(r, sigma), lbar = qx_abs(qx_lambda_bar(r, sigma));
        QuadExt half = qx_make(1, 0, 2, lam.D), xb = qx_abs(qx_conj(x));
        DecayReport rep;
        QuadExt pw = x, bound = xb;
        rep.exact_decay = true;
        for (long n = 0; n <= n_max; ++n) {
                rep.dist.push_back(qx_dist_int(pw));
                if (rep.threshold < 0 && bound < half)
                        rep.threshold = n;
                if (rep.threshold >= 0 && !(rep.dist.back() == bound))
                        rep.exact_decay = false;
                pw = pw * lam;
                bound = bound * lbar;
        }
        if (rep.threshold < 0)
                rep.exact_decay = false;
        return rep;
}

bool is_homoclinic_torus_point(const CodingSpec &bac, const QPoint &P)
{
        auto [x1, x2] = split_of_point(bac, P);
        return in_order(x2, bac.hyp.r) && in_order(x1 + qx_conj(x2), bac.hyp.r);
}

bool homoclinic_class_image_check(const CodingSpec &bac, const SymWord &w1, const SymWord &w2)
{
        if (bac.multiplicity != 1)
                throw std::invalid_argument("homoclinic_class_image_check needs a bijective coding");
        Compactum c = bac.compactum();
        bool lhs = is_homoclinic_word(word_sub(w1, w2, c), c);
        QPoint a = phi_eval(bac, w1), b = phi_eval(bac, w2);
        bool rhs = is_homoclinic_torus_point(bac, torus_mod({a[0] - b[0], a[1] - b[1]}));
        return lhs == rhs;
}

} // namespace torcode

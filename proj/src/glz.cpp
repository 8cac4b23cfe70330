#include "torcode/glz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torcode {

HypInfo is_hyperbolic(const Mat2 &M)
{
        Int dt = M.det();
        if (dt != 1 && dt != -1)
                throw std::invalid_argument("matrix " + M.str() + " has determinant " + dt.get_str() +
                                            ", expected +-1");
        HypInfo h;
        h.sigma = dt == 1 ? 1 : -1;
        h.r = M.trace();
        h.D = disc_of(h.r, h.sigma);
        h.hyperbolic = h.sigma == -1 ? h.r != 0 : abs(h.r) >= 3;
        return h;
}

HypInfo require_hyperbolic(const Mat2 &M)
{
        HypInfo h = is_hyperbolic(M);
        if (!h.hyperbolic)
                throw std::invalid_argument("matrix " + M.str() + " is not hyperbolic (trace " + h.r.get_str() +
                                            ", det " + std::to_string(h.sigma) + ")");
        return h;
}

std::pair<Mat2, bool> normalize_trace(const Mat2 &M)
{
        require_hyperbolic(M);
        if (M.trace() < 0)
                return {-M, true};
        return {M, false};
}

Mat2 companion(const Int &r, int sigma)
{
        if (sigma != 1 && sigma != -1)
                throw std::invalid_argument("sigma must be +-1");
        Mat2 C{r, 1, -sigma, 0};
        require_hyperbolic(C);
        return C;
}

Mat2 conjugator_from_solution(const Mat2 &M, const Int &x, const Int &y)
{
        return Mat2{x, y, -M.d * x + M.c * y, M.b * x - M.a * y};
}

static bool conjugates(const Mat2 &B, const Mat2 &M1, const Mat2 &M2)
{
        Int dt = B.det();
        return (dt == 1 || dt == -1) && B * M1 == M2 * B;
}

std::optional<Mat2> conjugator_to_companion(const Mat2 &M)
{
        HypInfo h = require_hyperbolic(M);
        if (h.r < 0)
                throw std::invalid_argument("conjugator_to_companion expects positive trace");
        Mat2 C = companion(h.r, h.sigma);
        BinForm f = associated_form(M);
        for (int m : {1, -1})
                for (const Vec2 &v : represent(f, m)) {
                        Mat2 B = conjugator_from_solution(M, v[0], v[1]);
                        if (conjugates(B, M, C))
                                return B;
                        if (conjugates(B.inverse(), M, C))
                                return B.inverse();
                        throw std::logic_error("conjugator_to_companion: witness from " + v[0].get_str() + "," +
                                               v[1].get_str() + " does not conjugate");
                }
        return std::nullopt;
}

static std::optional<Mat2> from_form_witness(const Mat2 &T, const Mat2 &M1, const Mat2 &M2)
{
        for (const Mat2 &B : {T.transpose(), T.transpose().inverse(), T, T.inverse()})
                if (conjugates(B, M1, M2))
                        return B;
        return std::nullopt;
}

std::optional<Mat2> is_conjugate(const Mat2 &M1, const Mat2 &M2)
{
        HypInfo h1 = require_hyperbolic(M1), h2 = require_hyperbolic(M2);
        if (h1.r != h2.r || h1.sigma != h2.sigma)
                return std::nullopt;
        BinForm f1 = associated_form(M1), f2 = associated_form(M2);
        if (auto t = properly_equivalent(f1, f2))
                if (auto B = from_form_witness(t->m, M1, M2))
                        return B;
        Mat2 J = Mat2::diag(1, -1);
        if (auto t = properly_equivalent(f1, compose(-f2, J)))
                if (auto B = from_form_witness(t->m * J, M1, M2))
                        return B;
        return std::nullopt;
}

PrimitivityInfo is_primitive(const Mat2 &M, long bound)
{
        HypInfo h = require_hyperbolic(M);
        if (h.r < 0)
                throw std::invalid_argument("is_primitive expects positive trace");
        QuadExt lam = qx_lambda(h.r, h.sigma), lamb = qx_lambda_bar(h.r, h.sigma);
        QuadExt eps = unit_group_of_order(h.r, h.sigma, (int)bound).fundamental_unit;
        long k = 0;
        QuadExt pw = eps;
        for (long j = 1; j <= bound; ++j, pw = pw * eps) {
                if (pw == lam) {
                        k = j;
                        break;
                }
                if (pw > lam)
                        break;
        }
        if (k == 0)
                throw std::runtime_error("is_primitive: lambda is not a power eps^k with k <= " +
                                         std::to_string(bound));
        PrimitivityInfo info;
        info.unit_exponent = k;
        for (long n = k; n >= 2; --n) {
                if (k % n != 0)
                        continue;
                QuadExt mu0 = qx_pow(eps, k / n);
                for (int sgn : {1, -1}) {
                        QuadExt mu = Int(sgn) * mu0;
                        if (!(qx_pow(mu, n) == lam))
                                continue;
                        QuadExt beta = (mu - qx_conj(mu)) / (lam - lamb);
                        QuadExt alpha = mu - beta * lam;
                        if (!beta.is_rational() || !alpha.is_rational())
                                throw std::logic_error("is_primitive: non-rational coefficients");
                        Rat a(alpha.p, alpha.s), b(beta.p, beta.s);
                        a.canonicalize();
                        b.canonicalize();
                        Rat e[4] = {a + b * M.a, b * M.b, b * M.c, a + b * M.d};
                        bool integral = true;
                        for (auto &x : e)
                                integral = integral && x.get_den() == 1;
                        if (!integral)
                                continue;
                        Mat2 K{e[0].get_num(), e[1].get_num(), e[2].get_num(), e[3].get_num()};
                        Int dk = K.det();
                        if ((dk != 1 && dk != -1) || !(K.pow(n) == M))
                                continue;
                        info.primitive = false;
                        info.root = K;
                        info.exponent = n;
                        return info;
                }
        }
        return info;
}

bool orbit_span_full(const Mat2 &M, const Int &x, const Int &y)
{
        require_hyperbolic(M);
        if (x == 0 && y == 0)
                throw std::invalid_argument("orbit_span_full: zero vector");
        Int v = associated_form(M)(y, -x);
        return v == 1 || v == -1;
}

Int orbit_span_lattice_index(const Mat2 &M, const Int &x, const Int &y, int span)
{
        std::vector<Vec2> vs;
        for (int n = -span; n <= span; ++n)
                vs.push_back(M.pow(n).apply(Vec2{x, y}));
        Int g = 0;
        for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j) {
                        Int m = vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0];
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
                }
        return g;
}

/* j > 0 with G = +-U^j or U^-j. */
static long automorph_power(const Mat2 &U, const Mat2 &G)
{
        Mat2 Ui = U.inverse();
        Mat2 P = U, Q = Ui;
        for (long j = 1; j <= 1000; ++j, P = P * U, Q = Q * Ui)
                if (G == P || G == -P || G == Q || G == -Q)
                        return j;
        throw std::logic_error("automorph_power: transform is not a power of the fundamental automorph");
}

std::vector<Vec2> solution_orbits(const Mat2 &M, const Int &m)
{
        HypInfo h = require_hyperbolic(M);
        BinForm f = associated_form(M);
        Mat2 U = fundamental_automorph(f);
        Mat2 Mt = M.transpose();
        Mat2 G = h.sigma == 1 ? Mt : Mt * Mt;
        long j = automorph_power(U, G);
        std::vector<Vec2> out;
        auto split = [&](const std::vector<Vec2> &reps) {
                for (const Vec2 &v : reps) {
                        Vec2 w = v;
                        for (long i = 0; i < j; ++i, w = U.apply(w))
                                out.push_back(w);
                }
        };
        split(represent(f, m));
        if (h.sigma == 1)
                split(represent(f, -m));
        return out;
}

CoverBound min_orbit_cover_bound(const Mat2 &M)
{
        require_hyperbolic(M);
        CoverBound cb{integral_minimum(associated_form(M)), ""};
        if (cb.bound > 1 && solution_orbits(M, cb.bound).size() == 1)
                cb.note = "the solutions of f_M(x,y) = +-" + cb.bound.get_str() +
                          " form a single orbit, so at least " + Int(cb.bound + 1).get_str() + " orbits are needed";
        return cb;
}

Rat frac(const Rat &x)
{
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        Rat r = x - q;
        r.canonicalize();
        return r;
}

TorusRat torus_reduce(const TorusRat &v) { return TorusRat{frac(v[0]), frac(v[1])}; }

TorusRat torus_apply(const Mat2 &M, const TorusRat &v)
{
        return torus_reduce(TorusRat{M.a * v[0] + M.b * v[1], M.c * v[0] + M.d * v[1]});
}

/* P A Q = diag(s1, s2), s1 | s2, P and Q unimodular. */
static void smith2(const Mat2 &A0, Mat2 &P, Mat2 &Q, Int &s1, Int &s2)
{
        Int A[2][2] = {{A0.a, A0.b}, {A0.c, A0.d}};
        P = Mat2::identity();
        Q = Mat2::identity();
        auto row_op = [&](int dst, int src, const Int &k) {
                for (int c = 0; c < 2; ++c)
                        A[dst][c] += k * A[src][c];
                Mat2 E = Mat2::identity();
                (dst == 0 ? E.b : E.c) = k;
                P = E * P;
        };
        auto col_op = [&](int dst, int src, const Int &k) {
                for (int r = 0; r < 2; ++r)
                        A[r][dst] += k * A[r][src];
                Mat2 E = Mat2::identity();
                (dst == 0 ? E.c : E.b) = k;
                Q = Q * E;
        };
        auto swap_rows = [&] {
                std::swap(A[0], A[1]);
                P = Mat2{0, 1, 1, 0} * P;
        };
        auto swap_cols = [&] {
                std::swap(A[0][0], A[0][1]);
                std::swap(A[1][0], A[1][1]);
                Q = Q * Mat2{0, 1, 1, 0};
        };
        for (int guard = 0; guard < 100000; ++guard) {
                int bi = -1, bj = -1;
                for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                                if (A[i][j] != 0 && (bi < 0 || abs(A[i][j]) < abs(A[bi][bj]))) {
                                        bi = i;
                                        bj = j;
                                }
                if (bi < 0)
                        break;
                if (bi == 1)
                        swap_rows();
                if (bj == 1)
                        swap_cols();
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A[1][0].get_mpz_t(), A[0][0].get_mpz_t());
                row_op(1, 0, -q);
                mpz_fdiv_q(q.get_mpz_t(), A[0][1].get_mpz_t(), A[0][0].get_mpz_t());
                col_op(1, 0, -q);
                if (A[1][0] != 0 || A[0][1] != 0)
                        continue;
                if (A[1][1] != 0 && !mpz_divisible_p(A[1][1].get_mpz_t(), A[0][0].get_mpz_t())) {
                        row_op(0, 1, 1);
                        continue;
                }
                break;
        }
        if (A[0][0] < 0) {
                A[0][0] = -A[0][0];
                P = Mat2{-1, 0, 0, 1} * P;
        }
        if (A[1][1] < 0) {
                A[1][1] = -A[1][1];
                P = Mat2{1, 0, 0, -1} * P;
        }
        s1 = A[0][0];
        s2 = A[1][1];
}

KernelGroup kernel_group(const Mat2 &B)
{
        Int dt = B.det();
        if (dt == 0)
                throw std::invalid_argument("kernel_group: singular matrix " + B.str());
        Mat2 P, Q;
        Int s[2];
        smith2(B, P, Q, s[0], s[1]);
        if (!(P * B * Q == Mat2::diag(s[0], s[1])))
                throw std::logic_error("kernel_group: Smith form check failed");
        KernelGroup K;
        K.order = abs(dt);
        /* Bv in Z^2 iff Q^-1 v in diag(1/s1, 1/s2) Z^2 */
        for (int i = 0; i < 2; ++i) {
                if (s[i] == 1)
                        continue;
                K.invariants.push_back(s[i]);
                TorusRat g{Rat(i == 0 ? Q.a : Q.b, s[i]), Rat(i == 0 ? Q.c : Q.d, s[i])};
                g[0].canonicalize();
                g[1].canonicalize();
                K.generators.push_back(torus_reduce(g));
        }
        if (K.order <= 10000) {
                std::set<TorusRat> cur{TorusRat{Rat(0), Rat(0)}};
                for (const TorusRat &g : K.generators) {
                        std::set<TorusRat> nxt;
                        for (const TorusRat &e : cur) {
                                TorusRat x = e;
                                do {
                                        nxt.insert(x);
                                        x = torus_reduce(TorusRat{x[0] + g[0], x[1] + g[1]});
                                } while (!(x == e));
                        }
                        cur = std::move(nxt);
                }
                K.elements.assign(cur.begin(), cur.end());
                if (Int(K.elements.size()) != K.order)
                        throw std::logic_error("kernel_group: element count differs from |det|");
        }
        return K;
}

bool kernel_isomorphic_under_T(const Mat2 &M, const KernelGroup &K1, const KernelGroup &K2, long bound)
{
        if (K1.order != K2.order)
                return false;
        if (K1.elements.empty() || K2.elements.empty())
                throw std::invalid_argument("kernel_isomorphic_under_T: element lists required");
        for (long n = -bound; n <= bound; ++n) {
                Mat2 P = M.pow(n);
                for (const Mat2 &S : {P, -P}) {
                        std::vector<TorusRat> img;
                        for (const auto &e : K1.elements)
                                img.push_back(torus_apply(S, e));
                        std::sort(img.begin(), img.end());
                        if (img == K2.elements)
                                return true;
                }
        }
        return false;
}

} // namespace torcode

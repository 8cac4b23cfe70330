#include "torcode/binforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace torcode {

Int BinForm::content() const
{
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
}

std::string BinForm::str() const
{
        return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

FormTransform make_transform(const Mat2 &m)
{
        Int d = m.det();
        if (d != 1 && d != -1)
                throw std::invalid_argument("transform " + m.str() + " is not unimodular");
        return FormTransform{m, d == 1 ? 1 : -1};
}

BinForm compose(const BinForm &f, const Mat2 &t)
{
        return BinForm{f(t.a, t.c), 2 * f.a * t.a * t.b + f.b * (t.a * t.d + t.b * t.c) + 2 * f.c * t.c * t.d,
                       f(t.b, t.d)};
}

BinForm associated_form(const Mat2 &M)
{
        Int dt = M.det();
        if (dt != 1 && dt != -1)
                throw std::invalid_argument("matrix " + M.str() + " is not unimodular");
        Int r = M.trace();
        bool hyp = (dt == -1) ? r != 0 : abs(r) >= 3;
        if (!hyp)
                throw std::invalid_argument("matrix " + M.str() + " is not hyperbolic");
        return BinForm{M.b, -(M.a - M.d), -M.c};
}

std::pair<Mat2, Mat2> theta_preimage(const BinForm &f)
{
        Int disc = f.disc();
        for (int sigma : {-1, 1}) {
                Int r2 = disc + 4 * sigma;
                if (r2 <= 0 || !is_square(r2))
                        continue;
                Int r = isqrt(r2);
                Mat2 out[2];
                for (int k = 0; k < 2; ++k) {
                        Int tr = k == 0 ? r : Int(-r);
                        Int a = (tr - f.b) / 2;
                        out[k] = Mat2{a, f.a, -f.c, a + f.b};
                        if (out[k].det() != sigma)
                                throw std::logic_error("theta_preimage: determinant mismatch");
                }
                return {out[0], out[1]};
        }
        throw std::invalid_argument("form " + f.str() + " has discriminant " + disc.get_str() +
                                    ", which is not of the shape r^2 +- 4");
}

static void check_indefinite(const BinForm &f)
{
        Int d = f.disc();
        if (d <= 0 || is_square(d))
                throw std::invalid_argument("form " + f.str() + " is not indefinite with non-square discriminant");
}

bool is_reduced(const BinForm &f)
{
        Int s = isqrt(f.disc());
        Int a2 = 2 * abs(f.a);
        return f.b > 0 && f.b <= s && a2 + f.b > s && a2 - f.b <= s;
}

/* t with b + 2 a t normalised for leading coefficient a. */
static Int normal_shift(const Int &a, const Int &b, const Int &s)
{
        Int aa = abs(a), m = 2 * aa, lo;
        if (aa > s)
                lo = -aa + 1;
        else
                lo = s - m + 1;
        Int off = b - lo, rem;
        mpz_fdiv_r(rem.get_mpz_t(), off.get_mpz_t(), m.get_mpz_t());
        Int bn = rem + lo;
        return (bn - b) / (2 * a);
}

static Mat2 rho_step(const BinForm &f, const Int &s, BinForm &out)
{
        Int t = normal_shift(f.c, -f.b, s);
        Mat2 step{0, -1, 1, t};
        out = compose(f, step);
        return step;
}

std::pair<BinForm, FormTransform> reduce(const BinForm &f)
{
        check_indefinite(f);
        Int s = isqrt(f.disc());
        Int t = normal_shift(f.a, f.b, s);
        Mat2 W{1, t, 0, 1};
        BinForm g = compose(f, W);
        for (long it = 0; !is_reduced(g); ++it) {
                if (it > 100000)
                        throw std::runtime_error("reduce: no reduced form reached for " + f.str());
                BinForm h;
                W = W * rho_step(g, s, h);
                g = h;
        }
        return {g, make_transform(W)};
}

ReductionCycle cycle(const BinForm &f)
{
        ReductionCycle out;
        BinForm start = reduce(f).first;
        Int s = isqrt(f.disc());
        BinForm g = start;
        do {
                BinForm h;
                Mat2 step = rho_step(g, s, h);
                out.forms.push_back(g);
                out.transforms.push_back(make_transform(step));
                g = h;
                if (out.forms.size() > 1000000)
                        throw std::runtime_error("cycle: period too long for " + f.str());
        } while (!(g == start));
        return out;
}

/* Walks f's cycle: for each position, the form and W with reduce(f) o W = form. */
template <typename Fn> static void walk_cycle(const BinForm &start, Fn fn)
{
        Int s = isqrt(start.disc());
        BinForm g = start;
        Mat2 W = Mat2::identity();
        do {
                if (fn(g, W))
                        return;
                BinForm h;
                W = W * rho_step(g, s, h);
                g = h;
        } while (!(g == start));
}

std::optional<FormTransform> properly_equivalent(const BinForm &f1, const BinForm &f2)
{
        if (f1.disc() != f2.disc())
                return std::nullopt;
        check_indefinite(f1);
        auto [g1, T1] = reduce(f1);
        auto [g2, T2] = reduce(f2);
        std::optional<FormTransform> res;
        walk_cycle(g1, [&](const BinForm &g, const Mat2 &W) {
                if (g == g2) {
                        Mat2 T = T1.m * W * T2.m.inverse();
                        res = make_transform(T);
                        return true;
                }
                return false;
        });
        if (res && !(compose(f1, res->m) == f2))
                throw std::logic_error("properly_equivalent: witness check failed");
        return res;
}

std::optional<FormTransform> equivalent(const BinForm &f1, const BinForm &f2)
{
        if (auto t = properly_equivalent(f1, f2))
                return t;
        Mat2 J = Mat2::diag(1, -1);
        auto t = properly_equivalent(f1, compose(f2, J));
        if (!t)
                return std::nullopt;
        FormTransform res = make_transform(t->m * J);
        if (!(compose(f1, res.m) == f2))
                throw std::logic_error("equivalent: witness check failed");
        return res;
}

Int integral_minimum(const BinForm &f)
{
        ReductionCycle cyc = cycle(f);
        Int best = abs(cyc.forms[0].a);
        for (const auto &g : cyc.forms)
                best = std::min(best, Int(abs(g.a)));
        return best;
}

Int brute_min(const BinForm &f, long bound)
{
        Int best = -1;
        for (long x = -bound; x <= bound; ++x)
                for (long y = 0; y <= bound; ++y) {
                        if (y == 0 && x <= 0)
                                continue;
                        Int v = abs(f(x, y));
                        if (v != 0 && (best < 0 || v < best))
                                best = v;
                }
        return best;
}

Mat2 fundamental_automorph(const BinForm &f)
{
        auto [g, T] = reduce(f);
        Int s = isqrt(f.disc());
        BinForm h = g;
        Mat2 W = Mat2::identity();
        do {
                BinForm nxt;
                W = W * rho_step(h, s, nxt);
                h = nxt;
        } while (!(h == g));
        Mat2 U = T.m * W * T.m.inverse();
        if (!(compose(f, U) == f))
                throw std::logic_error("fundamental_automorph: check failed");
        return U;
}

static Int norm1(const Vec2 &v) { return abs(v[0]) + abs(v[1]); }

static bool better(const Vec2 &u, const Vec2 &v)
{
        Int nu = norm1(u), nv = norm1(v);
        if (nu != nv)
                return nu < nv;
        auto lead = [](const Vec2 &w) { return w[0] != 0 ? sgn(w[0]) > 0 : sgn(w[1]) > 0; };
        bool lu = lead(u), lv = lead(v);
        if (lu != lv)
                return lu;
        return std::tie(u[0], u[1]) < std::tie(v[0], v[1]);
}

Vec2 canonical_in_orbit(const Vec2 &v, const Mat2 &U)
{
        Mat2 Ui = U.inverse();
        Vec2 cur = v;
        for (;;) {
                Vec2 a = U.apply(cur), b = Ui.apply(cur);
                Vec2 nxt = norm1(a) < norm1(b) ? a : b;
                if (norm1(nxt) < norm1(cur))
                        cur = nxt;
                else
                        break;
        }
        Vec2 best = cur;
        Vec2 fw = cur, bw = cur;
        for (int i = 0; i < 3; ++i) {
                fw = U.apply(fw);
                bw = Ui.apply(bw);
                for (const Vec2 &w : {fw, bw})
                        if (better(w, best))
                                best = w;
        }
        Vec2 neg{-best[0], -best[1]};
        if (better(neg, best))
                best = neg;
        return best;
}

std::vector<Vec2> represent(const BinForm &f, const Int &m)
{
        check_indefinite(f);
        if (m == 0)
                throw std::invalid_argument("represent: m must be nonzero");
        if (4 * m * m >= f.disc())
                throw std::domain_error("represent: |m| = " + Int(abs(m)).get_str() +
                                        " is outside the supported range 4 m^2 < disc = " + f.disc().get_str());
        auto [g0, T] = reduce(f);
        Mat2 U = fundamental_automorph(f);
        std::vector<Vec2> out;
        Int am = abs(m);
        for (Int g = 1; g * g <= am; ++g) {
                if (!mpz_divisible_p(m.get_mpz_t(), Int(g * g).get_mpz_t()))
                        continue;
                Int mp = m / (g * g);
                walk_cycle(g0, [&](const BinForm &h, const Mat2 &W) {
                        if (h.a == mp) {
                                Mat2 V = T.m * W;
                                Vec2 v{g * V.a, g * V.c};
                                Vec2 c = canonical_in_orbit(v, U);
                                if (std::find(out.begin(), out.end(), c) == out.end())
                                        out.push_back(c);
                        }
                        return false;
                });
        }
        for (const auto &v : out)
                if (f(v[0], v[1]) != m)
                        throw std::logic_error("represent: produced a non-solution");
        std::sort(out.begin(), out.end(), [](const Vec2 &u, const Vec2 &v) { return better(u, v); });
        return out;
}

std::vector<Vec2> brute_represent(const BinForm &f, const Int &m, long bound)
{
        std::vector<Vec2> out;
        for (long x = -bound; x <= bound; ++x)
                for (long y = -bound; y <= bound; ++y)
                        if (f(x, y) == m)
                                out.push_back(Vec2{x, y});
        return out;
}

AutomorphInfo automorph_generator(const BinForm &f)
{
        if (!f.is_primitive())
                throw std::invalid_argument("form " + f.str() + " is not primitive (content " +
                                            f.content().get_str() + "); its automorphs are those of the primitive part");
        Mat2 M = theta_preimage(f).first;
        Mat2 G = M.det() == 1 ? M.transpose() : M.transpose().pow(2);
        if (!(compose(f, G) == f))
                throw std::logic_error("automorph_generator: check failed");
        AutomorphInfo info{make_transform(G), false};
        if (f.disc() == 5)
                info.exceptional = equivalent(f, BinForm{1, -3, 1}).has_value();
        return info;
}

Int power_form_factor(const Int &r, int sigma, long n)
{
        if (n < 1)
                throw std::invalid_argument("power_form_factor: n must be >= 1");
        QuadExt l = qx_lambda(r, sigma), lb = qx_lambda_bar(r, sigma);
        QuadExt q = (qx_pow(l, n) - qx_pow(lb, n)) / qx_sqrtD(l.D);
        if (!q.is_rational() || q.s != 1)
                throw std::logic_error("power_form_factor: non-integral result");
        return q.p;
}

} // namespace torcode

// Acceptance suite: one PASS/FAIL line per criterion.

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace torcode;

namespace {

struct Outcome {
        bool ok = true;
        std::string detail;

        void require(bool cond, const std::string &what)
        {
                if (!cond && ok) {
                        ok = false;
                        detail = what;
                }
        }
};

Mat2 random_hyperbolic(std::mt19937_64 &rng, long height)
{
        for (;;) {
                Mat2 M = oracle::random_unimodular(rng, height);
                if (is_hyperbolic(M).hyperbolic)
                        return normalize_trace(M).first;
        }
}

long max_entry(const Mat2 &M)
{
        return std::max({Int(abs(M.a)), Int(abs(M.b)), Int(abs(M.c)), Int(abs(M.d))}).get_si();
}

/* conjugate of C by a random unimodular matrix, entries of the result bounded by height */
Mat2 random_conjugate(std::mt19937_64 &rng, const Mat2 &C, long height)
{
        for (;;) {
                Mat2 B = oracle::random_unimodular(rng, 6);
                Mat2 M = B * C * B.inverse();
                if (max_entry(M) <= height)
                        return M;
        }
}

Outcome fibonacci_example()
{
        Outcome o;
        Mat2 F{1, 1, 1, 0};
        CodingSpec five = spec_from_planar(F, qx_sqrtD(5));
        CodingSpec bac = spec_from_planar(F, qx_int(1, 5));
        o.require(five.point.xi == qx_int(1, 5), "planar xi is not 1");
        o.require(five.multiplicity == 5, "multiplicity " + five.multiplicity.get_str());
        o.require(bac.multiplicity == 1, "reference coding not bijective");
        KernelGroup k = kernel_of_coding(five, bac);
        std::vector<TorusRat> want{{Rat(0), Rat(0)}, {Rat(1, 5), Rat(2, 5)}, {Rat(2, 5), Rat(4, 5)},
                                   {Rat(3, 5), Rat(1, 5)}, {Rat(4, 5), Rat(3, 5)}};
        o.require(k.elements == want, "kernel differs");
        std::vector<TorusRat> cyc{{Rat(1, 5), Rat(2, 5)}, {Rat(3, 5), Rat(1, 5)}, {Rat(4, 5), Rat(3, 5)},
                                  {Rat(2, 5), Rat(4, 5)}};
        for (size_t i = 0; i < cyc.size(); ++i)
                o.require(torus_apply(F, cyc[i]) == cyc[(i + 1) % cyc.size()], "matrix action cycle broken");
        o.detail = o.ok ? "K=5, kernel of order 5, 4-cycle" : o.detail;
        return o;
}

Outcome bac_table()
{
        Outcome o;
        Mat2 M1{3, 5, 1, 2};
        BacFamily f1 = enumerate_bac(M1, 0, 0);
        o.require(f1.exists && f1.base_solution == Vec2{0, 1}, "[[3,5],[1,2]] base solution");
        auto B = conjugator_to_companion(M1);
        o.require(B && *B == Mat2{0, 1, 1, -3}, "conjugator differs");
        o.require(B && oracle::conjugates(*B, M1, companion(5, 1)), "conjugator does not verify");

        for (auto [M, m] : std::vector<std::pair<Mat2, long>>{{{5, 3, 2, 1}, 2}, {{27, 11, 5, 2}, 5}, {{80, 9, 9, 1}, 9}}) {
                o.require(!enumerate_bac(M, 0, 0).exists, M.str() + " admits a BAC");
                o.require(!conjugator_to_companion(M), M.str() + " conjugate to companion");
                o.require(integral_minimum(associated_form(M)) == m, M.str() + " minimum");
        }
        Mat2 E{80, 9, 9, 1};
        MacFamily mac = enumerate_mac(E);
        o.require(solution_orbits(E, 9).size() == 2, "orbit count");
        o.require(mac.kernels.size() == 2 && !kernel_isomorphic_under_T(E, mac.kernels[0], mac.kernels[1]),
                  "kernels are T-isomorphic");
        o.require(mac.kernel_classes == 2, "kernel classes");
        if (o.ok)
                o.detail = "yes/no/no/no, two non-isomorphic kernels";
        return o;
}

Outcome small_discriminants()
{
        Outcome o;
        std::mt19937_64 rng(2024);
        size_t checked = 0;
        for (auto [r, sigma] : std::vector<std::pair<long, int>>{{1, -1}, {2, -1}, {3, -1}, {3, 1}, {4, 1}}) {
                Mat2 C = companion(r, sigma);
                for (int i = 0; i < 100; ++i) {
                        Mat2 M = random_conjugate(rng, C, 30);
                        auto B = conjugator_to_companion(normalize_trace(M).first);
                        o.require(B.has_value(), "no conjugator for " + M.str());
                        if (B)
                                o.require(oracle::conjugates(*B, normalize_trace(M).first, C),
                                          "witness fails for " + M.str());
                        ++checked;
                }
        }
        // D = 20: companion (4,-1) or the cube of the Fibonacci matrix; D = 32: C_{6,1} or [[2,1],[1,0]]^2
        struct Rep {
                Mat2 M;
                bool primitive;
                bool companion_conj;
        };
        std::vector<std::vector<Rep>> classes{
            {{Mat2{4, 1, 1, 0}, true, true}, {Mat2{3, 2, 2, 1}, false, false}},
            {{companion(6, 1), true, true}, {Mat2{2, 1, 1, 0}.pow(2), false, false}}};
        for (const auto &reps : classes) {
                o.require(!is_conjugate(reps[0].M, reps[1].M), "representatives are conjugate");
                for (size_t j = 0; j < reps.size(); ++j) {
                        const Rep &rep = reps[j];
                        for (int i = 0; i < 20; ++i) {
                                Mat2 M = normalize_trace(random_conjugate(rng, rep.M, 60)).first;
                                o.require(is_primitive(M).primitive == rep.primitive, "primitivity of " + M.str());
                                o.require(conjugator_to_companion(M).has_value() == rep.companion_conj,
                                          "companion decision for " + M.str());
                                auto W = is_conjugate(M, rep.M);
                                o.require(W && oracle::conjugates(*W, M, rep.M), "class of " + M.str());
                                o.require(!is_conjugate(M, reps[1 - j].M), "two classes for " + M.str());
                        }
                }
        }
        o.require(!is_primitive(Mat2{3, 2, 2, 1}).primitive && is_primitive(Mat2{3, 2, 2, 1}).root == Mat2{1, 1, 1, 0},
                  "cube root");
        o.require(is_primitive(Mat2{5, 2, 2, 1}).root == Mat2{2, 1, 1, 0}, "square root");
        if (o.ok)
                o.detail = std::to_string(checked) + " conjugates verified; D=20, 32 split into two classes";
        return o;
}

bool represents_long(long a, long b, long c, long m, long bound)
{
        for (long x = -bound; x <= bound; ++x)
                for (long y = -bound; y <= bound; ++y)
                        if (a * x * x + b * x * y + c * y * y == m)
                                return true;
        return false;
}

Outcome form_facts()
{
        Outcome o;
        BinForm f{5, -1, -1};
        o.require(!represent(f, -1).empty(), "cycle method misses -1");
        o.require(represent(f, 1).empty(), "cycle method finds +1");
        o.require(represents_long(5, -1, -1, -1, 1000), "brute force misses -1");
        o.require(!represents_long(5, -1, -1, 1, 1000), "brute force finds +1");
        o.require(!BinForm{6, -2, -6}.is_primitive(), "6x^2-2xy-6y^2 primitive");
        Mat2 P{7, 6, 6, 5};
        o.require(associated_form(P) == BinForm{6, -2, -6}, "form of [[7,6],[6,5]]");
        o.require(is_primitive(P).primitive, "[[7,6],[6,5]] not primitive");
        std::mt19937_64 rng(4);
        for (int i = 0; i < 200; ++i) {
                Mat2 M = random_hyperbolic(rng, 25);
                BinForm g = associated_form(M);
                Mat2 F{2 * g.a, g.b, g.b, 2 * g.c};
                o.require(M * F * M.transpose() == M.det() * F, "identity fails for " + M.str());
        }
        if (o.ok)
                o.detail = "represents -1 only (bound 1000); identity on 200 matrices";
        return o;
}

Outcome multiplicity_agreement()
{
        Outcome o;
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> d(-12, 12);
        size_t n = 0;
        for (int i = 0; i < 10; ++i) {
                Mat2 M = random_hyperbolic(rng, 9);
                BinForm f = associated_form(M);
                for (int j = 0; j < 50; ++j) {
                        long p = d(rng), q = d(rng);
                        if (!p && !q)
                                q = 1;
                        CodingSpec s = make_spec(M, p, q);
                        QuadExt K = qx_int(abs(f(Int(p), Int(q))), s.hyp.D);
                        o.require(determinant_area(s) == K, "determinant for " + M.str());
                        o.require(fundamental_domain(s).area == K, "area for " + M.str());
                        ++n;
                }
        }
        for (long r = 1; r <= 8; ++r)
                for (int sigma : {-1, 1})
                        if (sigma == -1 || r >= 3)
                                o.require(Pi_area(compactum_for(r, sigma)) == qx_sqrtD(disc_of(r, sigma)), "area of Pi");
        for (auto [r, sigma] : std::vector<std::pair<long, int>>{{1, -1}, {2, -1}, {3, -1}, {3, 1}, {5, 1}}) {
                Int D = disc_of(r, sigma);
                CodingSpec l = spec_from_planar(companion(r, sigma), Int(-sigma) * qx_sqrtD(D));
                o.require(l.multiplicity == D, "sqrt D parameter multiplicity");
        }
        if (o.ok)
                o.detail = std::to_string(n) + " parameters; area(Pi) = sqrt D; xi = -sigma is D-to-1";
        return o;
}

Outcome units_and_exceptional()
{
        Outcome o;
        BacFamily th = enumerate_bac(companion(3, 1), -3, 3);
        QuadExt theta = qx_make(1, 1, 2, 5), rt = qx_sqrtD(5);
        o.require(th.exists && th.exceptional && th.generator == theta, "theta family");
        QuadExt base = th.specs.empty() ? qx_int(1, 5) : th.specs.front().point.xi * rt / qx_pow(theta, th.exponents.front());
        for (size_t i = 0; i < th.specs.size(); ++i) {
                o.require(th.specs[i].multiplicity == 1, "multiplicity in theta family");
                o.require(th.specs[i].point.xi * rt == Int(th.signs[i]) * qx_pow(theta, th.exponents[i]) * base,
                          "parameter is not a theta power");
        }
        o.require(th.specs.size() == 14, "k range");
        o.require(unit_group_of_order(4, -1).exponent_index == 3, "exponent index");
        for (long D : {5L, 8L, 12L, 13L, 20L, 21L, 29L, 32L, 40L}) {
                auto [x, y] = oracle::pell_brute(D);
                o.require(pell_fundamental_unit(D) == qx_make(x, y, 2, D), "Pell D=" + std::to_string(D));
        }
        if (o.ok)
                o.detail = "theta powers k=-3..3, index 3, Pell for 9 discriminants";
        return o;
}

Outcome symbolic_suite()
{
        Outcome o;
        for (long r = 1; r <= 6; ++r)
                for (int sigma : {-1, 1}) {
                        if (sigma == 1 && r < 3)
                                continue;
                        DerivedCompactum dc = derive_compactum(r, sigma);
                        o.require(dc.compactum == compactum_for(r, sigma), "derived compactum");
                        o.require(dc.forbidden == forbidden_family(dc.compactum, 6), "forbidden words");
                        ParryData p = parry_expansion(r, sigma);
                        std::vector<long> seq = p.prefix;
                        while (seq.size() < 20 && !p.period.empty())
                                seq.insert(seq.end(), p.period.begin(), p.period.end());
                        seq.resize(20, 0);
                        o.require(seq == oracle::greedy_one(r, sigma, 20), "Parry expansion");
                }
        std::mt19937_64 rng(7);
        std::vector<std::pair<long, int>> fields{{1, -1}, {2, -1}, {3, -1}, {3, 1}, {4, 1}};
        for (int i = 0; i < 500; ++i) {
                auto [r, sigma] = fields[i % fields.size()];
                Compactum c = compactum_for(r, sigma);
                std::vector<long> raw(1 + rng() % 9);
                for (auto &x : raw)
                        x = rng() % (2 * r + 2);
                long off = (long)(rng() % 13) - 6;
                SymWord w = normalize(raw, off, c);
                QuadExt v = qx_int(0, disc_of(r, sigma));
                for (size_t k = 0; k < raw.size(); ++k)
                        v = v + Int(raw[k]) * qx_pow(qx_lambda(r, sigma), -(off + (long)k));
                o.require(value(w, c) == v, "normalize changes the value");
                o.require(is_admissible(w, c), "normalize not admissible");
                if (w.finite())
                        o.require(normalize(w.core, w.offset, c) == w, "normalize not idempotent");
                else
                        o.require(normalize_value(value(w, c), c) == w, "normalize not idempotent");
        }
        for (auto [r, sigma] : fields) {
                Compactum c = compactum_for(r, sigma);
                for (long n = -5; n <= 5; ++n) {
                        QuadExt a = value(unit_word(n - 1), c), b = value(unit_word(n), c), d = value(unit_word(n + 1), c);
                        if (sigma == -1)
                                o.require(Int(r) * b + d == a, "unit relation");
                        else
                                o.require(Int(r) * b == a + d, "sofic unit relation");
                }
        }
        for (int i = 0; i < 100; ++i) {
                auto [r, sigma] = fields[i % fields.size()];
                CodingSpec s = enumerate_bac(companion(r, sigma), 0, 0).specs.front();
                Compactum c = s.compactum();
                std::vector<long> r1(6), r2(6);
                for (auto &x : r1)
                        x = rng() % (c.digit_max() + 1);
                for (auto &x : r2)
                        x = rng() % (c.digit_max() + 1);
                SymWord a = normalize(r1, -3, c), b = normalize(r2, -1, c);
                QPoint pa = phi_eval(s, a), pb = phi_eval(s, b), ps = phi_eval(s, word_add(a, b, c));
                o.require(ps == torus_mod({pa[0] + pb[0], pa[1] + pb[1]}), "phi is not additive");
        }
        if (o.ok)
                o.detail = "r<=6 compacta, 500 normalizations, 100 homomorphism pairs";
        return o;
}

Outcome decode_round_trip()
{
        Outcome o;
        CodingSpec s = spec_from_planar(Mat2{1, 1, 1, 0}, qx_int(1, 5));
        std::vector<TorusRat> targets{{Rat(0), Rat(0)}, {Rat(1, 5), Rat(2, 5)}, {Rat(3, 5), Rat(1, 5)},
                                      {Rat(4, 5), Rat(3, 5)}, {Rat(2, 5), Rat(4, 5)}};
        std::mt19937_64 rng(8);
        for (int i = 0; i < 50; ++i) {
                long den = 1 + rng() % 64;
                Rat x(rng() % den, den), y(rng() % den, den);
                x.canonicalize();
                y.canonicalize();
                targets.push_back({x, y});
        }
        QuadExt bound = qx_pow(qx_lambda(1, -1), -38);
        int exact = 0;
        for (const auto &t : targets) {
                QPoint P{qx_rat(t[0], 5), qx_rat(t[1], 5)};
                Decoded d = decode(s, P, 40);
                QPoint img = phi_eval(s, d.word);
                bool eq = img == torus_mod(P);
                bool near = qx_dist_int(img[0] - P[0]) <= bound && qx_dist_int(img[1] - P[1]) <= bound;
                exact += eq;
                o.require(eq || near, "decode misses (" + t[0].get_str() + "," + t[1].get_str() + ")");
        }
        if (o.ok)
                o.detail = std::to_string(targets.size()) + " targets, " + std::to_string(exact) +
                           " exact, rest within lambda^-38";
        return o;
}

Outcome pisot_decay()
{
        Outcome o;
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<long> d(-9, 9);
        std::vector<std::pair<long, int>> fields{{1, -1}, {2, -1}, {3, 1}, {5, 1}};
        int members = 0, non = 0;
        for (int i = 0; i < 20; ++i) {
                auto [r, sigma] = fields[i % 4];
                Int D = disc_of(r, sigma);
                long m = d(rng), n = d(rng);
                if (!m && !n)
                        m = 1;
                QuadExt x = (qx_int(m, D) + Int(n) * qx_lambda(r, sigma)) / qx_sqrtD(D);
                DecayReport rep = homoclinic_decay_check(x, r, sigma, 80);
                bool member = pisot_member(x, r, sigma);
                o.require(member, "member rejected");
                o.require(rep.threshold >= 0 && rep.exact_decay, "decay not exact past threshold");
                members += member && rep.exact_decay;
        }
        for (int i = 0; i < 10; ++i) {
                auto [r, sigma] = fields[i % 4];
                Int D = disc_of(r, sigma);
                long m = 1, n = rng() % 5;
                QuadExt x = (qx_int(m, D) + Int(n) * qx_lambda(r, sigma)) / (qx_int(3 + i % 4, D) * qx_sqrtD(D));
                if (i % 2)
                        x = qx_make(m, 0, 7, D);
                DecayReport rep = homoclinic_decay_check(x, r, sigma, 80);
                bool member = pisot_member(x, r, sigma);
                o.require(!member, "non-member accepted");
                o.require(!rep.exact_decay, "non-member decays exactly");
                non += !member && !rep.exact_decay;
        }
        if (o.ok)
                o.detail = std::to_string(members) + " members decay exactly, " + std::to_string(non) +
                           " non-members fail both";
        return o;
}

Outcome orbit_spans()
{
        Outcome o;
        std::mt19937_64 rng(10);
        std::uniform_int_distribution<long> d(-6, 6);
        int full = 0;
        for (int i = 0; i < 500; ++i) {
                Mat2 M = random_hyperbolic(rng, i % 2 ? 3 : 8);
                long x = d(rng), y = d(rng);
                if (!x && !y)
                        y = 1;
                bool lib = orbit_span_full(M, x, y);
                o.require(lib == (oracle::span_index(M, x, y, 3) == 1), "span disagrees for " + M.str());
                full += lib;
        }
        CoverBound cb = min_orbit_cover_bound(Mat2{5, 3, 2, 1});
        o.require(cb.bound == 2, "cover bound");
        o.require(!cb.note.empty(), "missing refinement note");
        if (o.ok)
                o.detail = "500 samples (" + std::to_string(full) + " full); bound 2 with note";
        return o;
}

} // namespace

int main()
{
        struct Criterion {
                int id;
                double budget; /* seconds, 0 = none */
                std::function<Outcome()> run;
        };
        std::vector<Criterion> all{{1, 1.0, fibonacci_example},       {2, 5.0, bac_table},
                                   {3, 0, small_discriminants},       {4, 0, form_facts},
                                   {5, 0, multiplicity_agreement},    {6, 0, units_and_exceptional},
                                   {7, 0, symbolic_suite},            {8, 10.0, decode_round_trip},
                                   {9, 0, pisot_decay},               {10, 0, orbit_spans}};
        int failed = 0;
        for (const auto &c : all) {
                auto t0 = std::chrono::steady_clock::now();
                Outcome o;
                try {
                        o = c.run();
                } catch (const std::exception &e) {
                        o.ok = false;
                        o.detail = std::string("exception: ") + e.what();
                }
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (c.budget > 0 && secs >= c.budget) {
                        o.ok = false;
                        o.detail += " (over the time budget)";
                }
                failed += !o.ok;
                std::printf("criterion %d: %s (%.3f s) %s\n", c.id, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
        }
        return failed ? 1 : 0;
}

#include "torcode/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace torcode {

json to_json(const Int &x)
{
        if (x.fits_slong_p())
                return json(static_cast<long long>(x.get_si()));
        return json(x.get_str());
}

std::string rat_str(const Rat &x) { return x.get_str(); }

json to_json(const Rat &x) { return json(rat_str(x)); }

json to_json(const QuadExt &x)
{
        return json{{"p", to_json(x.p)}, {"q", to_json(x.q)}, {"s", to_json(x.s)},
                    {"D", to_json(x.D)}, {"approx", x.approx(15)}};
}

json to_json(const Mat2 &m)
{
        return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const Vec2 &v) { return json::array({to_json(v[0]), to_json(v[1])}); }

json to_json(const BinForm &f)
{
        return json{{"a", to_json(f.a)}, {"b", to_json(f.b)}, {"c", to_json(f.c)}, {"disc", to_json(f.disc())}};
}

json to_json(const FormTransform &t) { return json{{"m", to_json(t.m)}, {"det", t.det}}; }

std::string torus_rat_str(const TorusRat &v) { return rat_str(v[0]) + "," + rat_str(v[1]); }

json to_json(const KernelGroup &k)
{
        json g = json::array(), e = json::array(), inv = json::array();
        for (const auto &x : k.generators)
                g.push_back(torus_rat_str(x));
        for (const auto &x : k.elements)
                e.push_back(torus_rat_str(x));
        for (const auto &x : k.invariants)
                inv.push_back(to_json(x));
        return json{{"order", to_json(k.order)}, {"invariants", inv}, {"generators", g}, {"elements", e}};
}

json to_json(const HomoclinicPoint &h)
{
        return json{{"p", to_json(h.p)}, {"q", to_json(h.q)}, {"n", to_json(h.n)},
                    {"k", to_json(h.k)}, {"xi", to_json(h.xi)}, {"eta", to_json(h.eta)},
                    {"toral", to_json(h.toral)}};
}

json to_json(const CodingSpec &s)
{
        return json{{"matrix", to_json(s.matrix)}, {"p", to_json(s.point.p)}, {"q", to_json(s.point.q)},
                    {"K", to_json(s.multiplicity)},  {"xi", to_json(s.point.xi)}, {"eta", to_json(s.point.eta)}};
}

std::string point_str(const QPoint &P) { return "(" + P[0].str() + ", " + P[1].str() + ")"; }

json to_json(const QPoint &P)
{
        return json{{"x", to_json(P[0])}, {"y", to_json(P[1])}, {"text", point_str(P)}};
}

json to_json(const SymWord &w)
{
        json core = json::array();
        for (long d : w.core)
                core.push_back(d);
        return json{{"text", word_to_string(w)},
                    {"offset", w.offset},
                    {"core", core},
                    {"left", tail_name(w.left)},
                    {"right", tail_name(w.right)}};
}

json to_json(const DomainPolygon &p)
{
        json v = json::array();
        for (const auto &x : p.vertices)
                v.push_back(json::array({to_json(x[0]), to_json(x[1])}));
        return json{{"vertices", v}, {"area", to_json(p.area)}};
}

std::string vec_str(const Vec2 &v) { return "(" + v[0].get_str() + "," + v[1].get_str() + ")"; }

static std::vector<std::string> split_commas(const std::string &s, size_t n, const char *what)
{
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
                item.erase(0, item.find_first_not_of(" \t"));
                item.erase(item.find_last_not_of(" \t") + 1);
                out.push_back(item);
        }
        if (out.size() != n)
                throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) +
                                            " comma-separated entries, got \"" + s + "\"");
        return out;
}

static Int parse_int(const std::string &s)
{
        Int x;
        if (s.empty() || x.set_str(s, 10) != 0)
                throw std::invalid_argument("bad integer \"" + s + "\"");
        return x;
}

static Rat parse_rat(const std::string &s)
{
        size_t slash = s.find('/');
        if (slash == std::string::npos)
                return Rat(parse_int(s));
        Int n = parse_int(s.substr(0, slash)), d = parse_int(s.substr(slash + 1));
        if (d == 0)
                throw std::invalid_argument("zero denominator in \"" + s + "\"");
        Rat r(n, d);
        r.canonicalize();
        return r;
}

TorusRat parse_torus_rat(const std::string &s)
{
        auto v = split_commas(s, 2, "point");
        return TorusRat{parse_rat(v[0]), parse_rat(v[1])};
}

Vec2 parse_vec2(const std::string &s)
{
        auto v = split_commas(s, 2, "parameter");
        return Vec2{parse_int(v[0]), parse_int(v[1])};
}

BinForm parse_form(const std::string &s)
{
        auto v = split_commas(s, 3, "form");
        return BinForm{parse_int(v[0]), parse_int(v[1]), parse_int(v[2])};
}

} // namespace torcode

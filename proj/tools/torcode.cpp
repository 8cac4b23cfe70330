// torcode: command-line front end for arithmetic codings of toral automorphisms.

#include "torcode/plot.hpp"
#include "torcode/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace torcode;

namespace {

constexpr long kMaxWindow = 2000;
constexpr long kMaxBound = 20000;

struct Context {
        std::string format = "text";
        json input = json::object();
        json warnings = json::array();
};

struct ResourceError : std::runtime_error {
        using std::runtime_error::runtime_error;
};

Mat2 load_matrix(Context &ctx, const std::string &text)
{
        Mat2 M = parse_mat2(text);
        require_hyperbolic(M);
        auto [N, negated] = normalize_trace(M);
        ctx.input["matrix"] = to_json(M);
        if (negated) {
                ctx.warnings.push_back("trace of " + M.str() + " is negative; working with " + N.str() +
                                       ", which has the same homoclinic points. Codings of the input use the "
                                       "reversed compactum (reverse_map).");
                ctx.input["normalized"] = to_json(N);
        }
        return N;
}

CodingSpec default_spec(const Mat2 &M)
{
        BacFamily fam = enumerate_bac(M, 0, 0);
        if (fam.exists)
                return fam.specs.front();
        return enumerate_mac(M).specs.front();
}

CodingSpec load_spec(Context &ctx, const Mat2 &M, const std::string &param)
{
        CodingSpec s;
        if (param.empty()) {
                s = default_spec(M);
                ctx.warnings.push_back("no --param given; using " + vec_str({s.point.p, s.point.q}));
        } else {
                Vec2 v = parse_vec2(param);
                s = make_spec(M, v[0], v[1]);
        }
        ctx.input["param"] = to_json(Vec2{s.point.p, s.point.q});
        return s;
}

std::optional<CodingSpec> reference_bac(const Mat2 &M)
{
        BacFamily fam = enumerate_bac(M, 0, 0);
        if (!fam.exists)
                return std::nullopt;
        return fam.specs.front();
}

KernelGroup spec_kernel(const CodingSpec &s)
{
        if (auto bac = reference_bac(s.matrix))
                return kernel_of_coding(s, *bac);
        return kernel_group(kernel_matrix(s.matrix, {s.point.p, s.point.q}));
}

json hyp_json(const HypInfo &h)
{
        return json{{"r", to_json(h.r)}, {"sigma", h.sigma}, {"D", to_json(h.D)}};
}

json bac_json(const Mat2 &M, long k_lo, long k_hi)
{
        BacFamily fam = enumerate_bac(M, k_lo, k_hi);
        json out{{"exists", fam.exists},
                 {"exceptional", fam.exceptional},
                 {"generator", to_json(fam.generator)},
                 {"generator_power", fam.generator_power}};
        if (fam.base_solution) {
                out["base_solution"] = to_json(*fam.base_solution);
                out["conjugator"] = to_json(conjugator_to_companion(M).value());
        }
        json specs = json::array();
        for (size_t i = 0; i < fam.specs.size(); ++i) {
                json s = to_json(fam.specs[i]);
                s["k"] = fam.exponents[i];
                s["sign"] = fam.signs[i];
                specs.push_back(s);
        }
        out["specs"] = specs;
        return out;
}

json mac_json(const Mat2 &M)
{
        MacFamily fam = enumerate_mac(M);
        json specs = json::array(), kms = json::array(), kernels = json::array();
        for (const auto &s : fam.specs)
                specs.push_back(to_json(s));
        for (const auto &k : fam.kernel_matrices)
                kms.push_back(to_json(k));
        for (const auto &k : fam.kernels)
                kernels.push_back(to_json(k));
        return json{{"m", to_json(fam.m)},
                    {"specs", specs},
                    {"kernel_matrices", kms},
                    {"kernels", kernels},
                    {"kernel_classes", fam.kernel_classes}};
}

json cmd_analyze(Context &ctx, const Mat2 &M)
{
        HypInfo h = require_hyperbolic(M);
        BinForm f = associated_form(M);
        json out = hyp_json(h);
        out["form"] = to_json(f);
        out["integral_minimum"] = to_json(integral_minimum(f));
        out["companion"] = to_json(companion(h.r, h.sigma));
        out["bac"] = bac_json(M, 0, 0);
        out["mac"] = mac_json(M);
        PrimitivityInfo pr = is_primitive(M);
        out["primitive"] = pr.primitive;
        if (!pr.primitive) {
                out["root"] = to_json(*pr.root);
                out["root_exponent"] = pr.exponent;
                ctx.warnings.push_back("matrix is the " + std::to_string(pr.exponent) + "-th power of " +
                                       pr.root->str());
        }
        CoverBound cb = min_orbit_cover_bound(M);
        out["orbit_cover_bound"] = to_json(cb.bound);
        if (!cb.note.empty())
                out["orbit_cover_note"] = cb.note;
        if (out["bac"]["exceptional"].get<bool>())
                ctx.warnings.push_back("exceptional case: lambda is a proper power of the unit generator");
        return out;
}

json cmd_encode(Context &ctx, const CodingSpec &s, const std::string &word_text)
{
        SymWord w = parse_word(word_text);
        ctx.input["word"] = word_text;
        QPoint P = phi_eval(s, w);
        return json{{"spec", to_json(s)},
                    {"compactum", s.compactum().describe()},
                    {"word", to_json(w)},
                    {"point", to_json(P)}};
}

json cmd_decode(Context &ctx, const CodingSpec &s, const std::string &point_text, long window)
{
        TorusRat t = parse_torus_rat(point_text);
        ctx.input["point"] = torus_rat_str(t);
        ctx.input["window"] = window;
        if (window > kMaxWindow)
                throw ResourceError("window " + std::to_string(window) + " exceeds the limit " +
                                    std::to_string(kMaxWindow));
        QPoint target{qx_rat(t[0], s.hyp.D), qx_rat(t[1], s.hyp.D)};
        Decoded d = decode(s, target, window);
        if (!d.certified)
                throw ResourceError("decode did not reach the certified bound within the window");
        return json{{"spec", to_json(s)},
                    {"compactum", s.compactum().describe()},
                    {"word", to_json(d.word)},
                    {"image", to_json(phi_eval(s, d.word))},
                    {"exact", d.exact},
                    {"certified", d.certified},
                    {"error", json::array({to_json(d.error[0]), to_json(d.error[1])})}};
}

void check_bound(long bound)
{
        if (bound < 1)
                throw std::invalid_argument("--bound must be positive");
        if (bound > kMaxBound)
                throw ResourceError("bound " + std::to_string(bound) + " exceeds the limit " +
                                    std::to_string(kMaxBound));
}

json cmd_forms(Context &ctx, const std::string &op, const std::vector<std::string> &args, long bound)
{
        auto need = [&](size_t n) {
                if (args.size() != n)
                        throw std::invalid_argument("forms " + op + " takes " + std::to_string(n) + " argument(s)");
        };
        ctx.input["op"] = op;
        ctx.input["args"] = args;
        if (op == "reduce") {
                need(1);
                auto [g, t] = reduce(parse_form(args[0]));
                return json{{"form", to_json(g)}, {"transform", to_json(t)}};
        }
        if (op == "cycle") {
                need(1);
                ReductionCycle cyc = cycle(parse_form(args[0]));
                json forms = json::array();
                for (const auto &g : cyc.forms)
                        forms.push_back(to_json(g));
                return json{{"length", cyc.forms.size()}, {"forms", forms}};
        }
        if (op == "equiv") {
                need(2);
                BinForm f1 = parse_form(args[0]), f2 = parse_form(args[1]);
                auto proper = properly_equivalent(f1, f2);
                auto any = equivalent(f1, f2);
                json out{{"properly_equivalent", proper.has_value()}, {"equivalent", any.has_value()}};
                out["witness"] = any ? to_json(*any) : json(nullptr);
                return out;
        }
        if (op == "min") {
                need(1);
                BinForm f = parse_form(args[0]);
                json out{{"form", to_json(f)}, {"min", to_json(integral_minimum(f))}};
                if (bound > 0) {
                        check_bound(bound);
                        out["brute_min"] = to_json(brute_min(f, bound));
                        out["bound"] = bound;
                }
                return out;
        }
        if (op == "represent") {
                need(2);
                BinForm f = parse_form(args[0]);
                Int m(args[1]);
                json reps = json::array();
                for (const auto &v : represent(f, m))
                        reps.push_back(vec_str(v));
                json out{{"form", to_json(f)}, {"value", to_json(m)}, {"orbits", reps}};
                if (bound > 0) {
                        check_bound(bound);
                        json brute = json::array();
                        for (const auto &v : brute_represent(f, m, bound))
                                brute.push_back(vec_str(v));
                        out["bound"] = bound;
                        out["brute_force"] = brute;
                }
                return out;
        }
        throw std::invalid_argument("unknown forms operation \"" + op + "\"");
}

json cmd_plot(Context &ctx, const CodingSpec &s, const std::string &path)
{
        if (path.empty())
                throw std::invalid_argument("plot needs --svg PATH");
        KernelGroup k = spec_kernel(s);
        std::string svg = render_svg(s, k.elements);
        std::ofstream os(path, std::ios::binary);
        if (!os || !(os << svg))
                throw std::invalid_argument("cannot write " + path);
        ctx.input["svg"] = path;
        DomainPolygon dom = fundamental_domain(s);
        return json{{"spec", to_json(s)}, {"domain", to_json(dom)}, {"kernel", to_json(k)}, {"bytes", svg.size()}};
}

Int json_int(const json &j) { return j.is_string() ? Int(j.get<std::string>()) : Int(j.get<long>()); }

bool is_quad_json(const json &j)
{
        return j.is_object() && j.size() == 5 && j.contains("p") && j.contains("q") && j.contains("s") &&
               j.contains("D") && j.contains("approx");
}

void print_text(const json &j, const std::string &prefix, std::ostream &os)
{
        if (is_quad_json(j)) {
                QuadExt x = qx_make(json_int(j["p"]), json_int(j["q"]), json_int(j["s"]), json_int(j["D"]));
                os << prefix << ": " << x.str() << " ~ " << j["approx"].get<std::string>() << "\n";
                return;
        }
        if (j.is_object()) {
                for (const auto &[k, v] : j.items())
                        print_text(v, prefix.empty() ? k : prefix + "." + k, os);
                return;
        }
        if (j.is_array()) {
                bool flat = std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_primitive(); });
                if (flat) {
                        os << prefix << ":";
                        for (const auto &e : j)
                                os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
                        os << "\n";
                        return;
                }
                for (size_t i = 0; i < j.size(); ++i)
                        print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
                return;
        }
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Context &ctx, const std::string &command, const json &result)
{
        json doc{{"schema", kSchema},
                 {"command", command},
                 {"input", ctx.input},
                 {"warnings", ctx.warnings},
                 {"result", result}};
        if (ctx.format == "json") {
                std::cout << doc.dump(2) << "\n";
                return;
        }
        for (const auto &w : ctx.warnings)
                std::cerr << "warning: " << w.get<std::string>() << "\n";
        print_text(result, "", std::cout);
}

} // namespace

int main(int argc, char **argv)
{
        CLI::App app{"Arithmetic codings of hyperbolic toral automorphisms"};
        app.require_subcommand(1);
        Context ctx;
        app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));

        std::string matrix, param, word, point, svg, op;
        std::vector<std::string> form_args;
        long kmin = -2, kmax = 2, window = 32, bound = 0;

        auto *analyze = app.add_subcommand("analyze", "Full report for a matrix");
        auto *bac = app.add_subcommand("bac", "Bijective codings");
        auto *mac = app.add_subcommand("mac", "Minimal codings");
        auto *encode = app.add_subcommand("encode", "Coding map of a word");
        auto *decodec = app.add_subcommand("decode", "Word of a rational torus point");
        auto *forms = app.add_subcommand("forms", "Binary quadratic form tools");
        auto *plot = app.add_subcommand("plot", "SVG of the fundamental domain and kernel");
        for (auto *sc : {analyze, bac, mac, encode, decodec, plot})
                sc->add_option("--matrix", matrix, "Row-major \"a,b,c,d\"")->required();
        for (auto *sc : {encode, decodec, plot})
                sc->add_option("--param", param, "Parameter \"p,q\"");
        bac->add_option("--kmin", kmin);
        bac->add_option("--kmax", kmax);
        encode->add_option("--word", word, "Word such as \"zero|1 0 1|zero @0\"")->required();
        decodec->add_option("--point", point, "Rational point \"x,y\"")->required();
        decodec->add_option("--window", window, "Digits on each side");
        forms->add_option("op", op, "reduce|cycle|equiv|min|represent")->required();
        forms->add_option("args", form_args, "Forms \"a,b,c\" and values");
        forms->add_option("--bound", bound, "Brute-force search bound");
        plot->add_option("--svg", svg, "Output path")->required();
        for (auto *sc : {analyze, bac, mac, encode, decodec, forms, plot})
                sc->fallthrough();

        try {
                app.parse(argc, argv);
        } catch (const CLI::ParseError &e) {
                int rc = app.exit(e);
                return rc == 0 ? 0 : 1;
        }

        try {
                std::string name = app.get_subcommands().front()->get_name();
                json result;
                if (name == "forms") {
                        result = cmd_forms(ctx, op, form_args, bound);
                } else {
                        Mat2 M = load_matrix(ctx, matrix);
                        if (name == "analyze") {
                                result = cmd_analyze(ctx, M);
                        } else if (name == "bac") {
                                if (kmin > kmax || kmax - kmin > 200)
                                        throw std::invalid_argument("bad k range");
                                ctx.input["kmin"] = kmin;
                                ctx.input["kmax"] = kmax;
                                result = hyp_json(require_hyperbolic(M));
                                result["bac"] = bac_json(M, kmin, kmax);
                                if (result["bac"]["exceptional"].get<bool>())
                                        ctx.warnings.push_back(
                                            "exceptional case: lambda is a proper power of the unit generator");
                        } else if (name == "mac") {
                                result = hyp_json(require_hyperbolic(M));
                                result["mac"] = mac_json(M);
                        } else {
                                CodingSpec s = load_spec(ctx, M, param);
                                if (name == "encode")
                                        result = cmd_encode(ctx, s, word);
                                else if (name == "decode")
                                        result = cmd_decode(ctx, s, point, window);
                                else
                                        result = cmd_plot(ctx, s, svg);
                        }
                }
                emit(ctx, name, result);
                return 0;
        } catch (const ResourceError &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const std::invalid_argument &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
        } catch (const std::runtime_error &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const std::domain_error &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const std::exception &e) {
                std::cerr << "internal error: " << e.what() << "\n";
                return 3;
        }
}

#include "schema_check.hpp"

#include "torcode/serialize.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace torcode;

namespace {

struct Run {
        int code;
        std::string out;
};

Run run(const std::string &args)
{
        std::string cmd = std::string(TORCODE_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE *p = popen(cmd.c_str(), "r");
        REQUIRE(p);
        std::string out;
        std::array<char, 4096> buf;
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
                out.append(buf.data(), n);
        int status = pclose(p);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string &args)
{
        Run r = run("--format json " + args);
        REQUIRE(r.code == 0);
        return json::parse(r.out);
}

std::string slurp(const std::string &path)
{
        std::ifstream is(path, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
}

const schema::Checker &checker()
{
        static schema::Checker c = schema::Checker::load(TORCODE_SOURCE_DIR "/schema/torcode-1.schema.json");
        return c;
}

void check_schema(const json &doc)
{
        auto errs = checker().errors(nlohmann::json::parse(doc.dump()));
        for (const auto &e : errs)
                MESSAGE(e);
        CHECK(errs.empty());
}

} // namespace

TEST_CASE("cli analyze reports")
{
        json fib = run_json("analyze --matrix 1,1,1,0");
        check_schema(fib);
        CHECK(fib["schema"] == "torcode/1");
        CHECK(fib["command"] == "analyze");
        CHECK(fib["result"]["bac"]["exists"] == true);
        CHECK(fib["result"]["integral_minimum"] == 1);

        json c2 = run_json("analyze --matrix 5,3,2,1");
        check_schema(c2);
        CHECK(c2["result"]["bac"]["exists"] == false);
        CHECK(c2["result"]["integral_minimum"] == 2);
        CHECK(c2["result"]["D"] == 40);

        json ex = run_json("analyze --matrix 80,9,9,1");
        check_schema(ex);
        CHECK(ex["result"]["mac"]["m"] == 9);
        CHECK(ex["result"]["mac"]["kernel_classes"] == 2);
}

TEST_CASE("cli numbers match the library serialization")
{
        json bac = run_json("bac --matrix 3,1,-1,0 --kmin -3 --kmax 3");
        check_schema(bac);
        BacFamily fam = enumerate_bac(companion(3, 1), -3, 3);
        REQUIRE(bac["result"]["bac"]["specs"].size() == fam.specs.size());
        for (size_t i = 0; i < fam.specs.size(); ++i) {
                json lib = to_json(fam.specs[i]);
                lib["k"] = fam.exponents[i];
                lib["sign"] = fam.signs[i];
                CHECK(bac["result"]["bac"]["specs"][i].dump() == lib.dump());
        }
        CHECK(bac["result"]["bac"]["exceptional"] == true);
        CHECK(bac["warnings"].size() == 1);

        json mac = run_json("mac --matrix 27,11,5,2");
        check_schema(mac);
        MacFamily mf = enumerate_mac(Mat2{27, 11, 5, 2});
        CHECK(mac["result"]["mac"]["m"] == 5);
        for (size_t i = 0; i < mf.kernels.size(); ++i)
                CHECK(mac["result"]["mac"]["kernels"][i].dump() == to_json(mf.kernels[i]).dump());

        json enc = run_json("encode --matrix 1,1,1,0 --param 3,1 --word \"zero|1|zero @0\"");
        check_schema(enc);
        CodingSpec s = make_spec(Mat2{1, 1, 1, 0}, 3, 1);
        CHECK(enc["result"]["point"].dump() == to_json(s.point.toral).dump());
        json zero = run_json("encode --matrix 1,1,1,0 --word \"zero||zero @0\"");
        CHECK(zero["result"]["point"]["text"] == "(0, 0)");
}

TEST_CASE("cli decode")
{
        json d = run_json("decode --matrix 1,1,1,0 --point 1/5,2/5 --window 40");
        check_schema(d);
        CHECK(d["result"]["certified"] == true);
        CodingSpec s = enumerate_bac(Mat2{1, 1, 1, 0}, 0, 0).specs.front();
        Decoded lib = decode(s, {qx_rat(Rat(1, 5), 5), qx_rat(Rat(2, 5), 5)}, 40);
        CHECK(d["result"]["word"].dump() == to_json(lib.word).dump());
        json z = run_json("decode --matrix 1,1,1,0 --point 0,0");
        CHECK(z["result"]["exact"] == true);
        CHECK(z["result"]["word"]["text"] == "zero||zero @0");
}

TEST_CASE("cli forms")
{
        json m = run_json("forms min 11,-25,-5");
        check_schema(m);
        CHECK(m["result"]["min"] == 5);
        json e = run_json("forms equiv 5,-1,-1 -5,1,1");
        CHECK(e["result"]["equivalent"] == false);
        CHECK(e["result"]["witness"].is_null());
        json r = run_json("forms represent 9,-79,-9 9");
        bool has91 = false;
        for (const auto &v : r["result"]["orbits"])
                has91 = has91 || v == "(9,1)";
        CHECK(has91);
        json b = run_json("forms min 3,-4,-2 --bound 50");
        CHECK(b["result"]["min"] == b["result"]["brute_min"]);
}

TEST_CASE("cli text output agrees with json")
{
        Run text = run("analyze --matrix 80,9,9,1");
        REQUIRE(text.code == 0);
        json doc = run_json("analyze --matrix 80,9,9,1");
        CHECK(text.out.find("integral_minimum: 9\n") != std::string::npos);
        CHECK(text.out.find("mac.kernel_classes: " + doc["result"]["mac"]["kernel_classes"].dump() + "\n") !=
              std::string::npos);
        CHECK(text.out.find("D: " + doc["result"]["D"].dump() + "\n") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
        CHECK(run("analyze --matrix 1,2,3,4").code == 1);
        CHECK(run("analyze --matrix 1,1,0,1").code == 1);
        CHECK(run("analyze --matrix 1,1,1").code == 1);
        CHECK(run("bogus").code == 1);
        CHECK(run("encode --matrix 1,1,1,0 --word \"zero|1 1|zero @0\"").code == 1);
        CHECK(run("decode --matrix 1,1,1,0 --param 3,1 --point 1/5,2/5").code == 1);
        CHECK(run("decode --matrix 1,1,1,0 --point 1/5,2/5 --window 100000").code == 2);
        CHECK(run("forms min 11,-25,-5 --bound 1000000").code == 2);
        CHECK(run("forms min 3,1,-2").code == 1);
}

TEST_CASE("cli negative trace warning")
{
        json doc = run_json("analyze --matrix -1,-1,-1,0");
        check_schema(doc);
        REQUIRE(doc["warnings"].size() >= 1);
        CHECK(doc["warnings"][0].get<std::string>().find("negative") != std::string::npos);
        CHECK(doc["result"]["r"] == 1);
}

TEST_CASE("cli plot")
{
        std::string path = "cli_plot_fib.svg";
        json doc = run_json("plot --matrix 1,1,1,0 --param 3,1 --svg " + path);
        check_schema(doc);
        std::string svg = slurp(path);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("id=\"unit-square\"") != std::string::npos);
        CHECK(svg.find("id=\"omega\"") != std::string::npos);
        CHECK(svg.find("id=\"pi\"") != std::string::npos);
        size_t dots = 0;
        for (size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1))
                ++dots;
        CHECK(dots == 5);
        for (const char *lbl : {"(1/5,2/5)", "(3/5,1/5)", "(4/5,3/5)", "(2/5,4/5)"})
                CHECK(svg.find(lbl) != std::string::npos);
        CHECK(svg.find("area = 5") != std::string::npos);
        CHECK(svg == slurp(TORCODE_SOURCE_DIR "/tests/golden/fib_xi1.svg"));
        run_json("plot --matrix 1,1,1,0 --param 3,1 --svg " + path);
        CHECK(slurp(path) == svg);

        run_json("plot --matrix 1,1,1,0 --svg " + path);
        CHECK(slurp(path).find("area = 1 ") != std::string::npos);
        run_json("plot --matrix 5,1,-1,0 --svg " + path);
        CHECK(slurp(path).find("area = 1 ") != std::string::npos);
        std::remove(path.c_str());
}

TEST_CASE("cli golden outputs")
{
        for (auto [args, file] : std::vector<std::pair<std::string, std::string>>{
                 {"analyze --matrix 1,1,1,0", "analyze_fib.json"},
                 {"analyze --matrix 80,9,9,1", "analyze_80_9_9_1.json"},
                 {"bac --matrix 3,1,-1,0", "bac_theta.json"},
                 {"decode --matrix 1,1,1,0 --point 1/5,2/5 --window 40", "decode_fib.json"},
                 {"forms cycle 9,-79,-9", "forms_cycle.json"}}) {
                Run r = run("--format json " + args);
                CHECK(r.code == 0);
                CAPTURE(file);
                CHECK(r.out == slurp(TORCODE_SOURCE_DIR "/tests/golden/" + file));
        }
}

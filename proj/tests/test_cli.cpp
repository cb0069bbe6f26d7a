#include "bpf/cli.hpp"
#include "bpf/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bpf;
using bpf::test::Hq;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bpf");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> ndjson(const std::string& text) {
    std::vector<nlohmann::json> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            rows.push_back(nlohmann::json::parse(line));
        }
    }
    return rows;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bpf_test_" + name);
}

}  // namespace

TEST_SUITE("serialize") {
    TEST_CASE("report json is canonical and round-trips") {
        const auto report = catalan_quat(4, 2, fibonacci_params(Rational(1), Rational(1)));
        const std::string text = dump_canonical(to_json(report));
        CHECK(text.find("\"identity\":\"catalan_quat\"") != std::string::npos);
        CHECK(text.find(' ') == std::string::npos);
        CHECK(dump_canonical(nlohmann::json::parse(text)) == text);
        const auto lhs = hypercomplex_from_json<4>(nlohmann::json::parse(text)["lhs"]);
        CHECK(lhs == Hq({-2, -4, -6, -1}));
        CHECK_THROWS_AS(hypercomplex_from_json<4>(nlohmann::json::array({"1", "2"})),
                        std::invalid_argument);
    }

    TEST_CASE("params and rationals") {
        const Params p(Rational(1, 2), Rational(3), Rational(-1), Rational(4));
        CHECK(dump_canonical(to_json(p)) == R"({"a":"1/2","b":"3","w0":"-1","w1":"4"})");
        const QuadraticElement x(Rational(1), Rational(-2, 3), QuadraticContext(Rational(5)));
        CHECK(to_json(x) == "1-2/3*sqrt(5)");
    }

    TEST_CASE("csv rows") {
        CHECK(csv_header() == "identity,a,b,w0,w1,indices,equal,hypothesis,gating,note");
        const auto report = cassini_quat(3, fibonacci_params(Rational(1), Rational(1)));
        const std::string row = csv_row(report);
        CHECK(row.rfind("cassini_quat,1,1,0,1,", 0) == 0);
        CHECK(row.find("n=3") != std::string::npos);
        CHECK(row.find("outside corollary hypothesis") != std::string::npos);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("default grid") {
        const auto grid = cli::default_grid();
        REQUIRE(grid.size() == 24);
        CHECK(grid[0] == fibonacci_params(Rational(1), Rational(1)));
        CHECK(grid[1] == lucas_params(Rational(1), Rational(1)));
        CHECK(grid[23] == Params(Rational(1, 2), Rational(3), Rational(1), Rational(4)));
    }

    TEST_CASE("grid parsing") {
        const auto g = cli::parse_grid("1,1,0,1;2,3,1/2,4");
        REQUIRE(g.size() == 2);
        CHECK(g[1].w0() == Rational(1, 2));
        CHECK_THROWS_AS(cli::parse_grid("1,1,0"), std::invalid_argument);
        CHECK_THROWS_AS(cli::parse_grid(""), std::invalid_argument);
        CHECK_THROWS_AS(cli::parse_grid("1,-4,0,1"), std::invalid_argument);
    }

    TEST_CASE("worker count from environment") {
        ::setenv("BPF_WORKERS", "3", 1);
        CHECK(cli::worker_count_from_env() == 3);
        ::setenv("BPF_WORKERS", "zero", 1);
        CHECK(cli::worker_count_from_env() >= 1);
        ::unsetenv("BPF_WORKERS");
    }

    TEST_CASE("table rows") {
        const auto r = run_cli({"table", "--a", "1", "--b", "1", "--w0", "0", "--w1", "1", "--n-max", "5"});
        CHECK(r.code == 0);
        const auto rows = ndjson(r.out);
        REQUIRE(rows.size() == 6);
        std::vector<std::string> w;
        for (const auto& row : rows) {
            w.push_back(row["w"]);
        }
        CHECK(w == std::vector<std::string>{"0", "1", "1", "2", "3", "5"});
        CHECK(rows[0]["W"] == nlohmann::json::array({"0", "1", "1", "2"}));
        CHECK(rows[0]["OW"].size() == 8);

        const auto csv = run_cli({"table", "--a", "2", "--b", "1", "--n-max", "3", "--output", "csv"});
        CHECK(csv.code == 0);
        std::istringstream lines(csv.out);
        std::string line;
        std::getline(lines, line);
        CHECK(line.rfind("a,b,w0,w1,n,w,", 0) == 0);
        std::vector<std::string> ws;
        while (std::getline(lines, line)) {
            std::vector<std::string> fields;
            std::stringstream ss(line);
            std::string f;
            while (std::getline(ss, f, ',')) {
                fields.push_back(f);
            }
            ws.push_back(fields.at(5));
        }
        CHECK(ws == std::vector<std::string>{"0", "1", "2", "3"});

        const auto neg = run_cli({"table", "--n-max", "2", "--negative"});
        CHECK(ndjson(neg.out).size() == 5);
        CHECK(ndjson(neg.out)[0]["n"] == -2);
    }

    TEST_CASE("validation errors exit 2") {
        const auto d0 = run_cli({"table", "--a", "1", "--b", "-4"});
        CHECK(d0.code == 2);
        CHECK(d0.err.find("a²b²+4ab = 0") != std::string::npos);
        CHECK(run_cli({"verify", "--a", "1", "--b", "-4"}).code == 2);
        CHECK(run_cli({"verify", "--a", "1/0"}).code == 2);
        CHECK(run_cli({"verify", "--a", "0.5"}).code == 2);
        CHECK(run_cli({"verify", "--w0", "0", "--w1", "0"}).code == 2);
        CHECK(run_cli({"verify", "--output", "xml"}).code == 2);
        CHECK(run_cli({"verify", "--unknown"}).code == 2);
        CHECK(run_cli({"frobnicate"}).code == 2);
        CHECK(run_cli({}).code == 2);
        CHECK(run_cli({"verify", "--r", "-2"}).code == 2);
        CHECK(run_cli({"--help"}).code == 0);
    }

    TEST_CASE("verify on a small grid") {
        const auto r = run_cli({"verify", "--grid", "1,1,0,1;1,-3,1,4", "--n-max", "6"});
        CHECK(r.code == 0);
        const auto rows = ndjson(r.out);
        REQUIRE(rows.size() > 2);
        CHECK(rows.front()["type"] == "header");
        CHECK(rows.front()["grid"].size() == 2);
        CHECK(rows.back()["type"] == "summary");
        CHECK(rows.back()["gating_failures"] == 0);
        bool negative_note = false;
        long parity_rows = 0;
        for (const auto& row : rows) {
            if (row["type"] == "check" && row.contains("note")) {
                negative_note = negative_note ||
                                row["note"].get<std::string>().find("outside positive-parameter setting") !=
                                    std::string::npos;
            }
            parity_rows += row["type"] == "parity_map" ? 1 : 0;
            CHECK(dump_canonical(row) == dump_canonical(nlohmann::json::parse(dump_canonical(row))));
        }
        CHECK(negative_note);
        CHECK(parity_rows == 4);
    }

    TEST_CASE("verify output is deterministic across worker counts") {
        ::setenv("BPF_WORKERS", "1", 1);
        const auto one = run_cli({"verify", "--grid", "1,1,0,1;2,1,0,1;1,2,1,1", "--n-max", "5"});
        ::setenv("BPF_WORKERS", "4", 1);
        const auto four = run_cli({"verify", "--grid", "1,1,0,1;2,1,0,1;1,2,1,1", "--n-max", "5"});
        ::unsetenv("BPF_WORKERS");
        CHECK(one.code == 0);
        CHECK(one.out == four.out);
    }

    TEST_CASE("verify emits json lines byte-identical after reparsing") {
        const auto r = run_cli({"verify", "--a", "2", "--b", "3", "--w0", "1", "--w1", "1", "--n-max", "4"});
        std::istringstream in(r.out);
        std::string line;
        while (std::getline(in, line)) {
            CHECK(nlohmann::json::parse(line).dump() == line);
        }
    }

    TEST_CASE("verify csv output") {
        const auto r = run_cli({"verify", "--a", "1", "--b", "1", "--n-max", "3", "--output", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind(csv_header() + "\n", 0) == 0);
        CHECK(r.err.find("\"type\":\"summary\"") != std::string::npos);
    }

    TEST_CASE("r values restrict catalan offsets") {
        const auto r = run_cli({"verify", "--a", "1", "--b", "1", "--n-max", "6", "--r", "2", "--r", "3"});
        CHECK(r.code == 0);
        for (const auto& row : ndjson(r.out)) {
            if (row["type"] == "check" &&
                (row["identity"] == "catalan_quat" || row["identity"] == "catalan_oct")) {
                const long off = row["indices"]["r"];
                CHECK((off == 2 || off == 3));
                if (row["identity"] == "catalan_quat") {
                    CHECK(off == 2);
                }
            }
        }
    }

    TEST_CASE("genfunc") {
        const auto r = run_cli({"genfunc", "--a", "1", "--b", "2", "--w0", "0", "--w1", "1", "--order", "20"});
        CHECK(r.code == 0);
        const auto rows = ndjson(r.out);
        CHECK(rows.size() == 21);
        for (const auto& row : rows) {
            CHECK(row["match"] == true);
            CHECK(row["coefficient"].size() == 4);
        }
        const auto zero = run_cli({"genfunc", "--order", "0"});
        REQUIRE(ndjson(zero.out).size() == 1);
        CHECK(ndjson(zero.out)[0]["coefficient"] == nlohmann::json::array({"0", "1", "1", "2"}));
        const auto oct = run_cli({"genfunc", "--order", "3", "--octonion", "--a", "2"});
        CHECK(oct.code == 0);
        CHECK(ndjson(oct.out)[3]["coefficient"].size() == 8);
    }

    TEST_CASE("norm command") {
        const auto r = run_cli({"norm", "--a", "2", "--b", "2", "--n-max", "5"});
        CHECK(r.code == 0);
        const auto rows = ndjson(r.out);
        REQUIRE(rows.size() == 6);
        CHECK(rows[1]["lhs"] == "174");
        CHECK(rows[5]["lhs"] == "200766");
    }

    TEST_CASE("config file and output path") {
        const auto cfg = temp_file("config.ini");
        const auto out = temp_file("out.ndjson");
        {
            std::ofstream f(cfg);
            f << "a=2\nb=1\nw0=0\nw1=1\nn-max=3\nout=" << out.string() << "\n";
        }
        const auto r = run_cli({"table", "--config", cfg.string()});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(out);
        std::stringstream content;
        content << in.rdbuf();
        const auto rows = ndjson(content.str());
        REQUIRE(rows.size() == 4);
        CHECK(rows[3]["w"] == "3");
        std::filesystem::remove(cfg);
        std::filesystem::remove(out);

        CHECK(run_cli({"table", "--config", "/nonexistent/bpf.ini"}).code == 2);
    }
}

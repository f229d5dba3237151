#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run cli(const std::string& args) {
    const std::string cmd = std::string("\"") + GFKPP_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (const size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("speed command") {
    CHECK(cli("speed --k 1").out == "A1,half_line_closed_right,2.0\n");
    CHECK(cli("speed --p0 0.25").out == "B,unique,0.353553\n");
    CHECK(cli("speed --m2 4 --with-front").out == "A1,half_line_closed_right,2.5,pushed\n");
    CHECK(cli("speed --m2 -5").out == "A1,half_line_closed_right,2.0\n");
    CHECK(cli("speed --type-b").out == "A1,half_line_closed_left,-2.0\n");
    CHECK(cli("existence --k -1").out == "A2\n");
    CHECK(cli("cubic --p0 0.25").out == "c_star,zeta\n0.353553390593,1.41421356237\n");
}

TEST_CASE("exit codes") {
    CHECK(cli("speed --k 1").status == 0);
    CHECK(cli("speed --k 0").status == 1);
    CHECK(cli("bogus").status == 1);
    CHECK(cli("sweep-m2 --m2-range 0:1").status == 1);
    CHECK(cli("speed --config /nonexistent/model.cfg").status == 1);
    const auto t = cli("transition --d2-range 10");
    CHECK(t.status == 2);
    CHECK(lines(t.out).at(1) == "10.0,error");
}

TEST_CASE("sweep rows") {
    const auto r = cli("sweep-m2 --d2-range 1,2 --m2-range 1,1.9,4");
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "d2,m2_minus_m1,c_star,regime");
    CHECK(rows[1] == "1.0,1.0,2.0,pulled");
    CHECK(rows[3].rfind("1.0,4.0,2.4999", 0) == 0);
    CHECK(rows[3].substr(rows[3].rfind(',')) == ",pushed");
    CHECK(rows[5].rfind("2.0,1.9,", 0) == 0);
    CHECK(rows[5].substr(rows[5].rfind(',')) == ",pushed");
}

TEST_CASE("output is deterministic across job counts") {
    const auto a = cli("sweep-m2 --d2-range 0.5,1,2 --m2-range 0:4:0.5 --jobs 1");
    const auto b = cli("sweep-m2 --d2-range 0.5,1,2 --m2-range 0:4:0.5 --jobs 3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(cli("slope --d2-range 0.5:1:0.25").out == cli("slope --d2-range 0.5:1:0.25").out);
}

TEST_CASE("trajectory ends in the target window") {
    const auto r = cli("trajectory --c 3");
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 3);
    CHECK(rows[0] == "p,q");
    const double p_end = std::stod(rows.back().substr(0, rows.back().find(',')));
    CHECK(p_end == doctest::Approx(1e-5).epsilon(1e-9));
}

TEST_CASE("config file and output file") {
    const std::string cfg = "cli_test_model.cfg";
    const std::string out = "cli_test_out.csv";
    {
        std::ofstream f(cfg);
        f << "d1 = 1\nd2 = 1\nm1 = 0\nm2 = 4\n[reaction]\nkind = quadratic\nk = 1\n";
    }
    const auto r = cli("speed --config " + cfg + " --out " + out);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "A1,half_line_closed_right,2.5");
    std::remove(cfg.c_str());
    std::remove(out.c_str());
}

TEST_CASE("consistency command") {
    const auto r = cli("consistency --t-end 2");
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    CHECK(rows.front() == "t,deviation");
    CHECK(rows.back().rfind("# max_deviation=", 0) == 0);
    CHECK(std::stod(rows.back().substr(16)) <= 1e-6);
}

// End-to-end checks of the orthoframe binary. The binary path arrives via
// the ORTHOFRAME_BIN environment variable set by ctest.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "orthoframe/io.hpp"
#include "orthoframe/quat.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string bin() {
    const char* p = std::getenv("ORTHOFRAME_BIN");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/orthoframe_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kDsText =
    "-0.5450 0.7970 0.2600\n"
    "0.7330 0.6030 -0.3130\n"
    "-0.4070 0.0210 -0.9130\n";

const char* kFixtureT =
    "-0.6651 0.7463 -0.0256\n"
    "-0.7395 -0.6631 -0.1162\n"
    "-0.1037 -0.0583 0.9929\n";

}  // namespace

TEST_CASE("convert q2m identity") {
    const RunResult r = run("convert q2m \"1 0 0 0\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 0 0\n0 1 0\n0 0 1\n");
}

TEST_CASE("convert m2q on a rounded rotation") {
    const std::string path = write_temp("ds.txt", kDsText);
    const RunResult r = run("convert m2q " + path);
    CHECK(r.exit_code == 0);
    const orthoframe::Matrix q = orthoframe::parse_matrix(r.out);
    REQUIRE(q.cols() == 4);
    CHECK(q(0, 0) == doctest::Approx(0.1901).epsilon(5e-3));
    CHECK(q(0, 1) == doctest::Approx(0.4380).epsilon(5e-3));
    CHECK(q(0, 2) == doctest::Approx(0.8746).epsilon(5e-3));
    CHECK(q(0, 3) == doctest::Approx(-0.0839).epsilon(5e-3));
}

TEST_CASE("convert round trip") {
    const RunResult q2m = run("--exact convert q2m \"0.5 0.5 0.5 0.5\"");
    REQUIRE(q2m.exit_code == 0);
    const std::string path = write_temp("roundtrip.txt", q2m.out);
    const RunResult m2q = run("--exact convert m2q " + path);
    REQUIRE(m2q.exit_code == 0);
    const orthoframe::Matrix q = orthoframe::parse_matrix(m2q.out);
    for (int i = 0; i < 4; ++i) CHECK(q(0, i) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("convert error paths") {
    const std::string reflect = write_temp("reflect.txt", "1 0 0\n0 1 0\n0 0 -1\n");
    CHECK(run("convert m2q " + reflect).exit_code == 3);
    const std::string garbage = write_temp("garbage.txt", "1 2 foo\n");
    CHECK(run("convert m2q " + garbage).exit_code == 2);
    CHECK(run("convert q2m \"1 0 0\"").exit_code == 2);
}

TEST_CASE("orthogonalize recovers a rounded rotation") {
    const std::string path = write_temp("t.txt", kFixtureT);
    const RunResult r = run("orthogonalize --method landis " + path);
    REQUIRE(r.exit_code == 0);
    const orthoframe::Matrix out = orthoframe::parse_matrix(r.out);
    const orthoframe::Matrix t = orthoframe::parse_matrix(kFixtureT);
    CHECK((out - t).norm_max() <= 1e-4);

    // all three methods agree on a near-rotation
    const RunResult svd = run("--exact orthogonalize --method svd " + path);
    REQUIRE(svd.exit_code == 0);
    CHECK((orthoframe::parse_matrix(svd.out) - t).norm_max() <= 5e-3);
    const RunResult polar = run("--exact orthogonalize --method polar " + path);
    REQUIRE(polar.exit_code == 0);
    CHECK((orthoframe::parse_matrix(polar.out) - orthoframe::parse_matrix(svd.out)).norm_max() <=
          1e-9);
}

TEST_CASE("orthogonalize report and singular input") {
    const std::string id = write_temp("id.txt", "1 0 0\n0 1 0\n0 0 1\n");
    const RunResult r = run("--report orthogonalize " + id);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("residual") != std::string::npos);

    const std::string sing = write_temp("sing.txt", "1 0 0\n0 1 0\n1 1 0\n");
    CHECK(run("orthogonalize --method polar " + sing).exit_code == 3);
}

TEST_CASE("wahba identity problem") {
    const std::string path = write_temp(
        "wahba_id.txt", "1.0 1 0 0 1 0 0\n1.0 0 1 0 0 1 0\n2.0 0 0 1 0 0 1\n");
    const RunResult dav = run("wahba " + path);
    REQUIRE(dav.exit_code == 0);
    CHECK(dav.out.substr(0, 8) == "1 0 0 0\n");
    CHECK(dav.out.find("loss 0") != std::string::npos);

    const RunResult svd = run("wahba --method svd " + path);
    REQUIRE(svd.exit_code == 0);
    CHECK(svd.out.find("loss") != std::string::npos);

    const std::string ambiguous =
        write_temp("wahba_amb.txt", "1.0 1 0 0 -1 0 0\n1e-12 0 1 0 0 1 0\n");
    CHECK(run("wahba " + ambiguous).exit_code == 3);
    const std::string bad = write_temp("wahba_bad.txt", "1.0 1 0 0\n");
    CHECK(run("wahba " + bad).exit_code == 2);
}

TEST_CASE("wahba noiseless ground truth via q2m pipeline") {
    const orthoframe::Quaternion q = orthoframe::normalize({0.3, -0.5, 0.2, 0.9});
    const orthoframe::Matrix a = orthoframe::phi_so3(q);
    std::string text;
    const double refs[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& ref : refs) {
        const auto obs = a * std::vector<double>{ref[0], ref[1], ref[2]};
        text += "1.0 " + std::to_string(ref[0]) + " " + std::to_string(ref[1]) + " " +
                std::to_string(ref[2]);
        for (double x : obs) text += " " + orthoframe::format_real(x, 17);
        text += "\n";
    }
    const std::string path = write_temp("wahba_gt.txt", text);
    const RunResult r = run("--exact wahba " + path);
    REQUIRE(r.exit_code == 0);
    const orthoframe::Matrix got = orthoframe::parse_matrix(r.out.substr(0, r.out.find("loss")));
    const double sign = got(0, 0) * q.x >= 0 ? 1.0 : -1.0;
    CHECK(got(0, 0) == doctest::Approx(sign * q.x).epsilon(1e-8));
    CHECK(got(0, 3) == doctest::Approx(sign * q.w).epsilon(1e-8));
}

TEST_CASE("parity command") {
    const std::string id = write_temp("pid.txt", "1 0 0\n0 1 0\n0 0 1\n");
    const RunResult r = run("parity " + id);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "+1\n");

    const std::string flip = write_temp("pflip.txt", "1 0 0\n0 1 0\n0 0 -1\n");
    CHECK(run("parity " + flip).out == "-1\n");

    const std::string swap = write_temp("pswap.txt", "0 1 0\n1 0 0\n0 0 1\n");
    const RunResult with_path = run("parity --path 3 " + swap);
    CHECK(with_path.exit_code == 0);
    CHECK(with_path.out.substr(0, 3) == "-1\n");
    CHECK(with_path.out.find("tau") != std::string::npos);

    const std::string skew = write_temp("pskew.txt", "1 0.5 0\n0 1 0\n0 0 1\n");
    CHECK(run("parity " + skew).exit_code == 3);
}

TEST_CASE("factor command") {
    const std::string id = write_temp("fid.txt", "1 0 0\n0 1 0\n0 0 1\n");
    const RunResult qr = run("factor qr " + id);
    CHECK(qr.exit_code == 0);
    CHECK(qr.out == "Q\n1 0 0\n0 1 0\n0 0 1\nR\n1 0 0\n0 1 0\n0 0 1\n");

    const std::string sym = write_temp("fsym.txt", "2 1\n1 2\n");
    const RunResult jac = run("factor jacobi " + sym);
    CHECK(jac.exit_code == 0);
    CHECK(jac.out.find("eigenvalues\n1 3\n") != std::string::npos);

    const std::string gen = write_temp("fgen.txt", "2 1\n0.5 3\n");
    const RunResult polar = run("--report factor polar " + gen);
    CHECK(polar.exit_code == 0);
    const auto pos = polar.out.find("residual ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(polar.out.substr(pos + 9)) <= 1e-9);

    CHECK(run("factor jacobi " + gen).exit_code == 2);  // not symmetric
    const std::string sing = write_temp("fsing.txt", "1 1\n1 1\n");
    CHECK(run("factor polar " + sing).exit_code == 3);
}

TEST_CASE("deterministic output") {
    const std::string path = write_temp("det.txt", kDsText);
    const RunResult a = run("--exact factor svd " + path);
    const RunResult b = run("--exact factor svd " + path);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

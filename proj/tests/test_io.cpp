#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "percap/io.hpp"

using namespace percap::io;

TEST_CASE("format_number keeps 17 significant digits") {
    CHECK(format_number(2.0) == "2");
    const double v = 0.1234567890123456789;
    CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("csv round trip") {
    Table t;
    t.columns = {"a", "b"};
    t.rows = {{1.0, -0.25}, {3.5e-300, 17.392812174373092}};
    t.comments = {"seed=7"};
    const std::string text = to_csv(t);
    CHECK(text.find("# seed=7\n") == 0);
    CHECK(text.find("a,b\n") != std::string::npos);
    const Table back = parse_csv(text);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            CHECK(back.rows[i][j] == t.rows[i][j]);
}

TEST_CASE("json output is well formed") {
    Table t;
    t.columns = {"x"};
    t.rows = {{1.5}, {2.5}};
    const std::string plain = to_json(t);
    CHECK(plain.find("\"x\"") != std::string::npos);
    t.comments = {"seed=3"};
    const std::string with_meta = to_json(t);
    CHECK(with_meta.find("seed=3") != std::string::npos);
}

TEST_CASE("write_table and I/O failure") {
    Table t;
    t.columns = {"v"};
    t.rows = {{42.0}};
    const std::string path = "test_io_tmp.csv";
    write_table(t, path, "csv");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == to_csv(t));
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_table(t, "/nonexistent-dir/x.csv", "csv"),
                    std::runtime_error);
}

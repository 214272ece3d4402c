#include <doctest.h>

#include "chad/settings.hpp"

using namespace chad;

TEST_CASE("settings: basic key=value parsing with comments") {
    const auto f = SettingsFile::parse_string(
        "# leading comment\n"
        "a = 1.5\n"
        "b=2 # trailing comment\n"
        "\n"
        "name = hello\n",
        "mem");
    CHECK(f.number("a") == 1.5);
    CHECK(f.number("b") == 2.0);
    CHECK(f.str("name") == "hello");
    CHECK(f.number_or("missing", 7.0) == 7.0);
    CHECK(f.integer("b") == 2);
    CHECK(!f.has("missing"));
}

TEST_CASE("settings: sections prefix keys") {
    const auto f = SettingsFile::parse_string("[solver]\ndt = 0.5\n[run]\nkind = cstr\n", "mem");
    CHECK(f.number("solver.dt") == 0.5);
    CHECK(f.str("run.kind") == "cstr");
}

TEST_CASE("settings: parse errors carry line numbers") {
    CHECK_THROWS_AS(SettingsFile::parse_string("a = 1\na = 2\n", "mem"), ParseError);
    CHECK_THROWS_AS(SettingsFile::parse_string("novalue\n", "mem"), ParseError);
    CHECK_THROWS_AS(SettingsFile::parse_string("= 3\n", "mem"), ParseError);
    CHECK_THROWS_AS(SettingsFile::parse_string("[bad\n", "mem"), ParseError);
    try {
        SettingsFile::parse_string("ok = 1\nbroken\n", "file.conf");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.file() == "file.conf");
    }
}

TEST_CASE("settings: numeric conversion failures") {
    const auto f = SettingsFile::parse_string("x = abc\nn = 1.5\n", "mem");
    CHECK_THROWS_AS(f.number("x"), ParseError);
    CHECK_THROWS_AS(f.integer("n"), ParseError);
    CHECK_THROWS_AS(f.number("nope"), ConfigError);
}

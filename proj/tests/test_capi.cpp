// Exercises the public C surface end to end.
#include <doctest.h>

#include <cstring>
#include <string>

#include "fibmap/fibmap.h"

TEST_CASE("version and status names") {
    CHECK(fibmap_version() != nullptr);
    CHECK(std::string(fibmap_status_name(FIBMAP_OK)) == "ok");
    CHECK(std::string(fibmap_status_name(FIBMAP_ERR_SCAN_CAP)) == "scan cap exceeded");
}

TEST_CASE("numeration round trips through the C layer") {
    char buf[128];
    size_t len = 0;
    REQUIRE(fibmap_zeck_encode(45, buf, sizeof buf, &len) == FIBMAP_OK);
    CHECK(std::string(buf) == "10010100");
    CHECK(len == 8);
    uint64_t n = 0;
    REQUIRE(fibmap_zeck_decode("10010100", &n) == FIBMAP_OK);
    CHECK(n == 45);
    CHECK(fibmap_zeck_decode("11", &n) == FIBMAP_ERR_INVALID_ZECKENDORF);
    CHECK(std::string(fibmap_last_error()).find("adjacent") != std::string::npos);

    REQUIRE(fibmap_base_encode(35, 2, buf, sizeof buf, &len) == FIBMAP_OK);
    CHECK(std::string(buf) == "100011");
    REQUIRE(fibmap_base_decode("110", 2, &n) == FIBMAP_OK);
    CHECK(n == 6);
    CHECK(fibmap_base_decode("12", 2, &n) == FIBMAP_ERR_DIGIT_OUT_OF_RANGE);
    CHECK(fibmap_zeck_encode(45, buf, 3, &len) == FIBMAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("streams through the C layer") {
    fibmap_stream* s = nullptr;
    REQUIRE(fibmap_stream_open("fib", &s) == FIBMAP_OK);
    char letter = 0;
    REQUIRE(fibmap_stream_term(s, 4, &letter) == FIBMAP_OK);
    CHECK(letter == '1');
    char buf[16];
    REQUIRE(fibmap_stream_prefix(s, 15, buf, sizeof buf) == FIBMAP_OK);
    CHECK(std::string(buf) == "010010100100101");
    REQUIRE(fibmap_stream_set_max_prefix(s, 100) == FIBMAP_OK);
    CHECK(fibmap_stream_term(s, 100, &letter) == FIBMAP_ERR_RESOURCE_LIMIT);
    fibmap_stream_free(s);

    CHECK(fibmap_stream_open("nope", &s) == FIBMAP_ERR_UNKNOWN_NAME);
    const char* doc = R"({"alphabet":["0","1"],"rules":{"0":"01","1":"0"},"seed":"0"})";
    REQUIRE(fibmap_stream_open_json(doc, &s) == FIBMAP_OK);
    REQUIRE(fibmap_stream_term(s, 20, &letter) == FIBMAP_OK);
    CHECK(letter == '0');
    fibmap_stream_free(s);
    CHECK(fibmap_stream_open_json("{oops", &s) == FIBMAP_ERR_PARSE);
}

TEST_CASE("automata through the C layer") {
    fibmap_dfao* m = nullptr;
    REQUIRE(fibmap_dfao_open_builtin("fib", &m) == FIBMAP_OK);
    char letter = 0;
    REQUIRE(fibmap_dfao_eval(m, "10100", &letter) == FIBMAP_OK);
    CHECK(letter == '0');
    REQUIRE(fibmap_dfao_term(m, 4, &letter) == FIBMAP_OK);
    CHECK(letter == '1');
    CHECK(fibmap_dfao_eval(m, "11", &letter) == FIBMAP_ERR_INVALID_ZECKENDORF);
    char* json = nullptr;
    REQUIRE(fibmap_dfao_to_json(m, &json) == FIBMAP_OK);
    fibmap_dfao* m2 = nullptr;
    REQUIRE(fibmap_dfao_open_json(json, &m2) == FIBMAP_OK);
    REQUIRE(fibmap_dfao_term(m2, 11, &letter) == FIBMAP_OK);
    CHECK(letter == '0');
    fibmap_string_free(json);
    fibmap_dfao_free(m);
    fibmap_dfao_free(m2);
}

TEST_CASE("golden arithmetic through the C layer") {
    uint64_t f = 0;
    REQUIRE(fibmap_floor_mult_tau(45, &f) == FIBMAP_OK);
    CHECK(f == 72);
    double v = 0;
    REQUIRE(fibmap_step_distance(2, &v) == FIBMAP_OK);
    CHECK(v == doctest::Approx(0.2360679).epsilon(1e-6));
    char* exact = nullptr;
    REQUIRE(fibmap_step_distance_str(2, &exact) == FIBMAP_OK);
    CHECK(std::string(exact) == "(-3+2*tau)");
    fibmap_string_free(exact);
    int right = -1;
    REQUIRE(fibmap_step_direction(5, &right) == FIBMAP_OK);
    CHECK(right == 1);
    REQUIRE(fibmap_step_direction(1, &right) == FIBMAP_OK);
    CHECK(right == 0);
    char letter = 0;
    REQUIRE(fibmap_rotation_term(4, &letter) == FIBMAP_OK);
    CHECK(letter == '1');
    CHECK(fibmap_floor_mult_tau(0, &f) == FIBMAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("analysis through the C layer") {
    uint64_t a = 0;
    REQUIRE(fibmap_fib_longest_map(89, &a) == FIBMAP_OK);
    CHECK(a == 123);
    char* big = nullptr;
    REQUIRE(fibmap_fib_longest_map_str("679891637638612258", &big) == FIBMAP_OK);
    // A(F_87) = ceil(tau^86)
    CHECK(std::string(big) == "939587134549734843");
    fibmap_string_free(big);
    CHECK(fibmap_fib_longest_map_str("not-a-number", &big) == FIBMAP_ERR_PARSE);
    uint64_t i = 0;
    REQUIRE(fibmap_fib_first_position(3, 0, &i) == FIBMAP_OK);
    CHECK(i == 20);
    CHECK(fibmap_fib_first_position(144, 100, &i) == FIBMAP_ERR_SCAN_CAP);
    double dens = 0;
    REQUIRE(fibmap_fib_density(3, &dens) == FIBMAP_OK);
    CHECK(dens == doctest::Approx(0.2060).epsilon(1e-3));
    uint64_t p = 0;
    REQUIRE(fibmap_pisano_period(10, &p) == FIBMAP_OK);
    CHECK(p == 60);
    REQUIRE(fibmap_rank_of_apparition(10, &p) == FIBMAP_OK);
    CHECK(p == 15);
}

TEST_CASE("search through the C layer") {
    fibmap_stream* s = nullptr;
    REQUIRE(fibmap_stream_open("fib", &s) == FIBMAP_OK);
    fibmap_search_result res{};
    REQUIRE(fibmap_search_longest(s, 3, 100, &res) == FIBMAP_OK);
    CHECK(res.best_len == 5);
    CHECK(res.first_pos == 20);
    CHECK(res.saturated == 0);
    uint64_t pos = 0;
    REQUIRE(fibmap_search_first(s, 3, 5, 1000, &pos) == FIBMAP_OK);
    CHECK(pos == 20);
    int has = 0;
    REQUIRE(fibmap_search_has_map(s, 3, 20, 5, &has) == FIBMAP_OK);
    CHECK(has == 1);
    REQUIRE(fibmap_search_has_map(s, 3, 20, 6, &has) == FIBMAP_OK);
    CHECK(has == 0);
    fibmap_stream_free(s);
}

TEST_CASE("renderers through the C layer") {
    fibmap_table_opts opts{};
    opts.word = "fib";
    opts.d_min = 1;
    opts.d_max = 3;
    opts.format = "csv";
    char* text = nullptr;
    REQUIRE(fibmap_table_render(&opts, &text) == FIBMAP_OK);
    CHECK(std::string(text).rfind("d,A,i,method,saturated\n1,2,2,closed_form,0", 0) == 0);
    fibmap_string_free(text);

    REQUIRE(fibmap_orbit_render(18, 3, 7, &text) == FIBMAP_OK);
    CHECK(std::string(text).find("n,index,point_float,point_a,point_b,interval") == 0);
    CHECK(std::string(text).find("0,18,") != std::string::npos);
    fibmap_string_free(text);

    REQUIRE(fibmap_levelset_render(3, 50, "text", &text) == FIBMAP_OK);
    CHECK(std::string(text).find("2 6 15 19 23 28 32 36 40 49") != std::string::npos);
    fibmap_string_free(text);

    REQUIRE(fibmap_density_render(3, 4, 0, "csv", &text) == FIBMAP_OK);
    CHECK(std::string(text).find("k,density") == 0);
    fibmap_string_free(text);
}

TEST_CASE("reports through the C layer") {
    fibmap_report* rep = nullptr;
    fibmap_suite_opts opts{};
    opts.window = 1u << 16;
    REQUIRE(fibmap_suite_run("rs", &opts, &rep) == FIBMAP_OK);
    CHECK(fibmap_report_size(rep) == 1);
    fibmap_check_view view{};
    REQUIRE(fibmap_report_check(rep, 0, &view) == FIBMAP_OK);
    CHECK(std::string(view.id) == "rs.a_i_pow2");
    CHECK(view.pass == 1);
    CHECK(std::string(view.kind) == "bounded");
    CHECK(fibmap_report_core_passed(rep) == 1);
    CHECK(fibmap_report_conjecture_failed(rep) == 0);
    char* text = nullptr;
    REQUIRE(fibmap_report_render(rep, "json", &text) == FIBMAP_OK);
    CHECK(std::string(text).find("rs.a_i_pow2") != std::string::npos);
    fibmap_string_free(text);
    CHECK(fibmap_report_check(rep, 5, &view) == FIBMAP_ERR_INVALID_ARGUMENT);
    fibmap_report_free(rep);

    CHECK(fibmap_suite_run("nope", nullptr, &rep) == FIBMAP_ERR_UNKNOWN_NAME);

    REQUIRE(fibmap_verify_run(25, 10000, 1, &rep) == FIBMAP_OK);
    CHECK(fibmap_report_size(rep) == 25);
    CHECK(fibmap_report_core_passed(rep) == 1);
    fibmap_report_free(rep);
}

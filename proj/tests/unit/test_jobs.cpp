#include "doctest.h"

#include "swanlab/jobs.hpp"

using namespace swanlab;

namespace {
OrderedJson field_json(unsigned p, const char* residue = "perfect") {
    OrderedJson j;
    j["p"] = p;
    j["residue"] = residue;
    return j;
}
}  // namespace

TEST_CASE("field_from_json accepts equivalent spellings") {
    auto a = field_from_json(field_json(3));
    CHECK(a.p() == 3);
    CHECK(a.kind == ResidueKind::Perfect);

    auto j = field_json(2, "rational");
    j["e"] = 2;
    auto b = field_from_json(j);
    CHECK(b.gf.q() == 4);
    CHECK(b.has_y());

    auto k = field_json(2);
    k["q"] = 8;
    CHECK(field_from_json(k).gf.e() == 3);

    auto m = field_json(3);
    m["modulus"] = OrderedJson::array({1, 0, 1});  // t^2 + 1
    CHECK(field_from_json(m).gf.q() == 9);

    // rational(y) is an accepted alias
    auto r = field_json(2, "rational(y)");
    CHECK(field_from_json(r).has_y());
}

TEST_CASE("field_from_json rejects inconsistent input") {
    auto j = field_json(2);
    j["e"] = 2;
    j["q"] = 8;  // contradicts e
    CHECK_THROWS_AS(field_from_json(j), ConfigError);
    CHECK_THROWS_AS(field_from_json(field_json(7)), ConfigError);
    auto bad = field_json(2, "integers");
    CHECK_THROWS_AS(field_from_json(bad), ConfigError);
    OrderedJson empty = OrderedJson::object();
    CHECK_THROWS_AS(field_from_json(empty), ConfigError);
}

TEST_CASE("field_to_json echoes a normalized description") {
    auto j = field_json(3, "rational");
    j["e"] = 2;
    auto back = field_to_json(field_from_json(j));
    CHECK(back["p"] == 3);
    CHECK(back["e"] == 2);
    CHECK(back["q"] == 9);
    CHECK(back["residue"] == "rational");
    CHECK(back["modulus"].is_array());
}

TEST_CASE("conductor payload for a frozen instance") {
    OrderedJson j;
    j["field"] = field_json(3);
    j["witt"] = OrderedJson::array({"pi^-2"});
    auto job = job_from_json(j);
    auto out = conductor_result(job);
    CHECK(out["schema"] == "swanlab/1");
    CHECK(out["command"] == "conductor");
    CHECK(out["status"] == "ok");
    CHECK(out["sw"] == 2);
    CHECK(out["sw_exact"] == true);
    CHECK(out["rsw"]["alpha"] == "0");
    CHECK(out["rsw"]["beta"] == "2");
    CHECK(out["rsw"]["n"] == 2);
    CHECK(out["rsw"]["basis"] == "log");
    CHECK(out["sw_mod"] == 2);
    CHECK(out["rsw_mod"]["basis"] == "plain");
    CHECK(out["log_slope"] == 2);
    CHECK(out["slope"] == 3);
    CHECK(out["char_point"]["beta"] == "1");
    CHECK(out["log_char_point"]["beta"] == "1");
    CHECK_FALSE(out.contains("rsw_mod_unsupported"));
    CHECK(exit_code_for(out) == 0);
    // serialization is byte-stable
    CHECK(out.dump() == conductor_result(job).dump());
}

TEST_CASE("status precedence and exit codes") {
    OrderedJson j;
    j["field"] = field_json(2, "rational");
    j["witt"] = OrderedJson::array({"y*pi^-2"});
    auto out = conductor_result(job_from_json(j));
    CHECK(out["status"] == "unsupported_range");
    CHECK(out["rsw_mod_unsupported"] == true);
    CHECK_FALSE(out.contains("rsw_mod"));
    CHECK_FALSE(out.contains("slope"));
    CHECK(out["log_slope"] == 2);
    CHECK(exit_code_for(out) == 2);

    j["witt"] = OrderedJson::array({"pi^-8"});
    j["budget"] = 0;
    j["phase1_cap"] = 1;
    auto starved = conductor_result(job_from_json(j));
    CHECK(starved["status"] == "budget_exceeded");
    CHECK(starved["sw_exact"] == false);
    CHECK(exit_code_for(starved) == 3);

    auto err = error_json("boom", 4);
    CHECK(err["status"] == "error");
    CHECK(err["error"] == "boom");
    CHECK(err["position"] == 4);
    CHECK(exit_code_for(err) == 1);
}

TEST_CASE("trivial class reports sw = 0 and no refined data") {
    OrderedJson j;
    j["field"] = field_json(2);
    j["witt"] = OrderedJson::array({"pi^-4+pi^-1"});
    auto out = conductor_result(job_from_json(j));
    CHECK(out["status"] == "out_of_theorem_range");
    CHECK(out["sw"] == 0);
    CHECK_FALSE(out.contains("rsw"));
    CHECK_FALSE(out.contains("log_slope"));
    CHECK(out["reduced"] == OrderedJson::array({"0"}));
    CHECK(exit_code_for(out) == 2);
}

TEST_CASE("batch preserves order and takes the worst exit code") {
    OrderedJson doc;
    doc["jobs"] = OrderedJson::array();
    for (const char* comp : {"pi^-2", "pi^-3", "not a witt vector!!"}) {
        OrderedJson j;
        j["field"] = field_json(3);
        j["witt"] = OrderedJson::array({comp});
        doc["jobs"].push_back(j);
    }
    auto out = conductor_batch(doc);
    CHECK(out["command"] == "conductor");
    REQUIRE(out["jobs"].size() == 3);
    CHECK(out["jobs"][0]["sw"] == 2);
    CHECK(out["jobs"][1]["sw"] == 1);
    CHECK(out["jobs"][2]["status"] == "error");
    CHECK(exit_code_for(out) == 1);
    // independent of scheduling
    CHECK(out.dump() == conductor_batch(doc).dump());
}

TEST_CASE("reduce, filtration and normalform results") {
    OrderedJson j;
    j["field"] = field_json(2, "rational");
    j["witt"] = OrderedJson::array({"y*pi^-2"});
    auto job = job_from_json(j);

    auto red = reduce_result(job);
    CHECK(red["status"] == "ok");
    CHECK(red["level"] == 2);
    CHECK(red["exact"] == true);
    CHECK(red["reduced"] == OrderedJson::array({"y*pi^-2"}));

    auto fil = filtration_result(job, 0, 3);
    CHECK(fil["fil"] == OrderedJson::array({false, false, true, true}));
    CHECK(fil["fil_mod"] == OrderedJson::array({false, true, true, true}));
    CHECK(fil["level"] == 2);

    auto F = job.field;
    auto nf = normalform_result(F, Basis::Log, 2, "1", "0");
    CHECK(nf["status"] == "ok");
    CHECK(nf["in_image"] == true);
    CHECK(nf["normal_form"]["x"] == "0");
    auto miss = normalform_result(F, Basis::Log, 2, "0", "y");
    CHECK(miss["in_image"] == false);
    CHECK(miss["status"] == "ok");
    CHECK(miss.contains("obstruction"));
    CHECK(exit_code_for(miss) == 0);
}

TEST_CASE("witt operations over JSON") {
    OrderedJson j;
    j["field"] = field_json(2, "rational");
    j["witt"] = OrderedJson::array({"pi^-1", "y"});
    auto job = job_from_json(j);
    auto sum = witt_op_result(job, "add",
                              std::vector<std::string>{"pi^-1", "0"});
    CHECK(sum["status"] == "ok");
    CHECK(sum["result"].is_array());
    // a + a has zero base component in char 2
    auto doubled = witt_op_result(job, "add",
                                  std::vector<std::string>{"pi^-1", "y"});
    CHECK(doubled["result"][0] == "0");
    auto neg = witt_op_result(job, "neg", {});
    CHECK(neg["status"] == "ok");
    CHECK_THROWS_AS(
        witt_op_result(job, "add", std::vector<std::string>{"pi^-1"}),
        ConfigError);
}

#include "doctest.h"

#include <filesystem>

#include "bookx/emax.hpp"
#include "bookx/error.hpp"
#include "bookx/graph_io.hpp"

using namespace bookx;

namespace {

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(BOOKX_GOLDEN_DIR) / name; }

}  // namespace

TEST_CASE("graph text round trip") {
    const ConvexGraph g = graph_s7();
    const std::string text = graph_to_text(g);
    CHECK(text.rfind("n 7 sides=0\n0 2\n", 0) == 0);
    CHECK(graph_from_text(text) == g);
    CHECK(graph_from_text(graph_to_text(complete_convex(5, true))) == complete_convex(5, true));
    CHECK_THROWS_AS(graph_from_text("n 5 sides=0\n0 1\n"), InputError);
    CHECK_THROWS_AS(graph_from_text("n 5\n0 2\n"), InputError);
    CHECK_THROWS_AS(graph_from_text("n 5 sides=0\n2 0\n"), InputError);
    CHECK_THROWS_AS(graph_from_text("n 5 sides=0\n0 2 4\n"), InputError);
}

TEST_CASE("graph json round trip") {
    const ConvexGraph g = graph_s8();
    const auto j = graph_to_json(g);
    CHECK(j["n"] == 8);
    CHECK(j["allow_sides"] == false);
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":5,"edges":[[0]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")), InputError);
}

TEST_CASE("drawing json round trip") {
    const BookDrawing d = dps_construction(9, 3);
    const auto j = drawing_to_json(d);
    CHECK(j["pages"].size() == 3);
    CHECK(drawing_from_json(j) == d);
    CHECK(j.dump() == drawing_to_json(drawing_from_json(j)).dump());
    CHECK_THROWS_AS(drawing_from_json(nlohmann::json::parse(R"({"n":4,"k":1,"pages":[[[0,1]]]})")), InputError);
}

TEST_CASE("golden certificates") {
    CHECK(read_graph_file(golden("s7.json")) == graph_s7());
    CHECK(read_graph_file(golden("s7_prime.json")) == graph_s7_prime());
    CHECK(read_graph_file(golden("s8.json")) == graph_s8());
    CHECK(local_crossing_number(graph_s7()) == 4);
    CHECK(local_crossing_number(graph_s7_prime()) == 4);
    CHECK(local_crossing_number(graph_s8()) == 4);
    CHECK(graph_s8() == emax_optima(4, 8).front());
}

#include <doctest.h>

#include "cipusim/layer_table.hpp"

using namespace cipusim;

TEST_CASE("parse a single well-formed line") {
    const auto layers = parse_layer_table("conv1_1,224,224,3,64,3,1,1\n");
    REQUIRE(layers.size() == 1);
    CHECK(layers[0].name == "conv1_1");
    CHECK(layers[0].out_rows == 224);
    CHECK(layers[0].in_channels == 3);
    CHECK(layers[0].out_channels == 64);
    CHECK(layers[0].kernel == 3);
    CHECK(layers[0].stride == 1);
    CHECK(layers[0].padding == 1);
}

TEST_CASE("empty input and comments give an empty table") {
    CHECK(parse_layer_table("").empty());
    CHECK(parse_layer_table("# header\n\n   \n# another\n").empty());
}

TEST_CASE("inline comments and whitespace are tolerated") {
    const auto layers = parse_layer_table("  a , 8, 8, 3, 4, 3, 1, 1  # trailing\n");
    REQUIRE(layers.size() == 1);
    CHECK(layers[0].name == "a");
}

TEST_CASE("malformed numeric field names the line and field") {
    try {
        parse_layer_table("ok,8,8,3,4,3,1,1\nx,224,-1,3,4,3,1,1\n");
        FAIL("expected a parse error");
    } catch (const LayerTableError& e) {
        CHECK(e.line() == 2);
        CHECK(e.field() == "C");
    }
}

TEST_CASE("non-integer field is rejected") {
    CHECK_THROWS_AS(parse_layer_table("x,224,hello,3,4,3,1,1\n"), LayerTableError);
}

TEST_CASE("wrong field count is rejected") {
    CHECK_THROWS_AS(parse_layer_table("x,224,224,3,64\n"), LayerTableError);
}

TEST_CASE("duplicate names are rejected") {
    CHECK_THROWS_AS(parse_layer_table("a,8,8,3,4,3,1,1\na,8,8,3,4,3,1,1\n"),
                    LayerTableError);
}

TEST_CASE("vgg16 preset shapes") {
    const auto layers = vgg16_conv_layers();
    REQUIRE(layers.size() == 13);
    CHECK(layers.front().name == "conv1_1");
    CHECK(layers.front().out_rows == 224);
    CHECK(layers.front().in_channels == 3);
    CHECK(layers.back().name == "conv5_3");
    CHECK(layers.back().out_rows == 14);
    CHECK(layers.back().out_channels == 512);
    for (const auto& l : layers) {
        CHECK(l.kernel == 3);
        CHECK(l.stride == 1);
        CHECK(l.padding == 1);
        CHECK_NOTHROW(l.validate());
    }
}

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "gallai/gallai.h"

namespace {

gallai_coloring* parse(const std::string& text) {
    gallai_coloring* phi = nullptr;
    REQUIRE(gallai_coloring_parse(text.data(), text.size(), &phi, nullptr) == GALLAI_OK);
    return phi;
}

void collect(const char* star, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(star); }

struct Checks {
    int total = 0;
    int failed = 0;
    std::vector<int> criteria;
};

void on_check(int criterion, const char*, int passed, const char*, void* user) {
    auto* c = static_cast<Checks*>(user);
    ++c->total;
    c->failed += !passed;
    if (c->criteria.empty() || c->criteria.back() != criterion) c->criteria.push_back(criterion);
}

}  // namespace

TEST_CASE("parse, format and ownership") {
    gallai_coloring* phi = parse("5\nrrrrrrrrrb\n");
    CHECK(gallai_coloring_vertex_count(phi) == 5);

    size_t needed = 0;
    char small[4];
    CHECK(gallai_coloring_format(phi, small, sizeof small, &needed) == GALLAI_E_BUFFER_TOO_SMALL);
    CHECK(needed == 13);
    std::vector<char> buf(needed);
    CHECK(gallai_coloring_format(phi, buf.data(), buf.size(), &needed) == GALLAI_OK);
    CHECK(std::string(buf.data()) == "5\nrrrrrrrrrb");

    gallai_coloring* copy = nullptr;
    CHECK(gallai_coloring_clone(phi, &copy) == GALLAI_OK);
    gallai_coloring_free(phi);
    CHECK(gallai_coloring_vertex_count(copy) == 5);
    gallai_coloring_free(copy);
    gallai_coloring_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
    gallai_coloring* phi = nullptr;
    size_t offset = 99;
    const std::string bad = "3\nrgx";
    CHECK(gallai_coloring_parse(bad.data(), bad.size(), &phi, &offset) == GALLAI_E_PARSE);
    CHECK(offset == 4);
    CHECK(phi == nullptr);
    CHECK(std::strlen(gallai_last_error()) > 0);

    gallai_coloring* rainbow = parse("3\nrgb");
    int ok = 1;
    CHECK(gallai_coloring_is_gallai(rainbow, &ok) == GALLAI_OK);
    CHECK(ok == 0);
    gallai_class_info info{};
    CHECK(gallai_coloring_classify(rainbow, &info) == GALLAI_E_NOT_GALLAI);
    gallai_extension_count w{};
    CHECK(gallai_count_extensions(rainbow, &w) == GALLAI_E_NOT_GALLAI);
    gallai_coloring_free(rainbow);

    gallai_counts counts{};
    CHECK(gallai_count(9, 1, nullptr, nullptr, &counts) == GALLAI_E_UNSUPPORTED_SIZE);
    CHECK(gallai_count(1, 1, nullptr, nullptr, &counts) == GALLAI_E_INVALID_ARGUMENT);
    CHECK(gallai_count(4, 1, nullptr, nullptr, nullptr) == GALLAI_E_INVALID_ARGUMENT);
    CHECK(gallai_coloring_make_special(4, 42, 0, 1, 2, &phi) == GALLAI_E_INVALID_ARGUMENT);
    CHECK(gallai_coloring_make_special(4, GALLAI_MONOCHROMATIC, 5, 0, 0, &phi) == GALLAI_E_INVALID_ARGUMENT);

    CHECK(std::string(gallai_status_name(GALLAI_E_NOT_GALLAI)) == "not-gallai");
    CHECK(std::string(gallai_kind_name(GALLAI_NON_SPECIAL)) == "NonSpecial");
    CHECK(std::string(gallai_kind_name(99)) == "unknown");
}

TEST_CASE("classification and extensions through the C interface") {
    gallai_coloring* phi = nullptr;
    REQUIRE(gallai_coloring_make_special(6, GALLAI_THREE_COLOR_EDGE_SPECIAL, 0, 1, 2, &phi) == GALLAI_OK);
    gallai_class_info info{};
    REQUIRE(gallai_coloring_classify(phi, &info) == GALLAI_OK);
    CHECK(info.kind == GALLAI_THREE_COLOR_EDGE_SPECIAL);
    CHECK(info.colors_used == 3);
    CHECK(info.witness_vertex == -1);
    CHECK(info.witness_edges == 2);
    unsigned mask = 0;
    CHECK(gallai_coloring_colors_used(phi, &mask) == GALLAI_OK);
    CHECK(mask == 7u);

    gallai_extension_count w{};
    REQUIRE(gallai_count_extensions(phi, &w) == GALLAI_OK);
    CHECK(w.total == 67);
    std::vector<std::string> stars;
    REQUIRE(gallai_list_extensions(phi, collect, &stars) == GALLAI_OK);
    CHECK(stars.size() == 67);
    CHECK(stars.front() == "rrrrrr");

    gallai_coloring* smaller = nullptr;
    REQUIRE(gallai_coloring_restrict(phi, 5, &smaller) == GALLAI_OK);
    CHECK(gallai_coloring_vertex_count(smaller) == 5);
    std::uint64_t a = 0, b = 0;
    CHECK(gallai_coloring_canonical_code(smaller, &a) == GALLAI_OK);
    gallai_coloring* again = nullptr;
    REQUIRE(gallai_coloring_make_special(5, GALLAI_THREE_COLOR_EDGE_SPECIAL, 1, 2, 0, &again) == GALLAI_OK);
    CHECK(gallai_coloring_canonical_code(again, &b) == GALLAI_OK);
    CHECK(a == b);
    gallai_coloring_free(again);
    gallai_coloring_free(smaller);
    gallai_coloring_free(phi);
}

TEST_CASE("counts, catalogs and bounds") {
    gallai_counts r{};
    REQUIRE(gallai_count(5, 2, nullptr, nullptr, &r) == GALLAI_OK);
    CHECK(r.c == 6129);
    gallai_counts by_ext{};
    REQUIRE(gallai_count_by_extension(5, &by_ext) == GALLAI_OK);
    CHECK(by_ext.c3 == r.c3);

    gallai_class_filter f{3, 0, 0};
    gallai_catalog* catalog = nullptr;
    REQUIRE(gallai_catalog_build(5, &f, &catalog) == GALLAI_OK);
    CHECK(gallai_catalog_size(catalog) == 5);
    for (size_t i = 0; i < gallai_catalog_size(catalog); ++i) {
        gallai_class_info info{};
        std::uint64_t code = 0, orbit = 0, again = 0;
        REQUIRE(gallai_catalog_entry(catalog, i, &code, &orbit, &info) == GALLAI_OK);
        CHECK(info.kind == GALLAI_NON_SPECIAL);
        CHECK(orbit > 0);
        CHECK(gallai_coloring_canonical_code(gallai_catalog_coloring(catalog, i), &again) == GALLAI_OK);
        CHECK(again == code);
    }
    CHECK(gallai_catalog_coloring(catalog, 5) == nullptr);
    CHECK(gallai_catalog_entry(catalog, 5, nullptr, nullptr, nullptr) == GALLAI_E_INVALID_ARGUMENT);
    gallai_catalog_free(catalog);

    gallai_bound_table* table = nullptr;
    REQUIRE(gallai_bound_table_build(9, &r, 1, &table) == GALLAI_OK);
    REQUIRE(gallai_bound_table_rows(table) == 8);
    CHECK(gallai_bound_table_n(table, 3) == 5);
    CHECK(std::string(gallai_bound_table_field(table, 3, GALLAI_BOUND_EXACT_C)) == "6129");
    CHECK(std::string(gallai_bound_table_field(table, 3, GALLAI_BOUND_K)) == "105/16");
    CHECK(std::string(gallai_bound_table_field(table, 4, GALLAI_BOUND_EXACT_C)).empty());
    CHECK(gallai_bound_table_field(table, 0, 7) == nullptr);
    gallai_bound_table_free(table);
}

TEST_CASE("verification and the negative control") {
    const gallai_counts_row* rows = nullptr;
    const size_t n = gallai_reference_counts(&rows);
    REQUIRE(n == 7);
    const gallai_bounds_row* bounds = nullptr;
    REQUIRE(gallai_reference_bounds(&bounds) == 7);
    CHECK(std::string(bounds[0].ratio_upper_over_c) == "14.00");

    Checks good;
    int all = 0;
    REQUIRE(gallai_verify(0, 1, nullptr, 0, on_check, &good, &all) == GALLAI_OK);
    CHECK(all == 1);
    CHECK(good.failed == 0);
    CHECK(good.criteria == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});

    std::vector<gallai_counts_row> corrupted(rows, rows + n);
    corrupted[4].c2 += 1;
    Checks bad;
    REQUIRE(gallai_verify(0, 1, corrupted.data(), corrupted.size(), on_check, &bad, &all) == GALLAI_OK);
    CHECK(all == 0);
    CHECK(bad.failed > 0);
}

#include "gallai/gallai.h"

#include <array>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gallai/bounds.hpp"
#include "gallai/coloring.hpp"
#include "gallai/enumerator.hpp"
#include "gallai/errors.hpp"
#include "gallai/extensions.hpp"
#include "gallai/golden.hpp"
#include "gallai/verification.hpp"

struct gallai_coloring {
    gallai::EdgeColoring value;
};

struct gallai_catalog {
    std::vector<gallai::CatalogEntry> entries;
    std::vector<gallai_coloring> colorings;
};

struct gallai_bound_table {
    std::vector<int> n;
    std::vector<std::array<std::string, 7>> fields;
};

namespace {

thread_local std::string last_error;

gallai_status fail(gallai_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, mapping library exceptions onto status codes.
template <class Body>
gallai_status guarded(Body&& body, std::size_t* parse_offset = nullptr) noexcept {
    try {
        last_error.clear();
        return body();
    } catch (const gallai::ParseError& e) {
        if (parse_offset) *parse_offset = e.position();
        return fail(GALLAI_E_PARSE, e.what());
    } catch (const gallai::InvalidArgument& e) {
        return fail(GALLAI_E_INVALID_ARGUMENT, e.what());
    } catch (const gallai::NotGallai& e) {
        return fail(GALLAI_E_NOT_GALLAI, e.what());
    } catch (const gallai::UnsupportedSize& e) {
        return fail(GALLAI_E_UNSUPPORTED_SIZE, e.what());
    } catch (const std::exception& e) {
        return fail(GALLAI_E_INTERNAL, e.what());
    } catch (...) {
        return fail(GALLAI_E_INTERNAL, "unknown error");
    }
}

gallai::Color to_color(int code) {
    if (code < 0 || code > 2) throw gallai::InvalidArgument("color code must be 0, 1 or 2");
    return static_cast<gallai::Color>(code);
}

gallai_class_info to_info(const gallai::ColoringClass& cls) {
    gallai_class_info info{};
    info.kind = static_cast<int>(cls.kind);
    info.colors_used = cls.colors_used;
    info.witness_vertex = cls.witness.vertex.value_or(-1);
    info.witness_edges = static_cast<int>(cls.witness.edges.size());
    for (std::size_t i = 0; i < cls.witness.edges.size() && i < 2; ++i) {
        info.edge_lo[i] = cls.witness.edges[i].lo;
        info.edge_hi[i] = cls.witness.edges[i].hi;
    }
    return info;
}

gallai_counts to_counts(const gallai::CountsRecord& r) {
    return {r.n, r.c1, r.c2, r.c3, r.c, r.elapsed_ms, r.workers};
}

#define GALLAI_REQUIRE(cond)                                                     \
    do {                                                                         \
        if (!(cond)) return fail(GALLAI_E_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

}  // namespace

extern "C" {

const char* gallai_last_error(void) { return last_error.c_str(); }

const char* gallai_status_name(gallai_status status) {
    switch (status) {
        case GALLAI_OK: return "ok";
        case GALLAI_E_INVALID_ARGUMENT: return "invalid-argument";
        case GALLAI_E_NOT_GALLAI: return "not-gallai";
        case GALLAI_E_UNSUPPORTED_SIZE: return "unsupported-size";
        case GALLAI_E_PARSE: return "parse-error";
        case GALLAI_E_BUFFER_TOO_SMALL: return "buffer-too-small";
        case GALLAI_E_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* gallai_kind_name(int kind) {
    if (kind < 0 || kind > GALLAI_NON_SPECIAL) return "unknown";
    return gallai::kind_name(static_cast<gallai::ColoringKind>(kind)).data();
}

gallai_status gallai_coloring_parse(const char* text, size_t length, gallai_coloring** out,
                                    size_t* error_offset) {
    return guarded(
        [&] {
            GALLAI_REQUIRE(out && (text || length == 0));
            *out = new gallai_coloring{gallai::parse_coloring(std::string_view(text ? text : "", length))};
            return GALLAI_OK;
        },
        error_offset);
}

gallai_status gallai_coloring_make_special(int n, int kind, int base, int accent, int second,
                                           gallai_coloring** out) {
    return guarded([&] {
        GALLAI_REQUIRE(out);
        if (kind < 0 || kind > GALLAI_NON_SPECIAL) return fail(GALLAI_E_INVALID_ARGUMENT, "unknown kind");
        if (n < 1 || n > gallai::kMaxVertices) return fail(GALLAI_E_INVALID_ARGUMENT, "n must be in [1, 12]");
        const gallai::SpecialShape shape{static_cast<gallai::ColoringKind>(kind), to_color(base),
                                         to_color(accent), to_color(second)};
        *out = new gallai_coloring{gallai::make_special(n, shape)};
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_clone(const gallai_coloring* phi, gallai_coloring** out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = new gallai_coloring{phi->value};
        return GALLAI_OK;
    });
}

void gallai_coloring_free(gallai_coloring* phi) { delete phi; }

int gallai_coloring_vertex_count(const gallai_coloring* phi) { return phi ? phi->value.vertex_count() : 0; }

gallai_status gallai_coloring_format(const gallai_coloring* phi, char* buffer, size_t capacity, size_t* needed) {
    return guarded([&] {
        GALLAI_REQUIRE(phi);
        const std::string text = gallai::format_coloring(phi->value);
        if (needed) *needed = text.size() + 1;
        if (!buffer || capacity < text.size() + 1)
            return fail(GALLAI_E_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_is_gallai(const gallai_coloring* phi, int* out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = gallai::is_gallai(phi->value) ? 1 : 0;
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_colors_used(const gallai_coloring* phi, unsigned* out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = gallai::colors_used(phi->value);
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_restrict(const gallai_coloring* phi, int vertex, gallai_coloring** out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = new gallai_coloring{gallai::restrict_coloring(phi->value, vertex)};
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_canonical_code(const gallai_coloring* phi, uint64_t* out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = gallai::canonical_code(phi->value).value;
        return GALLAI_OK;
    });
}

gallai_status gallai_coloring_classify(const gallai_coloring* phi, gallai_class_info* out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        *out = to_info(gallai::classify(phi->value));
        return GALLAI_OK;
    });
}

gallai_status gallai_count_extensions(const gallai_coloring* phi, gallai_extension_count* out) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && out);
        const auto w = gallai::count_extensions(phi->value);
        *out = {w.total, w.all_three_colors};
        return GALLAI_OK;
    });
}

gallai_status gallai_list_extensions(const gallai_coloring* phi, gallai_star_fn fn, void* user) {
    return guarded([&] {
        GALLAI_REQUIRE(phi && fn);
        for (const auto& star : gallai::list_extensions(phi->value)) fn(star.to_string().c_str(), user);
        return GALLAI_OK;
    });
}

gallai_status gallai_count(int n, int threads, gallai_progress_fn progress, void* user, gallai_counts* out) {
    return guarded([&] {
        GALLAI_REQUIRE(out);
        gallai::ProgressFn cb;
        if (progress) cb = [=](std::uint64_t done, std::uint64_t total) { progress(done, total, user); };
        *out = to_counts(gallai::count_gallai(n, threads, cb));
        return GALLAI_OK;
    });
}

gallai_status gallai_count_by_extension(int n, gallai_counts* out) {
    return guarded([&] {
        GALLAI_REQUIRE(out);
        *out = to_counts(gallai::count_gallai_by_extension(n));
        return GALLAI_OK;
    });
}

gallai_status gallai_catalog_build(int n, const gallai_class_filter* filter, gallai_catalog** out) {
    return guarded([&] {
        GALLAI_REQUIRE(out);
        gallai::ClassFilter f;
        if (filter) {
            if (filter->colors_used < 0 || filter->colors_used > 3)
                return fail(GALLAI_E_INVALID_ARGUMENT, "colors_used filter must be 0..3");
            if (filter->colors_used) f.colors_used = filter->colors_used;
            if (filter->special >= 0) f.special = filter->special != 0;
            if (filter->has_mono_vertex >= 0) f.has_monochromatic_vertex = filter->has_mono_vertex != 0;
        }
        auto catalog = std::make_unique<gallai_catalog>();
        catalog->entries = gallai::enumerate_classes(n, f);
        for (const auto& e : catalog->entries) catalog->colorings.push_back({e.representative});
        *out = catalog.release();
        return GALLAI_OK;
    });
}

size_t gallai_catalog_size(const gallai_catalog* catalog) { return catalog ? catalog->entries.size() : 0; }

const gallai_coloring* gallai_catalog_coloring(const gallai_catalog* catalog, size_t index) {
    if (!catalog || index >= catalog->colorings.size()) return nullptr;
    return &catalog->colorings[index];
}

gallai_status gallai_catalog_entry(const gallai_catalog* catalog, size_t index, uint64_t* code,
                                   uint64_t* orbit_size, gallai_class_info* info) {
    return guarded([&] {
        GALLAI_REQUIRE(catalog);
        if (index >= catalog->entries.size()) return fail(GALLAI_E_INVALID_ARGUMENT, "catalog index out of range");
        const auto& e = catalog->entries[index];
        if (code) *code = e.code.value;
        if (orbit_size) *orbit_size = e.orbit_size;
        if (info) *info = to_info(e.cls);
        return GALLAI_OK;
    });
}

void gallai_catalog_free(gallai_catalog* catalog) { delete catalog; }

gallai_status gallai_bound_table_build(int max_n, const gallai_counts* exact, size_t exact_count,
                                       gallai_bound_table** out) {
    return guarded([&] {
        GALLAI_REQUIRE(out && (exact || exact_count == 0));
        std::map<int, std::uint64_t> known;
        for (size_t i = 0; i < exact_count; ++i) known[exact[i].n] = exact[i].c;
        auto table = std::make_unique<gallai_bound_table>();
        for (const auto& row : gallai::bound_table(max_n, known)) {
            table->n.push_back(row.n);
            table->fields.push_back({row.exact_c ? row.exact_c->str() : std::string(), row.lower.str(),
                                     row.upper.str(), row.f.str(), gallai::to_string(row.k),
                                     row.ratio_upper_over_c, row.ratio_c_over_lower});
        }
        *out = table.release();
        return GALLAI_OK;
    });
}

size_t gallai_bound_table_rows(const gallai_bound_table* table) { return table ? table->n.size() : 0; }

int gallai_bound_table_n(const gallai_bound_table* table, size_t row) {
    if (!table || row >= table->n.size()) return 0;
    return table->n[row];
}

const char* gallai_bound_table_field(const gallai_bound_table* table, size_t row, int field) {
    if (!table || row >= table->fields.size() || field < 0 || field > GALLAI_BOUND_RATIO_C_OVER_LOWER)
        return nullptr;
    return table->fields[row][field].c_str();
}

void gallai_bound_table_free(gallai_bound_table* table) { delete table; }

size_t gallai_reference_counts(const gallai_counts_row** rows) {
    static const std::vector<gallai_counts_row> table = [] {
        std::vector<gallai_counts_row> out;
        for (const auto& r : gallai::golden::counts_table()) out.push_back({r.n, r.c1, r.c2, r.c3, r.c});
        return out;
    }();
    if (rows) *rows = table.data();
    return table.size();
}

size_t gallai_reference_bounds(const gallai_bounds_row** rows) {
    static const std::vector<gallai_bounds_row> table = [] {
        std::vector<gallai_bounds_row> out;
        for (const auto& r : gallai::golden::bounds_table())
            out.push_back({r.n, r.c, r.lower, r.upper, r.ratio_upper_over_c.data(), r.ratio_c_over_lower.data()});
        return out;
    }();
    if (rows) *rows = table.data();
    return table.size();
}

gallai_status gallai_verify(int deep, int threads, const gallai_counts_row* reference, size_t reference_count,
                            gallai_check_fn fn, void* user, int* all_passed) {
    return guarded([&] {
        GALLAI_REQUIRE(all_passed && (reference || reference_count == 0));
        std::vector<gallai::golden::CountsRow> rows;
        gallai::VerifyOptions opts;
        opts.deep = deep != 0;
        opts.threads = threads;
        if (reference) {
            for (size_t i = 0; i < reference_count; ++i)
                rows.push_back({reference[i].n, reference[i].c1, reference[i].c2, reference[i].c3, reference[i].c});
            opts.counts = rows;
        }
        if (fn)
            opts.on_result = [&](const gallai::CheckResult& r) {
                fn(r.criterion, r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
            };
        *all_passed = gallai::all_passed(gallai::run_verification(opts)) ? 1 : 0;
        return GALLAI_OK;
    });
}

}  // extern "C"

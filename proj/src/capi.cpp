#include "su3fusion.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "fusion_table.hpp"
#include "genfun.hpp"
#include "multiplicity.hpp"
#include "oblade.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename F>
su3f_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SU3F_EINVAL;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SU3F_EDOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SU3F_EINTERNAL;
    }
}

su3f::Format cxx_format(su3f_format f) {
    switch (f) {
        case SU3F_TEXT:
            return su3f::Format::Text;
        case SU3F_JSON:
            return su3f::Format::Json;
        case SU3F_TSV:
            return su3f::Format::Tsv;
        case SU3F_SVG:
            return su3f::Format::Svg;
    }
    throw std::invalid_argument("unknown format selector");
}

su3f::Weight make_weight(int l1, int l2) {
    const su3f::Weight w{l1, l2};
    if (!su3f::dominant(w))
        throw std::invalid_argument("weight components must be non-negative");
    return w;
}

su3f::Triple make_triple(int l1, int l2, int m1, int m2, int n1, int n2) {
    return {make_weight(l1, l2), make_weight(m1, m2), make_weight(n1, n2)};
}

void write_out(char** out, const std::string& s) {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = dup_string(s);
}

}  // namespace

struct su3f_table {
    su3f::FusionTable t;
};

extern "C" {

const char* su3f_version(void) { return "1.0.0"; }

const char* su3f_last_error(void) { return g_last_error.c_str(); }

void su3f_string_free(char* s) { std::free(s); }

su3f_status su3f_fusion_coefficient(int l1, int l2, int m1, int m2, int n1, int n2,
                                    int level, int64_t* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output pointer");
        if (level < 0 && level != SU3F_LEVEL_INF)
            throw std::invalid_argument("level must be >= 0 or SU3F_LEVEL_INF");
        *out = su3f::fusion_coefficient(make_triple(l1, l2, m1, m2, n1, n2), level);
        return SU3F_OK;
    });
}

su3f_status su3f_thresholds(int l1, int l2, int m1, int m2, int n1, int n2, int* k0_min,
                            int* k0_max) {
    return guarded([&] {
        if (!k0_min || !k0_max) throw std::invalid_argument("null output pointer");
        const su3f::ThresholdPair th =
            su3f::thresholds(make_triple(l1, l2, m1, m2, n1, n2));
        *k0_min = th.k0_min;
        *k0_max = th.k0_max;
        return SU3F_OK;
    });
}

su3f_status su3f_table_create(int level, su3f_table** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output pointer");
        *out = new su3f_table{su3f::build_table(level)};
        return SU3F_OK;
    });
}

void su3f_table_destroy(su3f_table* t) { delete t; }

int su3f_table_size(const su3f_table* t) { return t ? t->t.size() : 0; }

su3f_status su3f_table_verify(const su3f_table* t, char** first_violation) {
    return guarded([&] {
        if (!t) throw std::invalid_argument("null table");
        const su3f::TableReport r = su3f::verify_table(t->t);
        if (r.ok) {
            if (first_violation) *first_violation = nullptr;
            return SU3F_OK;
        }
        g_last_error = r.first_violation;
        if (first_violation) *first_violation = dup_string(r.first_violation);
        return SU3F_EVERIFY;
    });
}

su3f_status su3f_table_render(const su3f_table* t, su3f_format f, char** out) {
    return guarded([&] {
        if (!t) throw std::invalid_argument("null table");
        write_out(out, su3f::render_table(t->t, cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_table_matrix_render(const su3f_table* t, int l1, int l2, su3f_format f,
                                     char** out) {
    return guarded([&] {
        if (!t) throw std::invalid_argument("null table");
        write_out(out, su3f::render_matrix(t->t, make_weight(l1, l2), cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_product_render(int level, int l1, int l2, int m1, int m2,
                                int conjugate_rhs, su3f_format f, char** out) {
    return guarded([&] {
        const su3f::Weight lam = make_weight(l1, l2);
        su3f::Weight mu = make_weight(m1, m2);
        if (conjugate_rhs) mu = su3f::conjugate(mu);
        write_out(out, su3f::render_product(su3f::product(level, lam, mu), cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_thresholds_table_render(int l1, int l2, int m1, int m2, int level,
                                         su3f_format f, char** out) {
    return guarded([&] {
        if (level < 0 && level != SU3F_LEVEL_INF)
            throw std::invalid_argument("level must be >= 0 or SU3F_LEVEL_INF");
        write_out(out, su3f::render_thresholds(make_weight(l1, l2), make_weight(m1, m2),
                                               level, cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_psi_render(int l1, int l2, int m1, int m2, int n1, int n2, su3f_format f,
                            char** out) {
    return guarded([&] {
        write_out(out,
                  su3f::render_psi(make_triple(l1, l2, m1, m2, n1, n2), cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_oblades_count(int l1, int l2, int m1, int m2, int n1, int n2,
                               int64_t* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null output pointer");
        *out = static_cast<int64_t>(
            su3f::enumerate_couplings(make_triple(l1, l2, m1, m2, n1, n2)).size());
        return SU3F_OK;
    });
}

su3f_status su3f_oblades_render(int l1, int l2, int m1, int m2, int n1, int n2,
                                su3f_format f, char** out) {
    return guarded([&] {
        write_out(out,
                  su3f::render_oblades(make_triple(l1, l2, m1, m2, n1, n2), cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_oblade_render(int l1, int l2, int m1, int m2, int n1, int n2, int index,
                               char** out) {
    return guarded([&] {
        const std::vector<su3f::OBlade> obs =
            su3f::enumerate_couplings(make_triple(l1, l2, m1, m2, n1, n2));
        if (index < 0 || index >= static_cast<int>(obs.size()))
            throw std::invalid_argument("pictograph index out of range");
        write_out(out, su3f::render_oblade_svg(obs[static_cast<size_t>(index)]));
        return SU3F_OK;
    });
}

su3f_status su3f_paths_table_render(int max_level, su3f_format f, char** out) {
    return guarded([&] {
        if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
        write_out(out, su3f::render_paths(max_level, cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_genfun_verify_render(int level, int seed_fault, char** out) {
    return guarded([&] {
        const su3f::IdentityReport r = su3f::verify_identities(level, seed_fault != 0);
        write_out(out, su3f::render_identity_report(r));
        if (r.all_ok) return SU3F_OK;
        g_last_error = r.first_failure;
        return SU3F_EVERIFY;
    });
}

su3f_status su3f_verlinde_render(int level, su3f_format f, char** out) {
    return guarded([&] {
        write_out(out, su3f::render_verlinde(level, cxx_format(f)));
        return SU3F_OK;
    });
}

su3f_status su3f_verify_suite(const char* suite, int max_level, int max_weight,
                              unsigned flags, char** report) {
    return guarded([&] {
        su3f::VerifyOptions o;
        o.suite = suite ? suite : "";
        o.max_level = max_level;
        o.max_weight = max_weight;
        o.seed_fault = (flags & 1u) != 0;
        const su3f::VerifyResult r = su3f::run_verify(o);
        write_out(report, r.text);
        if (r.ok) return SU3F_OK;
        g_last_error = "verification failures; see report";
        return SU3F_EVERIFY;
    });
}

}  // extern "C"

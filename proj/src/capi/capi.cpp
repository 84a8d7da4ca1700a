#include "parendist/parendist.h"

#include <cstring>
#include <string>

#include "bench.hpp"
#include "core.hpp"
#include "exact.hpp"
#include "fold.hpp"
#include "io.hpp"
#include "ptas.hpp"
#include "small_distance.hpp"
#include "subquadratic.hpp"
#include "testkit.hpp"

using namespace parendist;

struct pd_string {
    ParenString value;
};

namespace {

thread_local std::string g_last_error;

pd_status fail(pd_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
pd_status guard(Fn&& fn) {
    try {
        fn();
        return PD_OK;
    } catch (const ParseError& e) {
        return fail(PD_EPARSE, e.what());
    } catch (const CapExceeded& e) {
        return fail(PD_ECAP, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PD_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(PD_EINTERNAL, e.what());
    }
}

int effective_cap(int64_t cap) {
    return cap > 0 ? static_cast<int>(cap) : kDefaultExactCap;
}

subq::GapOverrides to_overrides(const pd_gap_params* p) {
    subq::GapOverrides o;
    if (!p) return o;
    if (p->s1 > 0) o.s1 = static_cast<int>(p->s1);
    if (p->s2 > 0) o.s2 = static_cast<int>(p->s2);
    if (p->delta > 0) o.delta = static_cast<int>(p->delta);
    if (p->k1 > 0) o.k1 = p->k1;
    if (p->k2 > 0) o.k2 = p->k2;
    if (p->threads > 0) o.threads = p->threads;
    return o;
}

}  // namespace

extern "C" {

const char* pd_version(void) { return "parendist 1.0.0"; }

const char* pd_last_error(void) { return g_last_error.c_str(); }

pd_status pd_string_parse(const char* text, size_t len, pd_string** out) {
    if (!text || !out) return fail(PD_EINVAL, "null argument");
    return guard([&] { *out = new pd_string{parse_input(std::string(text, len))}; });
}

pd_status pd_string_from_ints(int32_t type_count, const int32_t* symbols, size_t count,
                              pd_string** out) {
    if (!out || (count > 0 && !symbols)) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        std::vector<Symbol> syms(count);
        for (size_t i = 0; i < count; ++i) {
            if (symbols[i] == 0 || symbols[i] > type_count || symbols[i] < -type_count)
                throw std::invalid_argument("symbol outside alphabet");
            syms[i] = static_cast<Symbol>(symbols[i]);
        }
        *out = new pd_string{ParenString(Alphabet(type_count), std::move(syms))};
    });
}

void pd_string_free(pd_string* s) { delete s; }

size_t pd_string_length(const pd_string* s) { return s ? s->value.size() : 0; }

pd_status pd_string_reduced_length(const pd_string* s, int kind, size_t* out) {
    if (!s || !out || (kind != 0 && kind != 1)) return fail(PD_EINVAL, "bad argument");
    return guard([&] {
        *out = kind == 0 ? reduce_dyck(s->value.symbols()).size()
                         : reduce_fold(s->value.symbols()).size();
    });
}

pd_status pd_string_serialize(const pd_string* s, char* buf, size_t cap, size_t* needed) {
    if (!s || !needed) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        std::string text = serialize(s->value);
        *needed = text.size();
        if (buf && cap > 0) {
            size_t n = std::min(cap - 1, text.size());
            std::memcpy(buf, text.data(), n);
            buf[n] = '\0';
        }
    });
}

pd_status pd_generate(int32_t pair_count, int32_t type_count, uint64_t seed, int32_t edits,
                      pd_string** out) {
    if (!out) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        ParenString base = testkit::gen_balanced(pair_count, type_count, seed);
        *out = new pd_string{edits > 0 ? testkit::perturb(base, edits, seed ^ 0x9e3779b9ULL)
                                       : base};
    });
}

pd_status pd_generate_hard(int32_t length, int32_t scars, int32_t type_count, uint64_t seed,
                           pd_string** out) {
    if (!out) return fail(PD_EINVAL, "null argument");
    return guard(
        [&] { *out = new pd_string{bench::gen_hard_nested(length, scars, type_count, seed)}; });
}

pd_status pd_dyck_exact(const pd_string* s, const char* method, int64_t cap, int64_t* value) {
    if (!s || !value || !method) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        std::string m(method);
        if (m == "cubic")
            *value = exact_dyck_cubic(s->value, effective_cap(cap)).value;
        else if (m == "pivots")
            *value = exact_dyck_pivots(s->value);
        else
            throw std::invalid_argument("unknown method: " + m);
    });
}

pd_status pd_dyck_ptas(const pd_string* s, double epsilon, int64_t* value) {
    if (!s || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] { *value = dyck_ptas(s->value, epsilon); });
}

pd_status pd_dyck_small(const pd_string* s, int64_t d, double epsilon, int* exceeds,
                        int64_t* value) {
    if (!s || !exceeds || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        DyckSmallResult r = dyck_small(s->value, static_cast<int>(d), epsilon);
        *exceeds = r.exceeds() ? 1 : 0;
        if (!r.exceeds()) *value = *r.value;
    });
}

pd_status pd_gap_est(const pd_string* s, double theta, uint64_t seed,
                     const pd_gap_params* params, int64_t* value, pd_gap_info* info) {
    if (!s || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        subq::GapReport r =
            subq::gap_dyck_est(s->value, Theta::from_double(theta), seed, to_overrides(params));
        *value = r.estimate;
        if (info) {
            info->n_padded = r.n_padded;
            info->grid_large = r.grid_large;
            info->grid_small = r.grid_small;
            info->certified_entries = r.certified_entries;
            info->s1 = r.params.s1;
            info->s2 = r.params.s2;
            info->delta = r.params.delta;
            info->phases = r.phases;
        }
    });
}

pd_status pd_dyck_est(const pd_string* s, uint64_t seed, const pd_gap_params* params,
                      int64_t* value, int* used_gap) {
    if (!s || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] {
        subq::DyckEstReport r = subq::dyck_est(s->value, seed, to_overrides(params));
        *value = r.estimate;
        if (used_gap) *used_gap = r.path == "gap" ? 1 : 0;
    });
}

pd_status pd_fold_exact(const pd_string* s, int64_t cap, int64_t* value) {
    if (!s || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] { *value = exact_fold(s->value, effective_cap(cap)); });
}

pd_status pd_fold_approx(const pd_string* s, int64_t tau, int64_t* value) {
    if (!s || !value) return fail(PD_EINVAL, "null argument");
    return guard([&] { *value = fold_approx(s->value, tau); });
}

}  // extern "C"

#include "sharesim/kernels.hpp"

#include "sharesim/errors.hpp"

#include <cstdlib>
#include <string>

namespace sharesim::kernels {
namespace {

struct Dispatch {
    Backend backend;
    const Ops* table;
};

Dispatch resolve_initial() {
    Backend b = avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    if (const char* env = std::getenv("SHARESIM_KERNELS")) {
        const std::string requested = env;
        if (requested == "scalar") {
            b = Backend::Scalar;
        } else if (requested == "avx2") {
            if (!avx2_supported())
                throw ValidationError("SHARESIM_KERNELS=avx2 but this CPU has no AVX2");
            b = Backend::Avx2;
        } else {
            throw ValidationError("SHARESIM_KERNELS must be 'scalar' or 'avx2', got '" +
                                  requested + "'");
        }
    }
    return {b, b == Backend::Avx2 ? &avx2_ops() : &scalar_ops()};
}

Dispatch& dispatch() {
    static Dispatch d = resolve_initial();
    return d;
}

} // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Ops& ops() { return *dispatch().table; }

Backend active_backend() { return dispatch().backend; }

std::string backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported())
        throw ValidationError("AVX2 backend requested but not supported by this CPU");
    dispatch() = {b, b == Backend::Avx2 ? &avx2_ops() : &scalar_ops()};
}

} // namespace sharesim::kernels

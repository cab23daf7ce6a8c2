#include "rdsnet/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rdsnet::kernels {

namespace {

const Ops& select() {
    const char* env = std::getenv("RDSNET_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (const Ops* simd = avx2_ops()) return *simd;
    return scalar_ops();
}

} // namespace

const Ops& active() {
    static const Ops& ops = select();
    return ops;
}

} // namespace rdsnet::kernels

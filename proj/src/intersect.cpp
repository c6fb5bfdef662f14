#include "rewire/intersect.hpp"

#include <algorithm>
#include <atomic>

#include "rewire/errors.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)
#include <arm_neon.h>
#define REWIRE_HAVE_NEON 1
#else
#define REWIRE_HAVE_NEON 0
#endif

namespace rewire::simd {

std::size_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < na && j < nb) {
        const std::uint32_t av = a[i], bv = b[j];
        if (av < bv) {
            ++i;
        } else if (bv < av) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

namespace {

// One side is much shorter: binary-search each of its elements in the
// remaining suffix of the longer side.
std::size_t intersect_count_gallop(const std::uint32_t* small, std::size_t ns,
                                   const std::uint32_t* big, std::size_t nb) {
    std::size_t count = 0;
    const std::uint32_t* lo = big;
    const std::uint32_t* end = big + nb;
    for (std::size_t i = 0; i < ns && lo != end; ++i) {
        lo = std::lower_bound(lo, end, small[i]);
        if (lo != end && *lo == small[i]) {
            ++count;
            ++lo;
        }
    }
    return count;
}

constexpr std::size_t kGallopRatio = 32;

} // namespace

#if REWIRE_HAVE_NEON

bool neon_available() { return true; }

std::size_t intersect_count_neon(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0, j = 0, count = 0;
    while (i + 4 <= na && j + 4 <= nb) {
        const uint32x4_t va = vld1q_u32(a + i);
        const uint32x4_t vb = vld1q_u32(b + j);
        // compare va against all four rotations of vb
        uint32x4_t m = vceqq_u32(va, vb);
        m = vorrq_u32(m, vceqq_u32(va, vextq_u32(vb, vb, 1)));
        m = vorrq_u32(m, vceqq_u32(va, vextq_u32(vb, vb, 2)));
        m = vorrq_u32(m, vceqq_u32(va, vextq_u32(vb, vb, 3)));
        count += vaddvq_u32(vshrq_n_u32(m, 31));
        const std::uint32_t amax = a[i + 3];
        const std::uint32_t bmax = b[j + 3];
        if (amax <= bmax)
            i += 4;
        if (bmax <= amax)
            j += 4;
    }
    return count + intersect_count_scalar(a + i, na - i, b + j, nb - j);
}

#else

bool neon_available() { return false; }

std::size_t intersect_count_neon(const std::uint32_t*, std::size_t,
                                 const std::uint32_t*, std::size_t) {
    throw usage_error("NEON kernel not compiled in");
}

#endif // REWIRE_HAVE_NEON

#if !defined(__x86_64__) && !defined(_M_X64) && !defined(__i386__)

bool avx2_available() { return false; }

std::size_t intersect_count_avx2(const std::uint32_t*, std::size_t,
                                 const std::uint32_t*, std::size_t) {
    throw usage_error("AVX2 kernel not compiled in");
}

#endif

namespace {

using KernelFn = std::size_t (*)(const std::uint32_t*, std::size_t,
                                 const std::uint32_t*, std::size_t);

Impl detect_impl() {
    if (avx2_available())
        return Impl::avx2;
    if (neon_available())
        return Impl::neon;
    return Impl::scalar;
}

KernelFn kernel_for(Impl impl) {
    switch (impl) {
    case Impl::avx2:
        return &intersect_count_avx2;
    case Impl::neon:
        return &intersect_count_neon;
    default:
        return &intersect_count_scalar;
    }
}

std::atomic<Impl> g_impl{detect_impl()};
std::atomic<KernelFn> g_kernel{kernel_for(detect_impl())};

} // namespace

void force_impl(Impl impl) {
    if (impl == Impl::auto_detect)
        impl = detect_impl();
    if (impl == Impl::avx2 && !avx2_available())
        throw usage_error("AVX2 not supported on this CPU/build");
    if (impl == Impl::neon && !neon_available())
        throw usage_error("NEON not supported on this CPU/build");
    g_impl.store(impl, std::memory_order_relaxed);
    g_kernel.store(kernel_for(impl), std::memory_order_relaxed);
}

Impl active_impl() { return g_impl.load(std::memory_order_relaxed); }

const char* impl_name(Impl impl) {
    switch (impl) {
    case Impl::auto_detect:
        return "auto";
    case Impl::scalar:
        return "scalar";
    case Impl::avx2:
        return "avx2";
    case Impl::neon:
        return "neon";
    }
    return "?";
}

std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b) {
    const std::size_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0)
        return 0;
    if (na * kGallopRatio < nb)
        return intersect_count_gallop(a.data(), na, b.data(), nb);
    if (nb * kGallopRatio < na)
        return intersect_count_gallop(b.data(), nb, a.data(), na);
    return g_kernel.load(std::memory_order_relaxed)(a.data(), na, b.data(), nb);
}

void intersect(std::span<const std::uint32_t> a,
               std::span<const std::uint32_t> b,
               std::vector<std::uint32_t>& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    const std::size_t na = a.size(), nb = b.size();
    while (i < na && j < nb) {
        const std::uint32_t av = a[i], bv = b[j];
        if (av < bv) {
            ++i;
        } else if (bv < av) {
            ++j;
        } else {
            out.push_back(av);
            ++i;
            ++j;
        }
    }
}

} // namespace rewire::simd

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rewire::simd {

enum class Impl {
    auto_detect, // pick the best kernel the CPU supports
    scalar,
    avx2,
    neon,
};

// Number of elements common to two ascending, duplicate-free id arrays.
// Dispatches to the selected kernel; heavily skewed inputs take a galloping
// path regardless of kernel.
std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b);

// Materialized intersection of two ascending, duplicate-free id arrays.
void intersect(std::span<const std::uint32_t> a,
               std::span<const std::uint32_t> b,
               std::vector<std::uint32_t>& out);

// Force a specific kernel (tests, benchmarking, --no-simd). Throws
// usage_error if the kernel is not compiled in / supported by this CPU.
void force_impl(Impl impl);
Impl active_impl();
const char* impl_name(Impl impl);

// Raw kernels, exposed so equivalence tests can target them directly.
std::size_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb);
bool avx2_available();
std::size_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb);
bool neon_available();
std::size_t intersect_count_neon(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb);

} // namespace rewire::simd

#pragma once

// Single-threaded reference versions of the parallel kernels. They share no
// traversal code with the parallel paths and exist for the test suites and
// the benchmark.

#include <cstdint>
#include <string_view>

#include "hooksum/bignat.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/lattice_paths.hpp"
#include "hooksum/partition.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum::reference {

// Plain depth-first backtracking from the empty filling.
BigNatural syt_enumerate_count(const Partition& p, std::uint64_t cap = kDefaultTableauCap);

// Running sum over enumerate_hook in order.
BigNatural hook_sum_direct(HookBound h, std::uint64_t n);

// Materializes every path and sums count_humps.
BigNatural total_humps_enumerate(PathKind kind, std::uint64_t n, std::uint64_t cap = 0);

// In-order scan with early exit.
VerificationReport verify(std::string_view identity, std::uint64_t lo, std::uint64_t hi,
                          const VerifyOptions& options = {});

} // namespace hooksum::reference

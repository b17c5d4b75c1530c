#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edr/io.hpp"

namespace edr::cli {

// Exit code contract: 0 success, 1 negative decision (unsolvable / not
// isomorphic / failed verification), 2 input error, 3 internal invariant
// violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct Options {
    std::optional<SmithStrategy> strategy;
    bool json = false;
    bool full = false;
    bool each = false;
    std::optional<long long> degree;  // homology degree; absent with --all
    bool all_degrees = false;
};

/// Human-readable form of a module decomposition over the given ring,
/// e.g. "Z", "Z^2 + Z/2", "Q[x]/([1,1])", "0".
std::string render_decomposition(const io::RingSpec& ring, std::size_t free_rank,
                                 const std::vector<std::string>& torsion_tokens);

int run_command(const std::string& command, const std::vector<std::string>& files,
                const Options& opts, std::ostream& out, std::ostream& err);

/// Property suites behind `edr --selftest`; the PRNG seed comes from
/// EDR_SEED when set.
int run_selftest(std::ostream& out);

}  // namespace edr::cli

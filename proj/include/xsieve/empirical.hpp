// Desk-scale ground truth: prime sieving, the twin singular series,
// representation counts and exception scans used to sanity-check the
// asymptotic constants against actual counts.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace xsieve {

struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> bits;     // bit n set <=> n prime
    std::vector<std::uint64_t> primes;

    bool is_prime(std::uint64_t n) const {
        return n <= limit && (bits[n >> 6] >> (n & 63)) & 1;
    }
    void save(const std::string& path) const;   // magic "SVKP1", LE limit, raw bits
    static PrimeTable load(const std::string& path);
};

// Segmented Eratosthenes. Throws on limits past the memory budget.
PrimeTable sieve_primes(std::uint64_t limit);

// C(N) = prod_{p|N, p>2} (p-1)/(p-2) * prod_{p>2} (1 - 1/(p-1)^2), truncated
// at `prime_cutoff` with a midpoint tail correction; *tail_halfwidth (if
// non-null) receives the correction half-width.
double singular_series(std::uint64_t N, std::uint64_t prime_cutoff,
                       double* tail_halfwidth = nullptr);

struct CountReport {
    std::uint64_t N = 0;
    std::uint64_t D = 0;      // p < N with N-p prime
    std::uint64_t D12 = 0;    // p < N with Omega(N-p) <= 2, N-p > 1
    double C_N = 0.0;
    double ratio_upper = 0.0;  // D ln^2 N / (C_N N)
    double ratio_lower = 0.0;  // D12 ln^2 N / (C_N N)
    nlohmann::json to_json() const;
};

// Prime factor count with multiplicity (Omega), by trial division over the table.
int omega(std::uint64_t n, const PrimeTable& primes);

CountReport count_representations(std::uint64_t N, const PrimeTable& primes);

// Even n <= X with no representation n = p + q. With include_literal the
// degenerate n=2 (and n<4) cases are kept, matching the raw set definition.
std::vector<std::uint64_t> exception_scan(std::uint64_t X, const PrimeTable& primes,
                                          bool include_literal = false);

struct BoundVerdict {
    std::uint64_t N;
    double ratio_upper, ratio_lower;
    double goldbach_upper, d12_lower;
    bool upper_ok, lower_ok;
    double upper_margin, lower_margin;
    nlohmann::json to_json() const;
};

BoundVerdict compare_bounds(const CountReport& report, double goldbach_upper,
                            double d12_lower);

}  // namespace xsieve

#include "xsieve/empirical.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace xsieve {

PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
    if (limit > (1ull << 34))
        throw std::runtime_error("sieve_primes: limit exceeds the memory budget");
    PrimeTable t;
    t.limit = limit;
    t.bits.assign((limit >> 6) + 1, 0);
    auto set_bit = [&](std::uint64_t n) { t.bits[n >> 6] |= 1ull << (n & 63); };

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    // small sieve up to sqrt(limit)
    std::vector<bool> small(root + 1, true);
    small[0] = small[1] = false;
    for (std::uint64_t p = 2; p * p <= root; ++p)
        if (small[p])
            for (std::uint64_t q = p * p; q <= root; q += p) small[q] = false;
    std::vector<std::uint64_t> base;
    for (std::uint64_t p = 2; p <= root; ++p)
        if (small[p]) base.push_back(p);

    const std::uint64_t seg = 1u << 20;
    std::vector<bool> mark(seg);
    for (std::uint64_t lo = 2; lo <= limit; lo += seg) {
        std::uint64_t hi = std::min(limit, lo + seg - 1);
        std::fill(mark.begin(), mark.end(), true);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t q = start; q <= hi; q += p) mark[q - lo] = false;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (mark[n - lo] && n >= 2) {
                set_bit(n);
                t.primes.push_back(n);
            }
    }
    return t;
}

void PrimeTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write("SVKP1", 5);
    std::uint64_t le = limit;  // stored little-endian; this code targets LE hosts
    out.write(reinterpret_cast<const char*>(&le), 8);
    out.write(reinterpret_cast<const char*>(bits.data()),
              static_cast<std::streamsize>(bits.size() * 8));
}

PrimeTable PrimeTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    char magic[5];
    in.read(magic, 5);
    if (!in || std::memcmp(magic, "SVKP1", 5) != 0)
        throw std::runtime_error("bad prime cache magic");
    PrimeTable t;
    in.read(reinterpret_cast<char*>(&t.limit), 8);
    t.bits.assign((t.limit >> 6) + 1, 0);
    in.read(reinterpret_cast<char*>(t.bits.data()),
            static_cast<std::streamsize>(t.bits.size() * 8));
    if (!in) throw std::runtime_error("truncated prime cache");
    for (std::uint64_t n = 2; n <= t.limit; ++n)
        if (t.is_prime(n)) t.primes.push_back(n);
    return t;
}

double singular_series(std::uint64_t N, std::uint64_t prime_cutoff, double* tail_halfwidth) {
    if (N % 2 != 0) throw std::domain_error("singular_series: N must be even");
    if (prime_cutoff < 1000) throw std::invalid_argument("singular_series: cutoff too small");
    PrimeTable t = sieve_primes(prime_cutoff);
    double log_twin = 0.0;
    for (std::uint64_t p : t.primes) {
        if (p == 2) continue;
        double x = 1.0 / ((p - 1.0) * (p - 1.0));
        log_twin += std::log1p(-x);
    }
    // tail of sum 1/(p-1)^2 beyond the cutoff, bounded by 2/(T ln T); applied
    // as a midpoint correction with half-width reported
    double bound = 2.0 / (static_cast<double>(prime_cutoff) * std::log(static_cast<double>(prime_cutoff)));
    log_twin -= 0.5 * bound;
    if (tail_halfwidth) *tail_halfwidth = 0.5 * bound;

    double n_factor = 1.0;
    std::uint64_t m = N;
    while (m % 2 == 0) m /= 2;
    for (std::uint64_t p : t.primes) {
        if (p * p > m) break;
        if (p == 2) continue;
        if (m % p == 0) {
            n_factor *= (p - 1.0) / (p - 2.0);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) n_factor *= (m - 1.0) / (m - 2.0);  // remaining odd prime factor
    return n_factor * std::exp(log_twin);
}

int omega(std::uint64_t n, const PrimeTable& primes) {
    int count = 0;
    for (std::uint64_t p : primes.primes) {
        if (p * p > n) break;
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count;
}

CountReport count_representations(std::uint64_t N, const PrimeTable& primes) {
    if (primes.limit < N) throw std::out_of_range("count_representations: prime table too small");
    CountReport r;
    r.N = N;
    for (std::uint64_t p : primes.primes) {
        if (p >= N) break;
        std::uint64_t m = N - p;
        if (primes.is_prime(m)) ++r.D;
        if (m > 1) {
            // Omega(m) <= 2 with early exit
            std::uint64_t x = m;
            int cnt = 0;
            for (std::uint64_t q : primes.primes) {
                if (q * q > x || cnt > 2) break;
                while (x % q == 0) {
                    x /= q;
                    ++cnt;
                    if (cnt > 2) break;
                }
            }
            if (x > 1) ++cnt;
            if (cnt <= 2) ++r.D12;
        }
    }
    r.C_N = singular_series(N, 1u << 20);
    double lg = std::log(static_cast<double>(N));
    r.ratio_upper = static_cast<double>(r.D) * lg * lg / (r.C_N * static_cast<double>(N));
    r.ratio_lower = static_cast<double>(r.D12) * lg * lg / (r.C_N * static_cast<double>(N));
    return r;
}

std::vector<std::uint64_t> exception_scan(std::uint64_t X, const PrimeTable& primes,
                                          bool include_literal) {
    if (primes.limit < X) throw std::out_of_range("exception_scan: prime table too small");
    std::vector<std::uint64_t> out;
    std::uint64_t start = include_literal ? 2 : 4;
    for (std::uint64_t n = start; n <= X; n += 2) {
        bool found = false;
        for (std::uint64_t p : primes.primes) {
            if (p > n / 2) break;
            if (primes.is_prime(n - p)) {
                found = true;
                break;
            }
        }
        if (!found) out.push_back(n);
    }
    return out;
}

BoundVerdict compare_bounds(const CountReport& report, double goldbach_upper,
                            double d12_lower) {
    BoundVerdict v{};
    v.N = report.N;
    v.ratio_upper = report.ratio_upper;
    v.ratio_lower = report.ratio_lower;
    v.goldbach_upper = goldbach_upper;
    v.d12_lower = d12_lower;
    v.upper_ok = report.ratio_upper <= goldbach_upper;
    v.lower_ok = report.ratio_lower >= d12_lower;
    v.upper_margin = goldbach_upper - report.ratio_upper;
    v.lower_margin = report.ratio_lower - d12_lower;
    return v;
}

nlohmann::json CountReport::to_json() const {
    nlohmann::json j;
    j["N"] = N;
    j["D"] = D;
    j["D12"] = D12;
    j["C_N"] = C_N;
    j["ratio_upper"] = ratio_upper;
    j["ratio_lower"] = ratio_lower;
    return j;
}

nlohmann::json BoundVerdict::to_json() const {
    nlohmann::json j;
    j["N"] = N;
    j["ratio_upper"] = ratio_upper;
    j["ratio_lower"] = ratio_lower;
    j["goldbach_upper"] = goldbach_upper;
    j["d12_lower"] = d12_lower;
    j["upper_ok"] = upper_ok;
    j["lower_ok"] = lower_ok;
    j["upper_margin"] = upper_margin;
    j["lower_margin"] = lower_margin;
    return j;
}

}  // namespace xsieve

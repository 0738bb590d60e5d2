#pragma once

/// Brute-force ground truth, independent of the series engine: integer
/// partition enumeration, Dyson rank statistics, rank-parity coefficients,
/// and the Kronecker symbol computed from its definition.

#include <qmock/errors.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmock {
namespace oracle {

inline constexpr int kPartitionCap = 40;

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive
};

namespace detail {
inline void gen_partitions(int n, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All partitions of n, each exactly once (empty partition for n = 0).
inline std::vector<Partition> partitions_of(int n, int cap = kPartitionCap) {
    if (n < 0 || n > cap)
        throw CapExceeded("partition enumeration capped at n = " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::gen_partitions(n, n, cur, out);
    return out;
}

/// Dyson rank: largest part minus number of parts; empty partition -> 0.
inline int rank_of(const Partition& p) {
    if (p.parts.empty())
        return 0;
    return p.parts.front() - static_cast<int>(p.parts.size());
}

/// Number of partitions of n with rank m.
inline long long rank_count(int m, int n, int cap = kPartitionCap) {
    long long count = 0;
    for (const auto& p : partitions_of(n, cap))
        if (rank_of(p) == m)
            ++count;
    return count;
}

/// Full rank distribution of n: m -> R(m, n).
inline std::map<int, long long> rank_distribution(int n, int cap = kPartitionCap) {
    std::map<int, long long> dist;
    for (const auto& p : partitions_of(n, cap))
        ++dist[rank_of(p)];
    return dist;
}

inline long long partition_count(int n, int cap = kPartitionCap) {
    return static_cast<long long>(partitions_of(n, cap).size());
}

/// Rank-parity coefficient sum_m (-1)^m R(m, n).
inline long long f_coeff_oracle(int n, int cap = kPartitionCap) {
    long long sum = 0;
    for (const auto& p : partitions_of(n, cap))
        sum += (rank_of(p) % 2 == 0) ? 1 : -1;
    return sum;
}

/// Kronecker symbol (a/n) for n >= 0, from the definition: completely
/// multiplicative over the factorization of n, with
///   (a/0) = [|a| = 1],   (a/1) = 1,
///   (a/2) = 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8),
///   (a/p) = Legendre symbol for odd primes p.
inline int kronecker(long long a, long long n) {
    if (n < 0)
        throw UnknownName("kronecker symbol defined here for n >= 0");
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0)
            return 0;
        long long r = ((a % 8) + 8) % 8;
        result *= (r == 1 || r == 7) ? 1 : -1;
    }
    for (long long p = 3; p * p <= n; p += 2) {
        while (n % p == 0) {
            n /= p;
            long long r = ((a % p) + p) % p;
            if (r == 0)
                return 0;
            // Euler's criterion: r^((p-1)/2) mod p
            long long e = (p - 1) / 2, base = r, acc = 1;
            while (e) {
                if (e & 1)
                    acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            result *= (acc == 1) ? 1 : -1;
        }
    }
    if (n > 1) { // n is an odd prime
        long long p = n;
        long long r = ((a % p) + p) % p;
        if (r == 0)
            return 0;
        long long e = (p - 1) / 2, base = r, acc = 1;
        while (e) {
            if (e & 1)
                acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result *= (acc == 1) ? 1 : -1;
    }
    return result;
}

} // namespace oracle
} // namespace qmock

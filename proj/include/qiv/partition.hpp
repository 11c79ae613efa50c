#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qiv/laurent.hpp"

namespace qiv {

/// Integer partition: a weakly decreasing finite list of positive parts.
/// The empty list is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned long> parts);  // validates monotonicity

    /// Drops trailing zeros instead of rejecting them.
    static Partition from_row_lengths(std::vector<unsigned long> rows);
    static Partition rectangle(unsigned long width, unsigned long height);
    static Partition parse(const std::string& text);  // "(4,2,1)" or "()"

    const std::vector<unsigned long>& parts() const { return parts_; }
    unsigned long size() const;    // total number of boxes
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    /// Row r (1-based); zero beyond the length.
    unsigned long row(size_t r) const { return r >= 1 && r <= parts_.size() ? parts_[r - 1] : 0; }

    bool contains(const Partition& other) const;  // other subset of this
    bool fits_in_rectangle(unsigned long width, unsigned long height) const;

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(4,2,1)", "()" for empty

private:
    std::vector<unsigned long> parts_;
};

/// Enumeration budget for the brute-force oracles, from QINTVAL_MAX_ENUM
/// (default 10^6 objects).
unsigned long enumeration_budget();

/// Visit every partition contained in a width x height rectangle.
void for_each_in_rectangle(unsigned long width, unsigned long height,
                           const std::function<void(const Partition&)>& visit);

/// sum of q^{|lambda|} over all lambda inside an a x b rectangle;
/// equals qbinom(a+b, b)_q.
LaurentPoly enumerate_in_rectangle(unsigned long a, unsigned long b);

/// The q-Pascal bijection on lambda inside (n-k)^k:
///   (0, lambda minus one box per row)  when length(lambda) = k,
///   (1, lambda)                        otherwise,
/// with |lambda| = k(1-i) + |mu|.
std::pair<int, Partition> pascal_bijection(const Partition& lambda, unsigned long n, unsigned long k);
Partition pascal_bijection_inverse(int i, const Partition& mu, unsigned long n, unsigned long k);

/// Southeast-border-path bijection between partitions in (n-k)^k and
/// k-element subsets of {1..n}; satisfies |lambda| = sum(S) - binom(k+1,2).
std::vector<unsigned long> partition_to_subset(const Partition& lambda, unsigned long n, unsigned long k);
Partition subset_to_partition(const std::vector<unsigned long>& subset, unsigned long n, unsigned long k);

/// Output of the product bijection behind the q-binomial structure constants.
struct BijectionWitness {
    unsigned long k;
    Partition alpha;  // inside (n-k)^k
    Partition beta;   // inside (k-i)^i
    Partition gamma;  // inside (i+j-k)^{k-j}
    std::vector<unsigned long> c;  // column cutoffs c_1..c_{k-i}
};

/// The Young-diagram bijection (lambda, mu) -> (k, alpha, beta, gamma) for
/// i >= j, lambda inside (n-i)^i, mu inside (n-j)^j, preserving
/// |lambda| + |mu| = (k-i)(k-j) + |alpha| + |beta| + |gamma|.
BijectionWitness qbinommult_bijection(unsigned long n, unsigned long i, unsigned long j,
                                      const Partition& lambda, const Partition& mu);

/// Exact inverse; reconstructs (lambda, mu).
std::pair<Partition, Partition> qbinommult_bijection_inverse(unsigned long n, unsigned long i,
                                                             unsigned long j, const BijectionWitness& w);

/// Number of j x k 0-1 matrices with exactly i ones and no all-zero row or
/// column, by exhaustive enumeration.
unsigned long count_matrices(unsigned long j, unsigned long k, unsigned long i);

/// Number of k-dimensional subspaces of F_p^n, by enumerating reduced
/// row-echelon bases; equals qbinom(n,k)_q at q := p.
Integer count_subspaces(unsigned long p, unsigned long n, unsigned long k);

} // namespace qiv

#include "qiv/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qiv {

Partition::Partition(std::vector<unsigned long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw precondition_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw precondition_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_row_lengths(std::vector<unsigned long> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

Partition Partition::rectangle(unsigned long width, unsigned long height) {
    if (width == 0 || height == 0) return Partition();
    return Partition(std::vector<unsigned long>(height, width));
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error("partition must look like (4,2,1) or ()");
    s = s.substr(1, s.size() - 2);
    std::vector<unsigned long> parts;
    if (!s.empty()) {
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad partition part: " + item);
            parts.push_back(std::stoul(item));
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

unsigned long Partition::size() const {
    unsigned long s = 0;
    for (unsigned long p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& other) const {
    if (other.parts_.size() > parts_.size()) return false;
    for (size_t i = 0; i < other.parts_.size(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::fits_in_rectangle(unsigned long width, unsigned long height) const {
    return parts_.size() <= height && (parts_.empty() || parts_[0] <= width);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<unsigned long> conj(parts_[0], 0);
    for (unsigned long p : parts_)
        for (unsigned long col = 0; col < p; ++col) ++conj[col];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

unsigned long enumeration_budget() {
    const char* env = std::getenv("QINTVAL_MAX_ENUM");
    if (!env || !*env) return 1000000UL;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end) throw parse_error("QINTVAL_MAX_ENUM must be a nonnegative integer");
    return v;
}

namespace {

void enum_rect(std::vector<unsigned long>& rows, unsigned long maxpart, unsigned long rows_left,
               const std::function<void(const Partition&)>& visit) {
    if (rows_left == 0 || maxpart == 0) {
        visit(Partition::from_row_lengths(rows));
        return;
    }
    // Next row length: anything from maxpart down to 0 (0 ends the partition).
    for (unsigned long len = maxpart + 1; len-- > 0;) {
        if (len == 0) {
            visit(Partition::from_row_lengths(rows));
            return;  // all shorter rows are zero too
        }
        rows.push_back(len);
        enum_rect(rows, len, rows_left - 1, visit);
        rows.pop_back();
    }
}

} // namespace

void for_each_in_rectangle(unsigned long width, unsigned long height,
                           const std::function<void(const Partition&)>& visit) {
    if (binomial(Integer(width + height), height) > Integer(enumeration_budget()))
        throw too_large_error("partition enumeration exceeds QINTVAL_MAX_ENUM");
    std::vector<unsigned long> rows;
    enum_rect(rows, width, height, visit);
}

LaurentPoly enumerate_in_rectangle(unsigned long a, unsigned long b) {
    LaurentPoly gen;
    for_each_in_rectangle(a, b, [&](const Partition& lam) { gen.add_term(static_cast<long>(lam.size()), 1); });
    return gen;
}

std::pair<int, Partition> pascal_bijection(const Partition& lambda, unsigned long n, unsigned long k) {
    if (k > n || !lambda.fits_in_rectangle(n - k, k))
        throw not_in_rectangle_error("lambda does not fit in (n-k)^k");
    if (lambda.length() == k && k > 0) {
        std::vector<unsigned long> rows;
        for (unsigned long p : lambda.parts()) rows.push_back(p - 1);
        return {0, Partition::from_row_lengths(std::move(rows))};
    }
    return {1, lambda};
}

Partition pascal_bijection_inverse(int i, const Partition& mu, unsigned long n, unsigned long k) {
    if (i == 0) {
        if (k == 0 || !mu.fits_in_rectangle(n - 1 - k, k))
            throw not_in_rectangle_error("mu does not fit in (n-1-k)^k");
        std::vector<unsigned long> rows(k, 1);
        for (size_t r = 0; r < mu.length(); ++r) rows[r] += mu.parts()[r];
        return Partition(std::move(rows));
    }
    if (!mu.fits_in_rectangle(n - k, k == 0 ? 0 : k - 1))
        throw not_in_rectangle_error("mu does not fit in (n-k)^{k-1}");
    return mu;
}

std::vector<unsigned long> partition_to_subset(const Partition& lambda, unsigned long n, unsigned long k) {
    if (k > n || !lambda.fits_in_rectangle(n - k, k))
        throw not_in_rectangle_error("lambda does not fit in (n-k)^k");
    // The i-th north step of the southeast border path (counted from the
    // bottom) has index lambda_{k+1-i} + i.
    std::vector<unsigned long> subset;
    subset.reserve(k);
    for (unsigned long i = 1; i <= k; ++i) subset.push_back(lambda.row(k + 1 - i) + i);
    return subset;
}

Partition subset_to_partition(const std::vector<unsigned long>& subset, unsigned long n, unsigned long k) {
    if (subset.size() != k) throw precondition_error("subset must have exactly k elements");
    std::vector<unsigned long> s = subset;
    std::sort(s.begin(), s.end());
    std::vector<unsigned long> rows(k, 0);
    for (unsigned long i = 1; i <= k; ++i) {
        if (s[i - 1] < i || s[i - 1] > n) throw precondition_error("subset element out of range");
        if (i > 1 && s[i - 1] == s[i - 2]) throw precondition_error("subset elements must be distinct");
        rows[k - i] = s[i - 1] - i;
    }
    Partition lambda = Partition::from_row_lengths(std::move(rows));
    if (!lambda.fits_in_rectangle(n - k, k)) throw not_in_rectangle_error("subset gives no partition in (n-k)^k");
    return lambda;
}

BijectionWitness qbinommult_bijection(unsigned long n, unsigned long i, unsigned long j,
                                      const Partition& lambda, const Partition& mu) {
    if (i < j) throw precondition_error("bijection requires i >= j");
    if (i > n || j > n) throw precondition_error("need i, j <= n");
    if (!lambda.fits_in_rectangle(n - i, i)) throw precondition_error("lambda does not fit in (n-i)^i");
    if (!mu.fits_in_rectangle(n - j, j)) throw precondition_error("mu does not fit in (n-j)^j");

    // k = max { m in [i, i+j] : the (m-j)^{m-i} rectangle fits in mu }.
    unsigned long k = i;
    for (unsigned long m = i + j; m > i; --m) {
        if (mu.contains(Partition::rectangle(m - j, m - i))) {
            k = m;
            break;
        }
    }

    // gamma: the rows of mu below the rectangle, transposed.
    std::vector<unsigned long> below;
    for (unsigned long r = k - i + 1; r <= j; ++r)
        if (mu.row(r) > 0) below.push_back(mu.row(r));
    Partition gamma = Partition::from_row_lengths(std::move(below)).conjugate();

    // Column cutoffs c_s = min { t : lambda_{t+1} <= mu_s - (i-j+s) }.
    std::vector<unsigned long> c;
    for (unsigned long s = 1; s <= k - i; ++s) {
        unsigned long threshold = mu.row(s) - (i - j + s);
        unsigned long t = 0;
        while (lambda.row(t + 1) > threshold) ++t;
        c.push_back(t);
    }

    // beta = conjugate of (c_{k-i}, ..., c_1).
    std::vector<unsigned long> crev(c.rbegin(), c.rend());
    Partition beta = Partition::from_row_lengths(std::move(crev)).conjugate();

    // alpha interleaves the reduced rows of lambda with the reduced east arms
    // of mu, block by block (c_0 = 0; empty blocks allowed).
    std::vector<unsigned long> alpha_rows;
    unsigned long prev_cut = 0;
    for (unsigned long s = 1; s <= k - i; ++s) {
        for (unsigned long r = prev_cut + 1; r <= c[s - 1]; ++r)
            alpha_rows.push_back(lambda.row(r) - (k - i - s + 1));
        alpha_rows.push_back(mu.row(s) - (k - j));
        prev_cut = c[s - 1];
    }
    for (unsigned long r = prev_cut + 1; r <= i; ++r) alpha_rows.push_back(lambda.row(r));
    Partition alpha = Partition::from_row_lengths(std::move(alpha_rows));

    BijectionWitness w{k, std::move(alpha), std::move(beta), std::move(gamma), std::move(c)};
    if (!w.alpha.fits_in_rectangle(n - k, k) || !w.beta.fits_in_rectangle(k - i, i) ||
        !w.gamma.fits_in_rectangle(i + j - k, k - j))
        throw precondition_error("bijection produced an out-of-rectangle witness");
    return w;
}

std::pair<Partition, Partition> qbinommult_bijection_inverse(unsigned long n, unsigned long i,
                                                             unsigned long j, const BijectionWitness& w) {
    if (i < j) throw precondition_error("bijection requires i >= j");
    unsigned long k = w.k;
    if (k < i || k > i + j) throw precondition_error("witness k out of range");
    if (!w.alpha.fits_in_rectangle(n - k, k) || !w.beta.fits_in_rectangle(k - i, i) ||
        !w.gamma.fits_in_rectangle(i + j - k, k - j))
        throw precondition_error("witness parts out of their rectangles");

    // Recover the cutoffs: conj(beta) = (c_{k-i}, ..., c_1), padded with zeros.
    Partition cpart = w.beta.conjugate();
    std::vector<unsigned long> c(k - i, 0);
    for (size_t idx = 0; idx < cpart.length(); ++idx) c[k - i - 1 - idx] = cpart.parts()[idx];

    // Split alpha back into lambda rows and mu arms.
    std::vector<unsigned long> lambda_rows(i, 0);
    std::vector<unsigned long> mu_rows(j, 0);
    unsigned long prev_cut = 0;
    for (unsigned long s = 1; s <= k - i; ++s) {
        for (unsigned long r = prev_cut + 1; r <= c[s - 1]; ++r)
            lambda_rows[r - 1] = w.alpha.row(r + s - 1) + (k - i - s + 1);
        mu_rows[s - 1] = w.alpha.row(c[s - 1] + s) + (k - j);
        prev_cut = c[s - 1];
    }
    for (unsigned long r = prev_cut + 1; r <= i; ++r) lambda_rows[r - 1] = w.alpha.row(r + k - i);

    // Rows of mu below the rectangle come back from gamma.
    Partition below = w.gamma.conjugate();
    for (size_t idx = 0; idx < below.length(); ++idx) mu_rows[k - i + idx] = below.parts()[idx];

    Partition lambda = Partition::from_row_lengths(std::move(lambda_rows));
    Partition mu = Partition::from_row_lengths(std::move(mu_rows));
    if (!lambda.fits_in_rectangle(n - i, i) || !mu.fits_in_rectangle(n - j, j))
        throw precondition_error("inverse produced out-of-rectangle partitions");
    return {std::move(lambda), std::move(mu)};
}

unsigned long count_matrices(unsigned long j, unsigned long k, unsigned long i) {
    if (i == 0) return (j == 0 && k == 0) ? 1 : 0;
    if (j == 0 || k == 0) return 0;
    unsigned long cells = j * k;
    if (i > cells) return 0;
    if (binomial(Integer(cells), i) > Integer(enumeration_budget()))
        throw too_large_error("matrix enumeration exceeds QINTVAL_MAX_ENUM");
    // Choose the positions of the i ones among the j*k cells.
    std::vector<unsigned long> pos(i);
    for (unsigned long t = 0; t < i; ++t) pos[t] = t;
    unsigned long count = 0;
    std::vector<char> row_hit(j), col_hit(k);
    while (true) {
        std::fill(row_hit.begin(), row_hit.end(), 0);
        std::fill(col_hit.begin(), col_hit.end(), 0);
        for (unsigned long t = 0; t < i; ++t) {
            row_hit[pos[t] / k] = 1;
            col_hit[pos[t] % k] = 1;
        }
        bool covered = std::find(row_hit.begin(), row_hit.end(), 0) == row_hit.end() &&
                       std::find(col_hit.begin(), col_hit.end(), 0) == col_hit.end();
        if (covered) ++count;
        // next combination
        long t = static_cast<long>(i) - 1;
        while (t >= 0 && pos[static_cast<size_t>(t)] == cells - i + static_cast<unsigned long>(t)) --t;
        if (t < 0) break;
        ++pos[static_cast<size_t>(t)];
        for (unsigned long u = static_cast<unsigned long>(t) + 1; u < i; ++u) pos[u] = pos[u - 1] + 1;
    }
    return count;
}

Integer count_subspaces(unsigned long p, unsigned long n, unsigned long k) {
    if (!is_prime(p)) throw not_prime_error("count_subspaces requires a prime field order");
    if (k > n) return 0;
    if (k == 0) return 1;
    unsigned long budget = enumeration_budget();
    unsigned long work = 0;
    Integer count = 0;
    // Enumerate pivot-column sets, then every fill of the free entries; each
    // assignment is a distinct reduced row-echelon basis, hence a distinct
    // k-dimensional subspace.
    std::vector<unsigned long> pivots(k);
    for (unsigned long t = 0; t < k; ++t) pivots[t] = t;
    while (true) {
        unsigned long free_cells = 0;
        for (unsigned long r = 0; r < k; ++r) free_cells += (n - 1 - pivots[r]) - (k - 1 - r);
        // Odometer over the p^free_cells fills.
        std::vector<unsigned long> fill(free_cells, 0);
        while (true) {
            if (++work > budget) throw too_large_error("subspace enumeration exceeds QINTVAL_MAX_ENUM");
            ++count;
            size_t d = 0;
            while (d < fill.size() && ++fill[d] == p) fill[d++] = 0;
            if (d == fill.size()) break;
        }
        long t = static_cast<long>(k) - 1;
        while (t >= 0 && pivots[static_cast<size_t>(t)] == n - k + static_cast<unsigned long>(t)) --t;
        if (t < 0) break;
        ++pivots[static_cast<size_t>(t)];
        for (unsigned long u = static_cast<unsigned long>(t) + 1; u < k; ++u) pivots[u] = pivots[u - 1] + 1;
    }
    return count;
}

} // namespace qiv

#include "sod/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace sod {

void WeightMultiset::add(const GLWeight& w, long long mult) {
    if (w.rank() != rank_)
        throw std::invalid_argument("weight rank does not match multiset rank");
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    entries_[w] += mult;
}

long long WeightMultiset::multiplicity(const GLWeight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

Integer WeightMultiset::total_dim() const {
    Integer t = 0;
    for (const auto& [w, m] : entries_) t += m * dim(w);
    return t;
}

namespace {

// Backtracking enumeration of Littlewood-Richardson fillings of c/a with
// content b. Cells are visited in reverse reading order (rows top to
// bottom, each row right to left), so the lattice-word condition can be
// enforced one letter at a time: placing the letter t is legal only while
// the running count of t stays at most the running count of t-1.
struct LRCounter {
    const std::vector<int>& inner;   // a, padded to the rows of c
    const std::vector<int>& outer;   // c
    const std::vector<int>& content; // b
    std::vector<std::vector<int>> cell;  // filled values, 0 = empty
    std::vector<long long> count;        // letters placed so far, 1-based
    long long total = 0;

    LRCounter(const std::vector<int>& a, const std::vector<int>& c,
              const std::vector<int>& b)
        : inner(a), outer(c), content(b), count(b.size() + 1, 0) {
        cell.resize(c.size());
        for (size_t r = 0; r < c.size(); ++r)
            cell[r].assign(static_cast<size_t>(c[r]), 0);
    }

    void run() { fill(0, outer.empty() ? -1 : outer[0] - 1); }

    void fill(size_t row, int col) {
        // Advance to the next skew cell in reverse reading order.
        while (row < outer.size() && col < inner[row]) {
            ++row;
            col = row < outer.size() ? outer[row] - 1 : -1;
        }
        if (row == outer.size()) {
            ++total;
            return;
        }
        const int letters = static_cast<int>(content.size());
        for (int t = 1; t <= letters; ++t) {
            if (count[static_cast<size_t>(t)] >= content[static_cast<size_t>(t - 1)])
                continue;
            // Lattice condition for the extended word.
            if (t > 1 && count[static_cast<size_t>(t)] >= count[static_cast<size_t>(t - 1)])
                continue;
            // Weakly increasing along the row (right neighbour filled first).
            if (col + 1 < outer[row] && t > cell[row][static_cast<size_t>(col + 1)])
                continue;
            // Strictly increasing down the column, unless the cell above
            // belongs to the inner shape.
            if (row > 0 && col >= inner[row - 1] &&
                t <= cell[row - 1][static_cast<size_t>(col)])
                continue;
            cell[row][static_cast<size_t>(col)] = t;
            ++count[static_cast<size_t>(t)];
            fill(row, col - 1);
            --count[static_cast<size_t>(t)];
            cell[row][static_cast<size_t>(col)] = 0;
        }
    }
};

std::vector<int> shape_of(const Partition& p) {
    std::vector<int> v(p.parts().begin(), p.parts().begin() + p.rows());
    return v;
}

// All partitions of `total` with at most k parts, each at most `bound`,
// containing `floor` componentwise.
void box_partitions_of(int k, int bound, long long total, const std::vector<int>& floor,
                       std::vector<int>& cur, std::vector<Partition>& out) {
    int slot = static_cast<int>(cur.size());
    if (slot == k) {
        if (total == 0) out.push_back(Partition(cur));
        return;
    }
    int lo = slot < static_cast<int>(floor.size()) ? floor[static_cast<size_t>(slot)] : 0;
    int hi = std::min<long long>(bound, total);
    // Remaining slots cannot absorb more than hi * (k - slot - 1) boxes.
    for (int v = hi; v >= lo; --v) {
        if (total - v > static_cast<long long>(v) * (k - slot - 1)) break;
        cur.push_back(v);
        box_partitions_of(k, v, total - v, floor, cur, out);
        cur.pop_back();
    }
}

}  // namespace

long long lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
    if (a.weight() + b.weight() != c.weight()) return 0;
    std::vector<int> cs = shape_of(c);
    std::vector<int> bs = shape_of(b);
    std::vector<int> as(cs.size(), 0);
    for (size_t i = 0; i < cs.size(); ++i) {
        as[i] = a.part(static_cast<int>(i));
        if (as[i] > cs[i]) return 0;  // a not contained in c
    }
    if (a.rows() > static_cast<int>(cs.size())) return 0;
    LRCounter counter(as, cs, bs);
    counter.run();
    return counter.total;
}

WeightMultiset tensor_decompose(const GLWeight& u, const GLWeight& v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("tensor_decompose requires equal ranks");
    const int k = u.rank();
    WeightMultiset result(k);
    if (k == 0) return result;

    // Normalize to partitions with determinant twists, decompose, shift back.
    const int cu = std::max(0, -u.min_entry());
    const int cv = std::max(0, -v.min_entry());
    Partition up(det_shift(u, cu).entries());
    Partition vp(det_shift(v, cv).entries());

    std::vector<Partition> candidates;
    std::vector<int> cur;
    box_partitions_of(k, up.part(0) + vp.part(0), up.weight() + vp.weight(),
                      shape_of(up), cur, candidates);
    for (const Partition& c : candidates) {
        long long m = lr_coefficient(up, vp, c);
        if (m > 0)
            result.add(det_shift(GLWeight::from_partition(c, k), -(cu + cv)), m);
    }
    return result;
}

WeightMultiset hom_decompose(const Partition& alpha, const Partition& alpha_prime, int k) {
    if (alpha.rows() > k || alpha_prime.rows() > k)
        throw std::invalid_argument("partition does not fit declared length k");
    return tensor_decompose(dual(GLWeight::from_partition(alpha, k)),
                            GLWeight::from_partition(alpha_prime, k));
}

}  // namespace sod

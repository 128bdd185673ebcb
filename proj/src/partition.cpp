#include "sod/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::padded(std::vector<int> parts, int length) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (static_cast<int>(parts.size()) > length)
        throw std::invalid_argument("partition does not fit the declared length");
    parts.resize(static_cast<size_t>(length), 0);
    return Partition(std::move(parts));
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::rows() const {
    int r = 0;
    while (r < length() && parts_[static_cast<size_t>(r)] > 0) ++r;
    return r;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool same_shape(const Partition& a, const Partition& b) {
    int r = a.rows();
    if (r != b.rows()) return false;
    for (int i = 0; i < r; ++i)
        if (a.part(i) != b.part(i)) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> conj(static_cast<size_t>(p.part(0)), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) conj[static_cast<size_t>(j)]++;
    return Partition(std::move(conj));
}

std::strong_ordering lex_compare(const Partition& p, const Partition& q) {
    if (p.length() != q.length())
        throw std::invalid_argument("lex_compare requires equal declared lengths");
    return p.parts() <=> q.parts();
}

std::vector<Partition> enumerate_box(int k, int b) {
    if (k < 1) throw std::invalid_argument("enumerate_box requires k >= 1");
    if (b < 0) throw std::invalid_argument("enumerate_box requires b >= 0");
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<size_t>(k), 0);
    // Descending choice at every slot yields decreasing lex order directly.
    auto rec = [&](auto&& self, int slot, int bound) -> void {
        if (slot == k) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, v);
        }
    };
    rec(rec, 0, b);
    return out;
}

}  // namespace sod

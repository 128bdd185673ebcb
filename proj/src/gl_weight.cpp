#include "sod/gl_weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace sod {

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i])
            throw std::invalid_argument("weight entries must be weakly decreasing");
}

GLWeight GLWeight::from_partition(const Partition& p, int rank) {
    if (p.rows() > rank)
        throw std::invalid_argument("partition has more rows than the weight rank");
    std::vector<int> e(static_cast<size_t>(rank), 0);
    for (int i = 0; i < p.rows(); ++i) e[static_cast<size_t>(i)] = p.part(i);
    return GLWeight(std::move(e));
}

int GLWeight::min_entry() const {
    return entries_.empty() ? 0 : entries_.back();
}

std::string GLWeight::str() const {
    std::string s = "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

GLWeight dual(const GLWeight& w) {
    std::vector<int> e(w.entries().rbegin(), w.entries().rend());
    for (int& x : e) x = -x;
    return GLWeight(std::move(e));
}

GLWeight det_shift(const GLWeight& w, int c) {
    std::vector<int> e = w.entries();
    for (int& x : e) x += c;
    return GLWeight(std::move(e));
}

Integer dim(const GLWeight& w) {
    const auto& e = w.entries();
    const int k = w.rank();
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= e[static_cast<size_t>(i)] - e[static_cast<size_t>(j)] + j - i;
            den *= j - i;
        }
    Integer q = num / den;
    if (q * den != num)
        throw std::logic_error("Weyl product failed to divide exactly");
    return q;
}

}  // namespace sod

#include "sod/integer.hpp"

#include <algorithm>

namespace sod {

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: a product of i consecutive integers is divisible by i!
    }
    return r;
}

}  // namespace sod

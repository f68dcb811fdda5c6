#include "borelred/matrix.hpp"

namespace borelred {

namespace {
int& max_dim_slot() {
    static int v = 8;
    return v;
}
} // namespace

int max_dimension() { return max_dim_slot(); }

void set_max_dimension(int n) {
    if (n < 1) throw DimensionError("maximum dimension must be at least 1");
    max_dim_slot() = n;
}

} // namespace borelred

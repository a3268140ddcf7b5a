#include "chernum/partition.hpp"

namespace chernum {

namespace {

void emit(int remaining, int max_part, std::vector<int>& current,
          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        emit(remaining - k, k, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    emit(n, n == 0 ? 1 : n, current, out);
    return out;
}

} // namespace chernum

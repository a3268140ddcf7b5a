#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernum {

// Integer partition: weakly decreasing list of positive parts. The empty
// partition (weight 0) indexes the constant monomial.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition single(int k) { return Partition({k}); }

    static Partition ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return static_cast<int>(parts_.size()); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool operator==(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

// Multiset union of parts: the monomial product t_a * t_b.
inline Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> m;
    m.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(m), std::greater<int>());
    return Partition(std::move(m));
}

// Canonical ordering: weight ascending, then reverse-lexicographic within a
// weight, i.e. (4) before (3,1) before (2,2) before (2,1,1) before (1,1,1,1).
// Used for map keys and for all serialized output.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

// All partitions of n in reverse-lexicographic order. n = 0 gives {()}.
std::vector<Partition> partitions_of(int n);

} // namespace chernum

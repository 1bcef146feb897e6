#pragma once

#include <memory>
#include <vector>

namespace planeperm {

// An ordered set of distinct integers. The order defines the canonical index
// of each element: element(i) has index i. Cheap to copy (shared storage).
//
// For the signed set {0..n} u {-1..-n} the canonical order is
// 0,1,...,n,-1,-2,...,-n, so index(k) = k and index(-k) = n+k.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<int> elements);

    static GroundSet one_to(int n);            // {1..n}
    static GroundSet zero_to(int n);           // {0..n}
    static GroundSet signed_zero_to(int n);    // {0..n, -1..-n}
    static GroundSet breakpoint_set(int n);    // {0..n, -1..-(n+1)}

    int size() const { return data_ ? static_cast<int>(data_->elements.size()) : 0; }
    int element(int idx) const { return data_->elements[idx]; }
    const std::vector<int>& elements() const;
    int index_of(int x) const;                 // throws std::invalid_argument if absent
    bool contains(int x) const;

    bool operator==(const GroundSet& other) const;
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<int> elements;
        std::vector<int> index;  // index[x - min] = canonical index, -1 if absent
        int min = 0;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace planeperm

#include "planeperm/ground_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planeperm {

GroundSet::GroundSet(std::vector<int> elements) {
    if (elements.empty()) throw std::invalid_argument("ground set must be non-empty");
    auto [lo, hi] = std::minmax_element(elements.begin(), elements.end());
    auto data = std::make_shared<Data>();
    data->min = *lo;
    data->index.assign(static_cast<size_t>(*hi - *lo + 1), -1);
    for (size_t i = 0; i < elements.size(); ++i) {
        int slot = elements[i] - data->min;
        if (data->index[slot] != -1)
            throw std::invalid_argument("duplicate ground element " + std::to_string(elements[i]));
        data->index[slot] = static_cast<int>(i);
    }
    data->elements = std::move(elements);
    data_ = std::move(data);
}

GroundSet GroundSet::one_to(int n) {
    if (n < 1) throw std::invalid_argument("ground {1..n} needs n >= 1");
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return GroundSet(std::move(e));
}

GroundSet GroundSet::zero_to(int n) {
    if (n < 0) throw std::invalid_argument("ground {0..n} needs n >= 0");
    std::vector<int> e(n + 1);
    for (int i = 0; i <= n; ++i) e[i] = i;
    return GroundSet(std::move(e));
}

GroundSet GroundSet::signed_zero_to(int n) {
    if (n < 1) throw std::invalid_argument("signed ground needs n >= 1");
    std::vector<int> e;
    e.reserve(2 * n + 1);
    for (int i = 0; i <= n; ++i) e.push_back(i);
    for (int i = 1; i <= n; ++i) e.push_back(-i);
    return GroundSet(std::move(e));
}

GroundSet GroundSet::breakpoint_set(int n) {
    if (n < 1) throw std::invalid_argument("breakpoint ground needs n >= 1");
    std::vector<int> e;
    e.reserve(2 * n + 2);
    for (int i = 0; i <= n; ++i) e.push_back(i);
    for (int i = 1; i <= n + 1; ++i) e.push_back(-i);
    return GroundSet(std::move(e));
}

const std::vector<int>& GroundSet::elements() const {
    static const std::vector<int> empty;
    return data_ ? data_->elements : empty;
}

int GroundSet::index_of(int x) const {
    if (!contains(x))
        throw std::invalid_argument("element " + std::to_string(x) + " not in ground set");
    return data_->index[x - data_->min];
}

bool GroundSet::contains(int x) const {
    if (!data_) return false;
    int slot = x - data_->min;
    return slot >= 0 && slot < static_cast<int>(data_->index.size()) && data_->index[slot] != -1;
}

bool GroundSet::operator==(const GroundSet& other) const {
    if (data_ == other.data_) return true;
    return elements() == other.elements();
}

}  // namespace planeperm

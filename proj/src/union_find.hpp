#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace hyperkirch::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False when a and b were already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --components_;
        return true;
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
    std::size_t components() const { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t components_;
};

}  // namespace hyperkirch::detail

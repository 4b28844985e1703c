#pragma once

#include <cstddef>
#include <vector>

namespace scvol {

/// Strictly increasing finite sequence of positive integers.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elems);  // throws unless strictly increasing, all >= 1

    /// {1, 2, ..., n}; empty for n <= 0.
    static IndexSet range(int n);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    bool contains(int v) const;
    long sum() const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<int>& elements() const { return elems_; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

private:
    std::vector<int> elems_;
};

}  // namespace scvol

#include "scvol/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scvol {

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw std::invalid_argument("IndexSet: elements must be >= 1");
        if (i > 0 && elems_[i - 1] >= elems_[i])
            throw std::invalid_argument("IndexSet: elements must be strictly increasing");
    }
}

IndexSet IndexSet::range(int n) {
    IndexSet s;
    if (n > 0) {
        s.elems_.resize(static_cast<std::size_t>(n));
        std::iota(s.elems_.begin(), s.elems_.end(), 1);
    }
    return s;
}

bool IndexSet::contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

long IndexSet::sum() const {
    return std::accumulate(elems_.begin(), elems_.end(), 0l);
}

}  // namespace scvol

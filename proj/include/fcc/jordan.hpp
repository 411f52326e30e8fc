#pragma once

#include <stdexcept>
#include <vector>

#include "fcc/ring.hpp"

namespace fcc {

// Ordered Jordan block sizes (m1,...,mr); n = sum of sizes.
class JordanSpec {
public:
    explicit JordanSpec(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
        if (sizes_.empty()) throw std::invalid_argument("JordanSpec: at least one block required");
        offsets_.reserve(sizes_.size());
        n_ = 0;
        for (int m : sizes_) {
            if (m < 1) throw std::invalid_argument("JordanSpec: block sizes must be positive");
            offsets_.push_back(n_);
            n_ += m;
        }
    }

    int n() const { return n_; }
    int nblocks() const { return static_cast<int>(sizes_.size()); }
    const std::vector<int>& sizes() const { return sizes_; }
    int size(int block) const { return sizes_[check_block(block)]; }

    // Flat coordinate index (0-based) of the inner index i (1-based) of block
    // alpha (0-based): flat = m1 + ... + m_{alpha-1} + i - 1.
    int flat(int block, int inner) const {
        if (inner < 1 || inner > sizes_[check_block(block)])
            throw std::out_of_range("JordanSpec: inner index out of range");
        return offsets_[static_cast<size_t>(block)] + inner - 1;
    }
    int block_of(int flat_index) const {
        if (flat_index < 0 || flat_index >= n_)
            throw std::out_of_range("JordanSpec: flat index out of range");
        int b = nblocks() - 1;
        while (offsets_[static_cast<size_t>(b)] > flat_index) --b;
        return b;
    }
    int inner_of(int flat_index) const {
        int b = block_of(flat_index);
        return flat_index - offsets_[static_cast<size_t>(b)] + 1;
    }

    bool operator==(const JordanSpec& o) const { return sizes_ == o.sizes_; }

private:
    size_t check_block(int block) const {
        if (block < 0 || block >= nblocks()) throw std::out_of_range("JordanSpec: block out of range");
        return static_cast<size_t>(block);
    }

    std::vector<int> sizes_;
    std::vector<int> offsets_;
    int n_ = 0;
};

}  // namespace fcc

#pragma once

#include <cstdint>
#include <vector>

namespace homcount {

/// Square symmetric bit matrix; diagonal entries are allowed (loops).
/// Backed by one or more 64-bit words per row so edge probes stay O(1).
class BitMatrix {
public:
    BitMatrix() : n_(0), words_(0) {}
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool test(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set(int i, int j, bool value = true) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + j / 64];
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        if (value) w |= mask; else w &= ~mask;
    }

    /// Sets both (i,j) and (j,i).
    void set_sym(int i, int j, bool value = true) {
        set(i, j, value);
        set(j, i, value);
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace homcount

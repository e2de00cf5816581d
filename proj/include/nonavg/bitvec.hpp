#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nonavg {

// Dense bit vector with word-level shifted-or, the workhorse of the 1-D
// subset-sum accumulation.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    // this |= (this << k) for k >= 0, or this |= (this >> -k) for k < 0.
    // Bits shifted past either end are dropped.
    void or_shift_self(std::ptrdiff_t k) {
        if (k == 0 || w_.empty()) return;
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w_.size());
        if (k > 0) {
            const std::ptrdiff_t wq = k >> 6;
            const unsigned r = static_cast<unsigned>(k & 63);
            for (std::ptrdiff_t i = n - 1; i >= wq; --i) {
                std::uint64_t v = w_[i - wq] << r;
                if (r && i - wq - 1 >= 0) v |= w_[i - wq - 1] >> (64 - r);
                w_[i] |= v;
            }
        } else {
            const std::ptrdiff_t kk = -k;
            const std::ptrdiff_t wq = kk >> 6;
            const unsigned r = static_cast<unsigned>(kk & 63);
            for (std::ptrdiff_t i = 0; i + wq < n; ++i) {
                std::uint64_t v = w_[i + wq] >> r;
                if (r && i + wq + 1 < n) v |= w_[i + wq + 1] << (64 - r);
                w_[i] |= v;
            }
        }
        mask_top();
    }

    void or_with(const BitVec& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Smallest set bit index >= from, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_next(std::size_t from) const {
        if (from >= nbits_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++wi >= w_.size()) return npos;
            cur = w_[wi];
        }
    }

    // 64 bits starting at `from`, zero-padded past the end.
    std::uint64_t window(std::size_t from) const {
        if (from >= nbits_) return 0;
        const std::size_t wi = from >> 6;
        const unsigned r = from & 63;
        std::uint64_t v = w_[wi] >> r;
        if (r && wi + 1 < w_.size()) v |= w_[wi + 1] << (64 - r);
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    void mask_top() {
        const unsigned rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (~std::uint64_t(0)) >> (64 - rem);
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace nonavg

#pragma once
// Counter-based random number generation for reproducible parallel ensembles.
//
// The generator is Philox4x32-10 (Salmon et al., SC'11). Substreams are
// addressed by a 64-bit stream id derived from a path of integer tags, so a
// simulation keyed by (master_seed, network_index, sim_index) draws the same
// numbers no matter which thread runs it or in which order.

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace rdsnet {

// One block of the Philox4x32 keyed bijection, 10 rounds.
class Philox4x32 {
public:
    Philox4x32(uint64_t key, uint64_t stream)
        : key_{static_cast<uint32_t>(key), static_cast<uint32_t>(key >> 32)},
          ctr_{0, 0, static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)},
          pos_(4) {}

    uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = block(ctr_, key_);
            // 64-bit draw counter in lanes 0..1; lanes 2..3 hold the stream id
            if (++ctr_[0] == 0) ++ctr_[1];
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    uint64_t next_u64() {
        const uint64_t lo = next_u32();
        const uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                         std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const uint64_t p0 = uint64_t{0xD2511F53u} * ctr[0];
            const uint64_t p1 = uint64_t{0xCD9E8D57u} * ctr[2];
            const std::array<uint32_t, 4> next = {
                static_cast<uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                static_cast<uint32_t>(p1),
                static_cast<uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                static_cast<uint32_t>(p0)};
            ctr = next;
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

private:
    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> ctr_;
    std::array<uint32_t, 4> buf_{};
    int pos_;
};

namespace detail {

// splitmix64 finalizer; used only to fold substream tags into a stream id.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace detail

// A stream of random values plus the distributions the simulations need.
// Distributions are implemented here rather than taken from <random> so that
// sequences are identical across standard libraries.
class RngStream {
public:
    RngStream(uint64_t master_seed, std::initializer_list<uint64_t> path)
        : master_(master_seed), path_hash_(fold(0, path)),
          gen_(master_seed, fold(0, path)) {}

    // Child stream extending this stream's tag path.
    RngStream substream(std::initializer_list<uint64_t> path) const {
        return RngStream(master_, fold(path_hash_, path));
    }

    uint64_t next_u64() { return gen_.next_u64(); }
    uint32_t next_u32() { return gen_.next_u32(); }

    // Uniform in [0,1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0,n), unbiased by rejection.
    uint64_t uniform_below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Exponential waiting time with the given mean.
    double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values uniform over [0,n), in uniformly random order.
    std::vector<uint32_t> sample_without_replacement(uint32_t n, uint32_t k) {
        if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
        std::vector<uint32_t> out;
        out.reserve(k);
        if (k * 3 >= n) {
            // dense case: partial Fisher-Yates over the full index range
            std::vector<uint32_t> idx(n);
            for (uint32_t i = 0; i < n; ++i) idx[i] = i;
            for (uint32_t i = 0; i < k; ++i) {
                const uint32_t j = i + static_cast<uint32_t>(uniform_below(n - i));
                std::swap(idx[i], idx[j]);
                out.push_back(idx[i]);
            }
        } else {
            std::unordered_set<uint32_t> seen;
            while (out.size() < k) {
                const auto v = static_cast<uint32_t>(uniform_below(n));
                if (seen.insert(v).second) out.push_back(v);
            }
        }
        return out;
    }

    uint64_t master_seed() const { return master_; }
    uint64_t stream_id() const { return path_hash_; }

private:
    RngStream(uint64_t master_seed, uint64_t path_hash)
        : master_(master_seed), path_hash_(path_hash), gen_(master_seed, path_hash) {}

    static uint64_t fold(uint64_t h, std::initializer_list<uint64_t> path) {
        for (uint64_t tag : path) h = detail::mix64(h ^ detail::mix64(tag));
        return h;
    }

    uint64_t master_;
    uint64_t path_hash_;
    Philox4x32 gen_;
};

} // namespace rdsnet

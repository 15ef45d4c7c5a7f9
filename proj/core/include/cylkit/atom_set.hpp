#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cylkit/common.hpp"

namespace cylkit {

// Fixed-universe bitset; the element type of full complex algebras.
class AtomSet {
  public:
    AtomSet() = default;
    explicit AtomSet(uint32_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static AtomSet full(uint32_t universe) {
        AtomSet s(universe);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }
    static AtomSet single(uint32_t universe, AtomId a) {
        AtomSet s(universe);
        s.insert(a);
        return s;
    }

    uint32_t universe() const { return universe_; }
    bool contains(AtomId a) const { return (words_[a >> 6] >> (a & 63)) & 1; }
    void insert(AtomId a) { words_[a >> 6] |= uint64_t{1} << (a & 63); }
    void erase(AtomId a) { words_[a >> 6] &= ~(uint64_t{1} << (a & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    uint32_t count() const {
        uint32_t c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    AtomSet operator|(const AtomSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    AtomSet operator&(const AtomSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    AtomSet operator-(const AtomSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    AtomSet operator~() const {
        AtomSet r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }
    AtomSet& operator|=(const AtomSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    AtomSet& operator&=(const AtomSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const AtomSet& o) const { return words_ == o.words_; }
    bool operator!=(const AtomSet& o) const { return words_ != o.words_; }
    bool operator<(const AtomSet& o) const { return words_ < o.words_; }

    bool subset_of(const AtomSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const AtomSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Iterates set members in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(static_cast<AtomId>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }
    std::vector<AtomId> members() const {
        std::vector<AtomId> v;
        v.reserve(count());
        for_each([&](AtomId a) { v.push_back(a); });
        return v;
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

  private:
    template <typename Op>
    AtomSet zip(const AtomSet& o, Op op) const {
        AtomSet r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }
    void trim() {
        if (universe_ % 64 && !words_.empty())
            words_.back() &= (uint64_t{1} << (universe_ % 64)) - 1;
    }

    uint32_t universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cylkit

template <>
struct std::hash<cylkit::AtomSet> {
    size_t operator()(const cylkit::AtomSet& s) const { return s.hash(); }
};

#ifndef REVARC_VERTEX_SET_HPP
#define REVARC_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace revarc {

// Subset of a fixed vertex universe [0, n), packed into 64-bit words.
// Cheap to copy at the graph sizes this library targets.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // Nonempty proper subset of the universe.
    bool proper() const { return !empty() && size() < n_; }

    VertexSet operator&(const VertexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    // Set difference: elements of *this not in o.
    VertexSet operator-(const VertexSet& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return words_ < o.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

private:
    template <class Op>
    VertexSet zip(const VertexSet& o, Op op) const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }
    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace revarc

#endif
